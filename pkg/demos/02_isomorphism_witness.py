"""Two distinct suitable sequences whose near-vector spaces are isomorphic.

Over GF(27) the sequences (1,1,5,5) and (1,1,7,7) differ, yet scaling by
q = 5 carries one onto the other: 5*(1,1,7,7) = (5,5,35,35) = (5,5,9,9),
and 9 lies in <3>, so its class is 1 -- re-sorting gives (1,1,5,5).  The
isomorphism criterion therefore declares the two spaces isomorphic, and the
witness machinery produces the concrete maps: theta permutes the two
coordinate blocks and twists the moved block by the Frobenius power 3^2 = 9,
while eta sends the scalar of a to the scalar of a^5.
"""

from nearvec import (
    FiniteField,
    build_witness,
    isomorphic,
    quotient_group,
    scale,
    verify_witness,
)

G = quotient_group(3, 3)
s1, s2 = (1, 1, 5, 5), (1, 1, 7, 7)

print("sequences:", s1, "and", s2)
print("5 *", s2, "->", scale(G, 5, s2))
q = isomorphic(G, s1, s2)
print("isomorphic, witness scaling class q =", q)

w = build_witness(G, s1, s2, q)
print("position permutation sigma =", w.sigma)
print("Frobenius powers =", w.frobenius_powers, "i.e. exponents", [3**l for l in w.frobenius_powers])
print("so theta(x1,x2,x3,x4) = (x3, x4, x1^9, x2^9) and eta(s_a) = t_(a^5)")

# check the intertwining equation theta(x * s_a) = theta(x) * t_(a^5)
# concretely in GF(27): first on 1000 random vectors, then on all 27^4
f = FiniteField(3, 3)
print("sampled verification:", verify_witness(f, s1, s2, w, mode="sampled"))
print("exhaustive verification (27^4 vectors x 27 scalars):",
      verify_witness(f, s1, s2, w, mode="exhaustive"))

# a non-example: (1,5) and (1,17) are not isomorphic, no scaling works
print("\n(1,5) vs (1,17):", isomorphic(G, (1, 5), (1, 17)))
