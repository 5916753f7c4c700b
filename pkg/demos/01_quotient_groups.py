"""The exponent-class groups behind scalar actions on GF(p^n)^m.

Scalar actions x_i -> x_i * a^(q_i) are classified by the classes of the
exponents q_i in G = U(p^n - 1)/<p>: multiplying an exponent by p is the
Frobenius automorphism in disguise, so it never changes the isomorphism
type.  This script builds the two groups that make the nicest running
examples and prints their structure.
"""

from nearvec import all_subgroups, cosets, quotient_group

for p, n in ((3, 3), (5, 2)):
    G = quotient_group(p, n)
    params = G.params
    print(f"GF({p}^{n}): modulus {params.modulus}, <{p}> = {G.p_coset}")
    print(f"G = U({params.modulus})/<{p}> has order {G.order}: {G.elements}")

    # multiplication table over canonical (smallest-in-coset) representatives
    width = 4
    print(" " * width + "|" + "".join(str(b).rjust(width) for b in G.elements))
    print("-" * width + "+" + "-" * (width * G.order))
    for a in G.elements:
        print(str(a).rjust(width) + "|" + "".join(str(G.mul(a, b)).rjust(width) for b in G.elements))

    # both groups have order 4, but they are not isomorphic as groups:
    # U(26)/<3> is cyclic (one subgroup of order 2), U(24)/<5> is a Klein
    # four-group (three of them) -- this difference drives the class counts
    lat = all_subgroups(G)
    for H in lat.subgroups:
        print(f"  subgroup of order {H.order}: {H.elements}, cosets {cosets(G, H)}")
    print()
