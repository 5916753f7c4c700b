"""Counting near-vector spaces two ways: closed form vs enumeration.

The number of isomorphism classes of GF(p^n)^m splits by the support size N
of the suitable sequence.  The closed form walks the subgroup lattice of
G = U(p^n - 1)/<p>: sequences fixed by a subgroup of order d collapse into
shorter orbits, and attributing each sequence to its exact stabilizer makes
every division come out exactly.  Brute force simply lists all sequences and
groups them into scaling orbits.  The two must agree everywhere.
"""

from math import gcd

from nearvec import (
    all_subgroups,
    brute_force_counts,
    coprime_total,
    quotient_group,
    total_count,
)

for p, n in ((3, 3), (5, 2)):
    G = quotient_group(p, n)
    lat = all_subgroups(G)
    print(f"classes over GF({p}^{n}), |G| = {G.order}")
    header = "  N \\ m " + "".join(str(m).rjust(6) for m in range(4, 9))
    print(header)
    grids = {m: total_count(G, m, lat) for m in range(4, 9)}
    for N in range(1, G.order + 1):
        row = [grids[m].per_N[N].classes if N in grids[m].per_N else "-" for m in range(4, 9)]
        print(f"{N:>7} " + "".join(str(v).rjust(6) for v in row))
    print("  total " + "".join(str(grids[m].total).rjust(6) for m in range(4, 9)))

    for m in range(4, 9):
        brute = brute_force_counts(G, m)
        formula = {N: s.classes for N, s in grids[m].per_N.items()}
        assert formula == brute, (m, formula, brute)
    print("  brute-force enumeration agrees for every m\n")

# when gcd(m, |G|) = 1 no orbit can shrink, so every class has exactly N
# members and the subgroup lattice is not needed at all
G = quotient_group(3, 3)
for m in (3, 5, 7):
    assert gcd(m, G.order) == 1
    print(f"coprime shortcut, m={m}: {coprime_total(G, m)} classes "
          f"(full formula: {total_count(G, m).total})")
