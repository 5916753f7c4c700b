"""Orbits of suitable sequences under scaling, and why some are short.

The class of a sequence s is its scaling orbit: divide by each support
element in turn and re-sort.  Generically an orbit has N members (N = size
of the support), but when the support is a union of cosets of a subgroup H
with uniform occurrence counts, scaling by H fixes the sequence and the
orbit shrinks to N/|H| members.
"""

from nearvec import (
    Subgroup,
    all_sequences,
    brute_force_classes,
    has_coset_structure,
    orbit,
    quotient_group,
    support_profile,
)

G = quotient_group(5, 2)  # Klein four-group {1, 7, 13, 19}
print("G =", G.elements, "\n")

print("all classes of length-4 sequences over GF(25):")
result = brute_force_classes(G, 4)
for cls in result.classes:
    members = orbit(G, cls.representative)
    print(f"  N={cls.support_size} size={cls.size}: " + "  ".join(map(str, members)))
print("per-N class counts:", result.per_N, "total:", result.total, "\n")

# the short orbit: support {1,7,13,19} is the full group, all occurrences 1,
# so every scaling fixes the sequence and the orbit is a single element
s = (1, 7, 13, 19)
print(s, "has orbit", orbit(G, s))
for H in (Subgroup((1, 7)), Subgroup((1, 7, 13, 19))):
    print(f"  fixed by subgroup {H.elements}? {has_coset_structure(G, H, s)}")

# by contrast gcd(m, N, |G|) = 1 for (1,1,7,13), so nothing can fix it and
# the orbit has the full N members
s = (1, 1, 7, 13)
print(s, "has orbit of size", len(orbit(G, s)),
      "=", len(support_profile(s).support), "(no subgroup fixes it)")

# orbit sizes across a length: always N over an applicable subgroup order
print("\norbit sizes for all length-6 sequences:")
sizes = {}
for s in all_sequences(G, 6):
    N = len(support_profile(s).support)
    sizes.setdefault((N, len(orbit(G, s))), 0)
    sizes[(N, len(orbit(G, s)))] += 1
for (N, size), count in sorted(sizes.items()):
    print(f"  support {N}, orbit size {size}: {count} sequences")
