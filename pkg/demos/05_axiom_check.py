"""Checking the near-vector-space axioms concretely on tiny modules.

A near-vector space relaxes a vector space: scalars act componentwise but
each coordinate may use a different power of the scalar, so one distributive
law is lost.  The remaining axioms are checked exhaustively here for actions
on GF(8)^2: the scalar maps are additive, contain 0 and +-identity, the
nonzero ones form a group acting without fixed points, and the quasi-kernel
still generates the whole group under addition.
"""

import itertools

from nearvec import ActionSpec, FiniteField, apply_action, check_axioms, unit_group

f = FiniteField(2, 3)
print("GF(8) with modulus coefficients", f.modulus_poly, "(ascending degree)\n")

spec = ActionSpec((1, 3))
print("action (x1, x2) -> (x1*a, x2*a^3):")
report = check_axioms(f, spec)
for name, value in (
    ("maps additive", report.additive_maps),
    ("0, id, -id present", report.has_zero_identity_negation),
    ("nonzero scalars form a group", report.scalars_form_group),
    ("fixed-point free", report.fixed_point_free),
    ("quasi-kernel generates", report.quasi_kernel_generates),
):
    print(f"  {name}: {value}")
print("  all axioms:", report.passed, "\n")

# the lost distributive law: x*(s_a + s_b) need not be x*s_c for a single c
# unless x sits in the quasi-kernel; vectors supported on one coordinate
# always do, which is why the quasi-kernel generates everything
x = (1, 1)
a, b = 2, 3
xa = apply_action(f, spec, x, a)
xb = apply_action(f, spec, x, b)
summed = tuple(f.add(u, v) for u, v in zip(xa, xb))
images = {apply_action(f, spec, x, c) for c in range(8)}
print(f"x = {x}: x*s_{a} + x*s_{b} = {summed}, equal to some x*s_c? {summed in images}")
x = (1, 0)
xa = apply_action(f, spec, x, a)
xb = apply_action(f, spec, x, b)
summed = tuple(f.add(u, v) for u, v in zip(xa, xb))
images = {apply_action(f, spec, x, c) for c in range(8)}
print(f"x = {x}: x*s_{a} + x*s_{b} = {summed}, equal to some x*s_c? {summed in images}\n")

# every unit-exponent action on GF(8)^2 passes
ok = all(
    check_axioms(f, ActionSpec(exps)).passed
    for exps in itertools.product(unit_group(7), repeat=2)
)
print("all 36 unit-exponent actions on GF(8)^2 satisfy the axioms:", ok)
