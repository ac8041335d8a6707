# A rank-one family on the interval [-1, 1]: where does certification start?
#
# One factor, n=3, s=-6 (negative scalar curvature), twist degree p.  The
# certificate holds for c = 15p; barely-positive classes are refuted with an
# exact vertex witness.

from fractions import Fraction as F

from wkstab import (
    check_fano_fiber,
    condition_value_fano,
    extremal_affine,
    projective_bundle,
)


def family(p, c):
    return projective_bundle([[p]], [(3, -6)], [c], t=1)


for p in range(1, 11):
    report = check_fano_fiber(family(p, 15 * p))
    print(f"p = {p:2d}, c = {15 * p:3d}: {report.verdict} (margin {report.margin})")

# Now shrink the class: at c = 11/10 (just above the positivity bound c > 1)
# the condition value goes negative at a vertex.
refuted = family(1, F(11, 10))
report = check_fano_fiber(refuted)
print()
print("p = 1, c = 11/10:", report.verdict)
print("witness:", report.witness)
for vtx, val in report.vertex_values:
    print(f"  condition value at {vtx}: {val} ~ {float(val):.3f}")

# The condition value is an explicit function on the fiber; sample it along
# the segment to see where it dips below zero.
sol = extremal_affine(refuted)
print()
print("condition value along [-1, 1] at c = 11/10:")
for k in range(-4, 5):
    x = (F(k, 4),)
    val = condition_value_fano(refuted, sol.l_ext, x)
    bar = "#" * max(0, int(8 + float(val)))
    print(f"  x = {str(x[0]):>5s}: {float(val):9.3f}  {bar}")

# Same sample at a comfortably large class: positive everywhere.
ok = family(1, 15)
sol_ok = extremal_affine(ok)
print()
print("condition value along [-1, 1] at c = 15:")
for k in range(-4, 5):
    x = (F(k, 4),)
    val = condition_value_fano(ok, sol_ok.l_ext, x)
    print(f"  x = {str(x[0]):>5s}: {float(val):9.3f}")
