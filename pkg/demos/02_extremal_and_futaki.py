# The extremal affine function and the weighted Donaldson-Futaki functional.
#
# A fibration = fiber polytope + base factors (n_a, s_a, c_a, p_a).  The
# weights are v = prod (p_a + c_a)^{n_a} and a w built from the scalar
# curvatures; l_ext is the unique affine function making
# F(f) = 2 int_bdry f v dsigma - int f w dx vanish on all affine f.

from fractions import Fraction as F

from wkstab import (
    Convention,
    assert_futaki_vanishes,
    df_invariant,
    df_via_cones,
    extremal_affine,
    futaki_character,
    projective_bundle,
    stability_weight,
)

# One twisted factor over a negative-KE threefold: n=3, s=-6, degree p=1.
fib = projective_bundle([[1]], [(3, -6)], [15], t=1)
print("fiber:", fib.fiber.vertices, " v =", fib.v)

sol = extremal_affine(fib)
print("l_ext           =", sol.l_ext)
print("residuals       =", sol.residuals, "(must be exactly zero)")

# The Futaki character: F applied to the coordinate functions before
# correcting by l_ext.  Nonzero here, so l_ext is genuinely affine.
print("futaki character =", futaki_character(fib))
print("l_ext constant?  ", sol.is_constant)

# With w = l_ext * v - w_base the functional kills every affine function --
# that is the defining property, checked exactly.
w = stability_weight(fib, sol.l_ext)
assert_futaki_vanishes(fib.fiber, fib.v, w)
print("F vanishes on affine functions: verified exactly")

# F can be computed two ways: straight from the definition, or through the
# cone decomposition at an interior point.  They agree exactly, always.
from wkstab import Polynomial

f = Polynomial(1, {(2,): F(1), (1,): F(-1, 3)})  # any polynomial test function
a = df_invariant(fib.fiber, fib.v, w, f)
b = df_via_cones(fib.fiber, (F(0),), fib.v, w, f)
print("df_invariant  =", a)
print("df_via_cones  =", b, "(equal:", a == b, ")")

# The legacy sign convention solves a different linear system; it exists to
# reproduce older outputs and is clearly labelled everywhere.
legacy = projective_bundle([[1]], [(3, -6)], [15], t=1, convention=Convention.LEGACY)
print()
print("canonical l_ext:", sol.l_ext)
print("legacy l_ext:   ", extremal_affine(legacy).l_ext)
