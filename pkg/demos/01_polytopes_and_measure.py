# Labelled polytopes and the exact measures behind everything else.
#
# A labelled polytope is a polytope plus a *chosen* affine function per facet.
# The labels fix the boundary measure: rescaling a label by 2 halves the
# measure of its facet.  Every integral below is a Fraction; nothing is
# floating point.

from fractions import Fraction as F

from wkstab import (
    AffineFunc,
    Polynomial,
    from_halfspaces,
    integrate,
    integrate_boundary,
    integrate_facet,
    standard_fiber_polytope,
    volume,
)

# The standard scaled simplex: labels x1 + t, x2 + t, t - x1 - x2.
tri = standard_fiber_polytope(2, 1)
print("triangle vertices:", tri.vertices)
print("triangle volume:  ", volume(tri))

one = Polynomial.constant(2, 1)
for j, L in enumerate(tri.labels):
    print(f"facet {j}: label {L}, measure {integrate_facet(one, tri, j)}")

# Doubling a label halves that facet's measure (dL ^ dsigma = -dx).
square = from_halfspaces(
    [
        AffineFunc([1, 0], 1),
        AffineFunc([-1, 0], 1),
        AffineFunc([0, 1], 1),
        AffineFunc([0, -1], 1),
    ]
)
doubled = from_halfspaces(
    [
        AffineFunc([2, 0], 2),  # same halfspace, label scaled by 2
        AffineFunc([-1, 0], 1),
        AffineFunc([0, 1], 1),
        AffineFunc([0, -1], 1),
    ]
)
print()
print("square facet 0 measure:         ", integrate_facet(one, square, 0))
print("same facet with doubled label:  ", integrate_facet(one, doubled, 0))

# Polynomial integration is exact (Dirichlet formula on simplices under the
# hood).  integral of x1*x2 over the standard simplex conv(0,e1,e2) is 1/24.
x1x2 = Polynomial(2, {(1, 1): F(1)})
from wkstab.measure import integrate_simplex_standard

print()
print("int x1 x2 over standard simplex:", integrate_simplex_standard(x1x2))

# The cone-volume identity ties interior and boundary measure together:
# sum_j L_j(x0) sigma(F_j) = l * Vol(P) for ANY interior x0.
for x0 in [(F(0), F(0)), (F(1, 3), F(-1, 2))]:
    lhs = sum(
        square.labels[j](x0) * integrate_facet(one, square, j)
        for j in range(len(square.labels))
    )
    print(f"cone-volume identity at x0={x0}: {lhs} == {square.dim * volume(square)}")

# Boundary integrals of polynomials work the same way.
p = Polynomial(2, {(2, 0): F(1), (0, 1): F(3, 2)})
print()
print("int (x1^2 + 3/2 x2) dx over square:    ", integrate(p, square))
print("int (x1^2 + 3/2 x2) dsigma over bdry:  ", integrate_boundary(p, square))
