from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import hexagon, interior_points, square, triangle
from wkstab import Polynomial, integrate, integrate_boundary, integrate_facet, volume
from wkstab.measure import integrate_simplex, integrate_simplex_standard
from wkstab.polytope import Simplex
import _oracle
from _frozen import DIRICHLET_D2, DIRICHLET_D3


def mono(dim, expo):
    return Polynomial.monomial(dim, expo)


@pytest.mark.parametrize("expo,value", sorted(DIRICHLET_D2.items()))
def test_standard_simplex_monomials_d2(expo, value):
    assert integrate_simplex_standard(mono(2, expo)) == value


@pytest.mark.parametrize("expo,value", sorted(DIRICHLET_D3.items()))
def test_standard_simplex_monomials_d3(expo, value):
    assert integrate_simplex_standard(mono(3, expo)) == value


def test_integrate_simplex_affine_image():
    # [0,1]^2 lower triangle mapped to vertices (1,1), (3,1), (1,2)
    s = Simplex(((F(1), F(1)), (F(3), F(1)), (F(1), F(2))))
    one = Polynomial.constant(2, 1)
    assert integrate_simplex(one, s) == 1  # area |det|/2 = 2/2
    x = Polynomial.variable(2, 0)
    # barycenter of x over the simplex is the centroid coordinate 5/3
    assert integrate_simplex(x, s) == F(5, 3)


def test_volumes():
    assert volume(triangle()) == F(9, 2)
    assert volume(square()) == 4
    assert volume(hexagon()) == 3
    assert volume(triangle(F(2))) == 18


def test_boundary_measure_scales_inversely_with_label():
    # doubling a label halves its facet measure: dL wedge dsigma = -dx
    from wkstab import AffineFunc, from_halfspaces

    base = [
        AffineFunc([1, 0], 1),
        AffineFunc([-1, 0], 1),
        AffineFunc([0, 1], 1),
        AffineFunc([0, -1], 1),
    ]
    P = from_halfspaces(base)
    scaled = from_halfspaces([base[0] * 2] + base[1:])
    one = Polynomial.constant(2, 1)
    assert integrate_facet(one, P, 0) == 2
    assert integrate_facet(one, scaled, 0) == 1
    for j in range(1, 4):
        assert integrate_facet(one, scaled, j) == integrate_facet(one, P, j)


def test_interval_boundary_is_point_masses():
    from conftest import interval

    P = interval()
    x = Polynomial.variable(1, 0)
    # labels x+1 and 1-x have unit gradients: unit point mass at each endpoint
    assert integrate_boundary(Polynomial.constant(1, 1), P) == 2
    assert integrate_boundary(x, P) == 0
    assert integrate_boundary((x + 1) * (x + 1), P) == 4


def test_triangle_against_iterated_oracle():
    P = triangle()
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = (x + 2 * y) ** 3 + x * y - 7
    assert integrate(p, P) == _oracle.triangle_interior(p)
    assert integrate_boundary(p, P) == _oracle.triangle_boundary(p)


def test_square_against_iterated_oracle():
    P = square()
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = x * x * y + 3 * y * y - x + F(1, 2)
    assert integrate(p, P) == _oracle.square_interior(p)
    assert integrate_boundary(p, P) == _oracle.square_boundary(p)


def test_cone_volume_identity_on_corpus(corpus):
    # sum_j L_j(x0) sigma(F_j) = dim * Vol(P) for any interior x0
    for P in corpus.values():
        one = Polynomial.constant(P.dim, 1)
        for x0 in interior_points(P):
            total = sum(
                P.labels[j](x0) * integrate_facet(one, P, j)
                for j in range(P.n_facets)
            )
            assert total == P.dim * volume(P)


@settings(max_examples=25, deadline=None)
@given(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)
def test_integrate_is_linear_on_hexagon(expo, coeff):
    P = hexagon()
    p = Polynomial.monomial(2, expo)
    q = Polynomial.monomial(2, (1, 1))
    lhs = integrate(p * coeff + q, P)
    assert lhs == coeff * integrate(p, P) + integrate(q, P)


def test_integrate_additive_over_clip():
    from wkstab import AffineFunc
    from wkstab.polytope import clip

    P = square()
    h = AffineFunc([1, -2], F(1, 3))
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = (x + y) ** 2 + 5
    assert integrate(p, clip(P, h)) + integrate(p, clip(P, -h)) == integrate(p, P)
