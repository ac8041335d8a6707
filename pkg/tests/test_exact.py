from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from wkstab import AffineFunc, Polynomial, radial_derivative, rat
from wkstab.exact import (
    affine_rank,
    det,
    dot,
    invert,
    matrix_rank,
    solve_general,
    solve_square,
)

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=8
)


def small_polys(dim, max_degree=3):
    expo = st.tuples(*[st.integers(0, max_degree) for _ in range(dim)])
    return st.dictionaries(expo, rationals, max_size=5).map(
        lambda d: Polynomial(dim, d)
    )


def test_rat_accepts_exact_inputs():
    assert rat(3) == F(3)
    assert rat("2/7") == F(2, 7)
    assert rat(F(1, 3)) == F(1, 3)


def test_rat_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat(True)


def test_affine_func_evaluation_and_arithmetic():
    f = AffineFunc([1, -2], 3)
    g = AffineFunc([0, 1], -1)
    assert f((F(1), F(1))) == 2
    assert (f + g)((F(2), F(3))) == f((F(2), F(3))) + g((F(2), F(3)))
    assert (f - g)((F(0), F(0))) == 4
    assert (-f).gradient == (F(-1), F(2))
    assert (f * F(1, 2)).constant == F(3, 2)


def test_affine_compose():
    f = AffineFunc([1, 1], 0)
    # substitute x = (y1 + 1, 2*y1)
    g = f.compose_affine([[1], [2]], [1, 0])
    assert g.gradient == (F(3),)
    assert g.constant == F(1)


def test_polynomial_basics():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = (x + y) ** 2 - x * x - y * y
    assert p == 2 * x * y
    assert p.degree() == 2
    assert Polynomial.zero(2).degree() == -1
    assert p((F(3), F(5))) == 30


def test_polynomial_partial_and_radial():
    x = Polynomial.variable(1, 0)
    p = (x + 2) ** 3
    assert p.partial(0) == 3 * (x + 2) ** 2
    # d_x p . (x - x0) at x0 = 1
    r = radial_derivative(p, (F(1),))
    assert r == 3 * (x + 2) ** 2 * (x - 1)


@given(small_polys(2), small_polys(2), small_polys(2))
def test_polynomial_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p


@given(small_polys(2, max_degree=2))
def test_compose_affine_identity(p):
    assert p.compose_affine([[1, 0], [0, 1]], [0, 0]) == p


@given(
    small_polys(2, max_degree=2),
    st.tuples(rationals, rationals),
)
def test_compose_affine_evaluates_correctly(p, y):
    A = [[F(2), F(1)], [F(0), F(1)]]
    b = [F(1), F(-1)]
    q = p.compose_affine(A, b)
    x = tuple(sum(A[i][j] * y[j] for j in range(2)) + b[i] for i in range(2))
    assert q(y) == p(x)


def test_det_and_invert():
    A = [[F(2), F(1)], [F(1), F(1)]]
    assert det(A) == 1
    Ainv = invert(A)
    assert [list(row) for row in Ainv] == [[F(1), F(-1)], [F(-1), F(2)]]
    assert invert([[F(1), F(2)], [F(2), F(4)]]) is None


def test_solve_square_singular_returns_none():
    assert solve_square([[F(1), F(2)], [F(2), F(4)]], [F(1), F(1)]) is None
    assert solve_square([[F(1), F(0)], [F(0), F(3)]], [F(2), F(6)]) == (
        F(2),
        F(2),
    )


def test_solve_general_particular_plus_nullspace():
    A = [[F(1), F(1), F(0)], [F(0), F(0), F(1)]]
    b = [F(3), F(4)]
    sol = solve_general(A, b)
    assert sol is not None
    part, null = sol
    assert [dot(row, part) for row in A] == b
    assert len(null) == 1
    for vec in null:
        assert all(dot(row, vec) == 0 for row in A)
    assert solve_general([[F(1)], [F(1)]], [F(0), F(1)]) is None


def test_matrix_and_affine_rank():
    assert matrix_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    pts = [(F(0), F(0)), (F(1), F(0)), (F(2), F(0))]
    assert affine_rank(pts) == 1
    pts.append((F(0), F(1)))
    assert affine_rank(pts) == 2


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_transpose_invariance(rows):
    A = [[rows[i][j] for j in range(3)] for i in range(3)]
    At = [[rows[j][i] for j in range(3)] for i in range(3)]
    assert det(A) == det(At)
