"""Exact polynomial integration over labelled polytopes.

Interior integrals use a fan triangulation and the Dirichlet formula on the
standard simplex.  Boundary integrals use the labelled measure d(sigma) on
each facet F_j, fixed by  dL_j ^ d(sigma) = -dx : rescaling a label rescales
its facet measure inversely, so the labels (not just the facets) enter.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import Point, Polynomial, det, point, vsub
from .polytope import LabelledPolytope, Simplex, triangulate, triangulate_facet


def integrate_simplex_standard(p: Polynomial) -> Fraction:
    """Integral of p over the standard simplex {u_i >= 0, sum u_i <= 1}.

    Monomials integrate by the Dirichlet formula:
    int u^a du = (prod a_i!) / (k + |a|)!  in dimension k.
    """
    k = p.dim
    total = Fraction(0)
    for expo, coeff in p.terms.items():
        num = math.prod(math.factorial(a) for a in expo)
        total += coeff * Fraction(num, math.factorial(k + sum(expo)))
    return total


def integrate_simplex(p: Polynomial, simplex: Simplex) -> Fraction:
    """Integral of p over a full-dimensional simplex (k = ambient dim)."""
    verts = simplex.vertices
    k = len(verts) - 1
    if k != simplex.ambient_dim or p.dim != simplex.ambient_dim:
        raise ValueError("integrate_simplex needs a full-dimensional simplex")
    v0 = verts[0]
    E = [[verts[i + 1][r] - v0[r] for i in range(k)] for r in range(k)]
    jac = abs(det(E))
    if jac == 0:
        return Fraction(0)
    pulled = p.compose_affine(E, v0)
    return jac * integrate_simplex_standard(pulled)


def integrate(p: Polynomial, P: LabelledPolytope) -> Fraction:
    if p.dim != P.dim:
        raise ValueError("polynomial/polytope dimension mismatch")
    return sum((integrate_simplex(p, s) for s in triangulate(P)), Fraction(0))


def volume(P: LabelledPolytope) -> Fraction:
    return integrate(Polynomial.constant(P.dim, 1), P)


def _transversal(P: LabelledPolytope, j: int) -> Point:
    """A vector xi with dL_j(xi) = 1, of minimal support: xi = e_i / g_i at the
    first nonzero gradient coordinate of L_j."""
    g = P.labels[j].gradient
    for i, gi in enumerate(g):
        if gi != 0:
            xi = [Fraction(0)] * P.dim
            xi[i] = Fraction(1) / gi
            return point(xi)
    raise ValueError("label has zero gradient")


def integrate_facet_cell(
    p: Polynomial, cell: tuple[Point, ...], xi: Point
) -> Fraction:
    """d(sigma)-integral of p over one (dim-1)-simplex cell of facet j.

    With dL_j ^ d(sigma) = -dx, the measure of the cell spanned by
    w_0..w_{dim-1} is |det[w_1-w_0, ..., w_{dim-1}-w_0, xi]| / (dim-1)!  for
    any transversal xi with dL_j(xi) = 1; the integral pulls p back to the
    standard (dim-1)-simplex through u -> w_0 + sum u_i (w_i - w_0).
    """
    ell = len(xi)
    k = ell - 1  # cell dimension
    cols = [vsub(w, cell[0]) for w in cell[1:]] + [xi]
    jac = abs(det([[cols[c][r] for c in range(ell)] for r in range(ell)]))
    if jac == 0:
        return Fraction(0)
    if k == 0:
        return jac * p(cell[0])
    E = [[cell[i + 1][r] - cell[0][r] for i in range(k)] for r in range(ell)]
    pulled = p.compose_affine(E, cell[0])
    return jac * integrate_simplex_standard(pulled)


def integrate_facet(p: Polynomial, P: LabelledPolytope, j: int) -> Fraction:
    """d(sigma)-integral of p over facet j of P."""
    if p.dim != P.dim:
        raise ValueError("polynomial/polytope dimension mismatch")
    xi = _transversal(P, j)
    return sum(
        (integrate_facet_cell(p, cell, xi) for cell in triangulate_facet(P, j)),
        Fraction(0),
    )


def integrate_boundary(p: Polynomial, P: LabelledPolytope) -> Fraction:
    """d(sigma)-integral of p over the whole labelled boundary of P."""
    return sum(
        (integrate_facet(p, P, j) for j in range(P.n_facets)), Fraction(0)
    )
