"""Shared polytope corpus and small helpers.

Everything here is exact; no floats enter any fixture.
"""

from fractions import Fraction as F

import pytest

from wkstab import AffineFunc, from_halfspaces, standard_fiber_polytope


def interval(t=1):
    return standard_fiber_polytope(1, t)


def triangle(t=1):
    # labels x1 + t, x2 + t, t - x1 - x2; vertices (-t,-t), (2t,-t), (-t,2t)
    return standard_fiber_polytope(2, t)


def square():
    return from_halfspaces(
        [
            AffineFunc([1, 0], 1),
            AffineFunc([-1, 0], 1),
            AffineFunc([0, 1], 1),
            AffineFunc([0, -1], 1),
        ]
    )


def cube():
    labels = []
    for i in range(3):
        for sgn in (1, -1):
            grad = [0, 0, 0]
            grad[i] = sgn
            labels.append(AffineFunc(grad, 1))
    return from_halfspaces(labels)


def hexagon():
    # the reflexive hexagon: monotone with x0 = 0, t = 1
    return from_halfspaces(
        [
            AffineFunc([1, 0], 1),
            AffineFunc([0, 1], 1),
            AffineFunc([-1, 0], 1),
            AffineFunc([0, -1], 1),
            AffineFunc([1, 1], 1),
            AffineFunc([-1, -1], 1),
        ]
    )


def simplex3(t=1):
    return standard_fiber_polytope(3, t)


@pytest.fixture
def corpus():
    return {
        "interval": interval(),
        "triangle": triangle(),
        "triangle2": triangle(F(2)),
        "square": square(),
        "cube": cube(),
        "hexagon": hexagon(),
        "simplex3": simplex3(),
    }


def interior_points(P, count=3):
    """Deterministic interior points: centroid plus points pulled toward the
    first vertices (strictly inside by convexity)."""
    b = P.vertex_centroid()
    pts = [b]
    for k, vtx in enumerate(P.vertices[: count - 1]):
        lam = F(1, 3 + k)
        pts.append(tuple(b[i] + lam * (vtx[i] - b[i]) for i in range(P.dim)))
    return pts[:count]
