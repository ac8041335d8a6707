"""Labelled polytopes: halfspace + vertex descriptions, faces, cones, clipping.

A labelled polytope is a compact convex polytope ``P = {x : L_j(x) >= 0}``
together with the chosen defining affine functions ("labels") ``L_j``, one per
facet.  The labels matter beyond their zero sets: rescaling a label rescales
the corresponding facet's boundary measure inversely, so labels are never
re-normalized here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    AffineFunc,
    Point,
    affine_rank,
    point,
    rat,
    solve_general,
    solve_square,
    vadd,
    vscale,
    vsub,
)


class PolytopeError(Exception):
    pass


class UnboundedPolytope(PolytopeError):
    def __init__(self, ray: Point):
        super().__init__(f"halfspaces describe an unbounded set (recession ray {ray})")
        self.ray = ray


class EmptyInterior(PolytopeError):
    pass


class RedundantLabel(PolytopeError):
    def __init__(self, index: int):
        super().__init__(
            f"label {index} is redundant: it does not cut out a facet "
            "(its zero set on P has affine dimension < dim-1, or it repeats "
            "another label's facet)"
        )
        self.index = index


class NotInterior(PolytopeError):
    def __init__(self, x0):
        super().__init__(f"point {x0} is not strictly interior")
        self.x0 = x0


@dataclass(frozen=True)
class Simplex:
    """A k-simplex given by k+1 affinely independent points."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        if affine_rank(self.vertices) != len(self.vertices) - 1:
            raise ValueError("simplex vertices are affinely dependent")

    @property
    def k(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def barycenter(self) -> Point:
        n = len(self.vertices)
        acc = self.vertices[0]
        for v in self.vertices[1:]:
            acc = vadd(acc, v)
        return vscale(Fraction(1, n), acc)


class LabelledPolytope:
    """Immutable labelled polytope; construct via :func:`from_halfspaces`."""

    __slots__ = ("dim", "labels", "vertices", "facet_incidence")

    def __init__(self, dim, labels, vertices, facet_incidence):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "facet_incidence", tuple(tuple(f) for f in facet_incidence))

    def __setattr__(self, name, value):
        raise AttributeError("LabelledPolytope is immutable")

    @property
    def n_facets(self) -> int:
        return len(self.labels)

    def contains(self, x) -> bool:
        return all(L(x) >= 0 for L in self.labels)

    def is_interior(self, x) -> bool:
        return all(L(x) > 0 for L in self.labels)

    def vertex_centroid(self) -> Point:
        """Average of the vertices; always strictly interior (P is full-dim)."""
        acc = self.vertices[0]
        for v in self.vertices[1:]:
            acc = vadd(acc, v)
        return vscale(Fraction(1, len(self.vertices)), acc)

    def facet_vertices(self, j: int) -> tuple[Point, ...]:
        return tuple(self.vertices[i] for i in self.facet_incidence[j])

    def is_simple(self) -> bool:
        """True when every vertex lies on exactly ``dim`` facets (Delzant-like)."""
        counts = [0] * len(self.vertices)
        for inc in self.facet_incidence:
            for i in inc:
                counts[i] += 1
        return all(c == self.dim for c in counts)

    def __eq__(self, other):
        return (
            isinstance(other, LabelledPolytope)
            and self.dim == other.dim
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.dim, self.labels))

    def __repr__(self):
        return (
            f"LabelledPolytope(dim={self.dim}, facets={self.n_facets}, "
            f"vertices={len(self.vertices)})"
        )


def _enumerate_vertices(labels: list[AffineFunc], dim: int) -> list[Point]:
    """Feasible basic solutions of all dim x dim label subsystems, deduplicated."""
    found: set[Point] = set()
    for subset in itertools.combinations(range(len(labels)), dim):
        A = [list(labels[j].gradient) for j in subset]
        b = [-labels[j].constant for j in subset]
        x = solve_square(A, b)
        if x is None:
            continue
        if all(L(x) >= 0 for L in labels):
            found.add(x)
    return sorted(found)


def _recession_ray(labels: list[AffineFunc], dim: int) -> Point | None:
    """A nonzero direction u with dL_j(u) >= 0 for all j, if one exists.

    The recession cone is intersected with the unit sup-norm box; the result
    is a bounded polyhedron whose vertices include a nonzero point exactly
    when the cone is nontrivial.
    """
    cone = [AffineFunc(L.gradient, 0) for L in labels]
    box = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        box.append(AffineFunc(e, 1))
        box.append(AffineFunc([-c for c in e], 1))
    zero = (Fraction(0),) * dim
    for v in _enumerate_vertices(cone + box, dim):
        if v != zero:
            return v
    return None


def from_halfspaces(labels, *, drop_redundant: bool = False) -> LabelledPolytope:
    """Build a labelled polytope from its defining affine functions.

    Vertices are enumerated exactly by solving all ``dim x dim`` subsystems of
    ``{L_j = 0}`` and keeping the solutions feasible for every label.  The
    label set must be minimal (one facet each); with ``drop_redundant=True``
    redundant labels are silently removed instead of raising.
    """
    labels = tuple(labels)
    if not labels:
        raise ValueError("at least one label is required")
    dim = labels[0].dim
    if any(L.dim != dim for L in labels):
        raise ValueError("labels have mixed dimensions")
    for j, L in enumerate(labels):
        if not any(L.gradient):
            raise RedundantLabel(j)

    ray = _recession_ray(list(labels), dim)
    if ray is not None:
        raise UnboundedPolytope(ray)

    while True:
        verts = _enumerate_vertices(list(labels), dim)
        if not verts or affine_rank(verts) < dim:
            raise EmptyInterior("the halfspace intersection has empty interior")
        incidence = [
            tuple(i for i, v in enumerate(verts) if L(v) == 0) for L in labels
        ]
        bad: list[int] = []
        seen: dict[tuple[int, ...], int] = {}
        for j, inc in enumerate(incidence):
            if affine_rank([verts[i] for i in inc]) != dim - 1:
                bad.append(j)
            elif inc in seen:
                bad.append(j)  # duplicate facet: keep the earlier label
            else:
                seen[inc] = j
        if not bad:
            return LabelledPolytope(dim, labels, verts, incidence)
        if not drop_redundant:
            raise RedundantLabel(bad[0])
        labels = tuple(L for j, L in enumerate(labels) if j not in bad)
        if not labels:
            raise EmptyInterior("all labels were redundant")


def standard_fiber_polytope(dim: int, t) -> LabelledPolytope:
    """The scaled standard simplex: labels ``x_i + t`` and ``t - sum x_i``.

    Monotone with monotone point 0 and parameter *t*; this is the moment
    polytope of complex projective space scaled so that the labels take the
    value *t* at the origin.
    """
    t = rat(t)
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if t <= 0:
        raise ValueError("scale t must be positive")
    labels = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        labels.append(AffineFunc(e, t))
    labels.append(AffineFunc([-1] * dim, t))
    return from_halfspaces(labels)


def monotone_point(P: LabelledPolytope) -> tuple[Point, Fraction] | None:
    """The interior point where all labels agree, if it exists uniquely.

    Solves ``L_j(x0) = t`` for ``(x0, t)``; returns ``(x0, t)`` when the
    solution exists, is unique, and has ``t > 0`` (which already makes ``x0``
    interior).  Returns None otherwise.
    """
    rows = [list(L.gradient) + [Fraction(-1)] for L in P.labels]
    rhs = [-L.constant for L in P.labels]
    sol = solve_general(rows, rhs)
    if sol is None:
        return None
    part, null = sol
    if null:
        return None
    t = part[-1]
    if t <= 0:
        return None
    return part[:-1], t


def _face_triangulation(
    P: LabelledPolytope, face: tuple[int, ...], on_labels: frozenset[int], fdim: int
) -> list[tuple[int, ...]]:
    """Triangulate a face (given by its vertex indices) by a fan from its
    lowest-indexed vertex, recursing on the face's own facets."""
    if len(face) == fdim + 1:
        return [tuple(sorted(face))]
    apex = min(face)
    pieces: list[tuple[int, ...]] = []
    seen: set[frozenset[int]] = set()
    for k in range(P.n_facets):
        if k in on_labels:
            continue
        sub = tuple(i for i in face if P.labels[k](P.vertices[i]) == 0)
        if not sub or apex in sub or frozenset(sub) in seen:
            continue
        if affine_rank([P.vertices[i] for i in sub]) != fdim - 1:
            continue
        seen.add(frozenset(sub))
        for cell in _face_triangulation(P, sub, on_labels | {k}, fdim - 1):
            pieces.append((apex,) + cell)
    return sorted(pieces)


def triangulate_facet(P: LabelledPolytope, j: int) -> list[tuple[Point, ...]]:
    """Deterministic triangulation of facet *j* into (dim-1)-simplices."""
    if not 0 <= j < P.n_facets:
        raise IndexError("facet index out of range")
    cells = _face_triangulation(P, P.facet_incidence[j], frozenset({j}), P.dim - 1)
    return [tuple(P.vertices[i] for i in cell) for cell in cells]


def triangulate(P: LabelledPolytope) -> list[Simplex]:
    """Triangulation of P by a fan from its lowest-indexed vertex."""
    cells = _face_triangulation(P, tuple(range(len(P.vertices))), frozenset(), P.dim)
    return [Simplex(tuple(P.vertices[i] for i in cell)) for cell in cells]


@dataclass(frozen=True)
class ConeDecomposition:
    """P as a union of cones: apex x0, one cone per facet, bases triangulated."""

    x0: Point
    cones: tuple[tuple[Simplex, ...], ...]  # cones[j] = full-dim cells over facet j


def cone_decomposition(P: LabelledPolytope, x0) -> ConeDecomposition:
    x0 = point(x0)
    if not P.is_interior(x0):
        raise NotInterior(x0)
    cones = []
    for j in range(P.n_facets):
        cells = tuple(Simplex(base + (x0,)) for base in triangulate_facet(P, j))
        cones.append(cells)
    return ConeDecomposition(x0=x0, cones=tuple(cones))


def clip(P: LabelledPolytope, h: AffineFunc) -> LabelledPolytope:
    """The labelled polytope ``P  intersect  {h >= 0}`` with *h* appended.

    Labels made redundant by the cut (including *h* itself when it does not
    cut) are dropped.  Raises :class:`EmptyInterior` when the intersection has
    no interior.
    """
    if h.dim != P.dim:
        raise ValueError("dimension mismatch in clip")
    return from_halfspaces(P.labels + (h,), drop_redundant=True)
