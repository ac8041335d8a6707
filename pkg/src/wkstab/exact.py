"""Exact rational scalars, vectors, affine functions, and sparse polynomials.

Every quantity in this package is an exact :class:`fractions.Fraction`; no
floating point enters any computation.  This module holds the shared value
types:

* points / vectors as tuples of ``Fraction``,
* :class:`AffineFunc` -- an affine function ``x -> <gradient, x> + constant``,
* :class:`Polynomial` -- a sparse multivariate polynomial with rational
  coefficients and a canonical (graded-lexicographic) term order,

plus the small amount of exact linear algebra used by the rest of the library
(row reduction, square solves, determinants, affine rank).  All matrices in
this package are tiny (at most a few rows), so plain Gaussian elimination
over ``Fraction`` is both fast enough and easy to audit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]
Matrix = list[list[Fraction]]


def rat(x: int | str | Fraction) -> Fraction:
    """Coerce *x* to an exact ``Fraction``.

    Accepts integers, ``Fraction`` instances and strings such as ``"3"``,
    ``"-7/2"`` or ``"1.25"`` (decimal *strings* are exact).  Binary floats are
    rejected on purpose: they rarely represent the value the caller meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError(
            "floating-point input is not allowed; pass an int, a Fraction, "
            "or a string like '7/100'"
        )
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def point(xs: Iterable) -> Point:
    return tuple(rat(x) for x in xs)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch in dot product")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(u, v))


def vscale(k, u: Sequence[Fraction]) -> Point:
    k = rat(k)
    return tuple(k * a for a in u)


class AffineFunc:
    """An affine function ``x -> <gradient, x> + constant`` on Q^dim."""

    __slots__ = ("gradient", "constant")

    def __init__(self, gradient: Iterable, constant=0):
        object.__setattr__(self, "gradient", point(gradient))
        object.__setattr__(self, "constant", rat(constant))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("AffineFunc is immutable")

    @property
    def dim(self) -> int:
        return len(self.gradient)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim:
            raise ValueError("dimension mismatch evaluating AffineFunc")
        return dot(self.gradient, x) + self.constant

    def to_polynomial(self) -> "Polynomial":
        terms = {}
        n = self.dim
        for i, g in enumerate(self.gradient):
            if g:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = g
        if self.constant:
            terms[(0,) * n] = self.constant
        return Polynomial(n, terms)

    def compose_affine(self, A: Sequence[Sequence], b: Sequence) -> "AffineFunc":
        """The affine function ``y -> self(A y + b)`` (A has ``dim`` rows)."""
        rows = [point(r) for r in A]
        bb = point(b)
        if len(rows) != self.dim or len(bb) != self.dim:
            raise ValueError("dimension mismatch in compose_affine")
        m = len(rows[0]) if rows else 0
        grad = tuple(
            sum((self.gradient[i] * rows[i][j] for i in range(self.dim)), Fraction(0))
            for j in range(m)
        )
        return AffineFunc(grad, dot(self.gradient, bb) + self.constant)

    def __neg__(self) -> "AffineFunc":
        return AffineFunc(tuple(-g for g in self.gradient), -self.constant)

    def __add__(self, other):
        if isinstance(other, AffineFunc):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return AffineFunc(vadd(self.gradient, other.gradient), self.constant + other.constant)
        return AffineFunc(self.gradient, self.constant + rat(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, AffineFunc) else -rat(other))

    def __mul__(self, k):
        k = rat(k)
        return AffineFunc(vscale(k, self.gradient), k * self.constant)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, AffineFunc)
            and self.gradient == other.gradient
            and self.constant == other.constant
        )

    def __hash__(self):
        return hash((self.gradient, self.constant))

    def __repr__(self):
        return f"AffineFunc({self.gradient!r}, {self.constant!r})"


def _grlex_key(expo: tuple[int, ...]):
    return (sum(expo), expo)


class Polynomial:
    """Sparse multivariate polynomial over Q.

    ``terms`` maps exponent tuples (length ``dim``, nonnegative ints) to
    nonzero rational coefficients.  Zero coefficients are never stored, so
    structural equality of the term maps is semantic equality.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != dim or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo} for dim {dim}")
            c = rat(coeff)
            if c:
                clean[expo] = c
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls(dim, {})

    @classmethod
    def constant(cls, dim: int, c) -> "Polynomial":
        return cls(dim, {(0,) * dim: rat(c)})

    @classmethod
    def variable(cls, dim: int, i: int) -> "Polynomial":
        if not 0 <= i < dim:
            raise IndexError("variable index out of range")
        e = [0] * dim
        e[i] = 1
        return cls(dim, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, dim: int, expo: Sequence[int], coeff=1) -> "Polynomial":
        return cls(dim, {tuple(expo): rat(coeff)})

    # -- basic queries -----------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def terms_sorted(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim:
            raise ValueError("dimension mismatch evaluating Polynomial")
        xs = point(x)
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            val = coeff
            for xi, ei in zip(xs, expo):
                if ei:
                    val *= xi**ei
            total += val
        return total

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return other
        return Polynomial.constant(self.dim, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            terms[expo] = terms.get(expo, Fraction(0)) + coeff
        return Polynomial(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            k = rat(other)
            return Polynomial(self.dim, {e: k * c for e, c in self.terms.items()})
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.dim, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.dim, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dim, tuple(self.terms_sorted())))

    # -- calculus ----------------------------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """Exact partial derivative with respect to variable *i* (0-based)."""
        if not 0 <= i < self.dim:
            raise IndexError("variable index out of range")
        terms: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in self.terms.items():
            if expo[i]:
                e = list(expo)
                e[i] -= 1
                terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + coeff * expo[i]
        return Polynomial(self.dim, terms)

    def compose_affine(self, A: Sequence[Sequence], b: Sequence) -> "Polynomial":
        """Exact expansion of ``y -> self(A y + b)``.

        *A* has ``dim`` rows; the number of columns is the dimension of the
        resulting polynomial (rectangular substitutions parametrize simplices
        and facets).
        """
        rows = [point(r) for r in A]
        bb = point(b)
        if len(rows) != self.dim or len(bb) != self.dim:
            raise ValueError("dimension mismatch in compose_affine")
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged substitution matrix")
        # affine image of each old coordinate, as a polynomial in the new ones
        images = [AffineFunc(rows[i], bb[i]).to_polynomial() for i in range(self.dim)]
        powers: list[list[Polynomial]] = [[Polynomial.constant(m, 1)] for _ in range(self.dim)]
        result = Polynomial.zero(m)
        for expo, coeff in self.terms.items():
            term = Polynomial.constant(m, coeff)
            for i, e in enumerate(expo):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * images[i])
                if e:
                    term = term * powers[i][e]
            result = result + term
        return result

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        bits = []
        for expo, coeff in self.terms_sorted():
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(expo) if e
            )
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return "Polynomial(" + " + ".join(bits) + ")"


def radial_derivative(p: Polynomial, x0: Sequence) -> Polynomial:
    """The polynomial ``x -> d_x p (x - x0)``, i.e. sum_i dp/dx_i * (x_i - x0_i).

    It vanishes identically at ``x0`` and reduces to Euler's identity
    (``deg(p) * p``) for homogeneous *p* when ``x0 = 0``.
    """
    x00 = point(x0)
    if len(x00) != p.dim:
        raise ValueError("dimension mismatch in radial_derivative")
    result = Polynomial.zero(p.dim)
    for i in range(p.dim):
        xi = Polynomial.variable(p.dim, i) - Polynomial.constant(p.dim, x00[i])
        result = result + p.partial(i) * xi
    return result


# ---------------------------------------------------------------------------
# small exact linear algebra
# ---------------------------------------------------------------------------


def _as_matrix(A: Sequence[Sequence]) -> Matrix:
    return [[rat(x) for x in row] for row in A]


def rref(A: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (a copy) and the list of pivot columns."""
    M = _as_matrix(A)
    if not M:
        return [], []
    rows, cols = len(M), len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def det(A: Sequence[Sequence]) -> Fraction:
    M = _as_matrix(A)
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if M[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            sign = -sign
        d *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return sign * d


def solve_square(A: Sequence[Sequence], b: Sequence) -> Point | None:
    """Unique solution of ``A x = b`` for square A, or None if A is singular."""
    M = _as_matrix(A)
    n = len(M)
    bb = point(b)
    if len(bb) != n or any(len(row) != n for row in M):
        raise ValueError("shape mismatch in solve_square")
    aug = [row + [bb[i]] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if len(pivots) != n or n in pivots:
        return None
    return tuple(R[i][n] for i in range(n))


def solve_general(
    A: Sequence[Sequence], b: Sequence
) -> tuple[Point, list[Point]] | None:
    """General exact solve of ``A x = b``.

    Returns ``(particular_solution, nullspace_basis)`` or ``None`` when the
    system is inconsistent.  *A* may be rectangular.
    """
    M = _as_matrix(A)
    if not M:
        return (), []
    rows, cols = len(M), len(M[0])
    bb = point(b)
    if len(bb) != rows:
        raise ValueError("shape mismatch in solve_general")
    aug = [M[i] + [bb[i]] for i in range(rows)]
    R, pivots = rref(aug)
    if cols in pivots:
        return None  # a pivot in the constant column: inconsistent
    part = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        part[c] = R[r][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis: list[Point] = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -R[r][f]
        basis.append(tuple(vec))
    return tuple(part), basis


def matrix_rank(A: Sequence[Sequence]) -> int:
    _, pivots = rref(A)
    return len(pivots)


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of *points* (-1 for the empty set)."""
    pts = [point(p) for p in points]
    if not pts:
        return -1
    if len(pts) == 1:
        return 0
    base = pts[0]
    return matrix_rank([list(vsub(p, base)) for p in pts[1:]])


def invert(A: Sequence[Sequence]) -> Matrix | None:
    """Exact inverse of a square matrix, or None if singular."""
    M = _as_matrix(A)
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("inverse of a non-square matrix")
    aug = [M[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R[:n]]
