"""Fibration data and weight polynomials.

A fibration over a product of constant-scalar-curvature base factors, with
toric fiber given by a labelled polytope P, is encoded by per-factor data
(n_a, s_a, c_a, p_a):  n_a the complex dimension of the factor, s_a its
scalar curvature, c_a the Kaehler-class offset, and p_a a linear form on the
fiber coordinates.  The induced weights on P are

    v      = prod_a (p_a + c_a)^{n_a}
    w_base = sum_a s_a (p_a + c_a)^{n_a - 1} prod_{b != a} (p_b + c_b)^{n_b}

(w_base is v * sum_a s_a/(p_a + c_a) with denominators cleared).  Positivity
of every p_a + c_a on P is required and is checked at the vertices.

Two sign conventions are carried through the extremal solve (module futaki):
"canonical", fixed by the Fano normalization l_ext == 2 dim Y on anticanonical
product fibrations, and "legacy", which reproduces an older convention that
accumulates the w_base term with the opposite sign (and, in fiber dimension 1,
drops the boundary factor 2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import AffineFunc, Polynomial, radial_derivative, rat
from .polytope import LabelledPolytope, monotone_point, standard_fiber_polytope


class Convention(enum.Enum):
    CANONICAL = "canonical"
    LEGACY = "legacy"

    def __str__(self) -> str:
        return self.value


class NonpositiveWeight(Exception):
    def __init__(self, vertex, factor_index: int):
        super().__init__(
            f"factor {factor_index}: p + c is not positive at vertex {vertex}"
        )
        self.vertex = vertex
        self.factor_index = factor_index


class NotReflexiveFiber(Exception):
    pass


class NotMonotoneFiber(Exception):
    pass


class NotFanoFibration(Exception):
    pass


@dataclass(frozen=True)
class BaseFactor:
    """One base factor: (n, s, c) and the linear form p (zero constant term)."""

    n: int
    s: Fraction
    c: Fraction
    p: AffineFunc

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError("factor dimension n must be a positive integer")
        object.__setattr__(self, "s", rat(self.s))
        object.__setattr__(self, "c", rat(self.c))
        if self.p.constant != 0:
            raise ValueError("the linear form p must have zero constant term")

    @property
    def form(self) -> AffineFunc:
        """The affine function p + c."""
        return AffineFunc(self.p.gradient, self.c)


def base_factor(n: int, s, c, p_gradient, dim: int) -> BaseFactor:
    """Convenience constructor; ``p_gradient`` may be None for p = 0."""
    grad = [0] * dim if p_gradient is None else list(p_gradient)
    if len(grad) != dim:
        raise ValueError("p gradient length does not match fiber dimension")
    return BaseFactor(n=n, s=rat(s), c=rat(c), p=AffineFunc(grad, 0))


@dataclass(frozen=True)
class BasePreset:
    """Catalog entry: dimension, scalar curvature, Fano index (None if not Fano)."""

    n: int
    s: Fraction
    index: Fraction | None


#: Inert catalog of standard base factors (classical constant-scalar-curvature
#: manifolds).  For the Fano entries s = 2 n I; the entry "neg-KE3" is a
#: canonically polarized threefold with negative Kaehler-Einstein metric.
BASE_PRESETS: dict[str, BasePreset] = {
    "P1": BasePreset(1, Fraction(4), Fraction(2)),
    "P2": BasePreset(2, Fraction(12), Fraction(3)),
    "P3": BasePreset(3, Fraction(24), Fraction(4)),
    "Q3": BasePreset(3, Fraction(18), Fraction(3)),
    "V22": BasePreset(3, Fraction(6), Fraction(1)),
    "neg-KE3": BasePreset(3, Fraction(-6), None),
}


@dataclass(frozen=True)
class Fibration:
    fiber: LabelledPolytope
    factors: tuple[BaseFactor, ...]
    convention: Convention
    v: Polynomial
    w_base: Polynomial
    fano_fiber: tuple | None  # (x0, t) when the fiber is monotone with scale t

    @property
    def dim(self) -> int:
        """Fiber (torus) dimension."""
        return self.fiber.dim

    @property
    def total_dim(self) -> int:
        """Complex dimension of the total space: fiber dim + sum of n_a."""
        return self.fiber.dim + sum(f.n for f in self.factors)

    def with_convention(self, convention: Convention) -> "Fibration":
        return Fibration(
            self.fiber, self.factors, convention, self.v, self.w_base, self.fano_fiber
        )

    def normalized_inequality(self) -> tuple[bool, ...]:
        """Diagnostic: whether c_a > sum_i p_{ai} for each factor.

        This is the textbook inequality for projective bundles under a
        degree-ordering normalization; the binding requirement is vertex
        positivity of p_a + c_a, enforced at construction.
        """
        return tuple(f.c > sum(f.p.gradient) for f in self.factors)


def _build_weights(
    fiber: LabelledPolytope, factors: tuple[BaseFactor, ...]
) -> tuple[Polynomial, Polynomial]:
    dim = fiber.dim
    forms = []
    for a, f in enumerate(factors):
        if f.p.dim != dim:
            raise ValueError(f"factor {a}: p is a form on the wrong dimension")
        for vert in fiber.vertices:
            if f.form(vert) <= 0:
                raise NonpositiveWeight(vert, a)
        forms.append(f.form.to_polynomial())
    v = Polynomial.constant(dim, 1)
    for a, f in enumerate(factors):
        v = v * forms[a] ** f.n
    w_base = Polynomial.zero(dim)
    for a, f in enumerate(factors):
        term = Polynomial.constant(dim, f.s) * forms[a] ** (f.n - 1)
        for b, g in enumerate(factors):
            if b != a:
                term = term * forms[b] ** g.n
        w_base = w_base + term
    return v, w_base


def fibration(
    fiber: LabelledPolytope,
    factors,
    convention: Convention = Convention.CANONICAL,
) -> Fibration:
    """Validate the factor data against the fiber polytope and expand weights."""
    factors = tuple(factors)
    v, w_base = _build_weights(fiber, factors)
    return Fibration(
        fiber=fiber,
        factors=factors,
        convention=convention,
        v=v,
        w_base=w_base,
        fano_fiber=monotone_point(fiber),
    )


def weight_v(fib: Fibration) -> Polynomial:
    return fib.v


def weight_w_base(fib: Fibration) -> Polynomial:
    return fib.w_base


def projective_bundle(
    degrees,
    base,
    c,
    t,
    convention: Convention = Convention.CANONICAL,
) -> Fibration:
    """Fibration with standard simplex fiber (scale t) over k base factors.

    ``degrees[a]`` is the integer/rational vector (p_{a1}, ..., p_{al}) of the
    a-th factor's twisting, ``base[a] = (n_a, s_a)``, and ``c[a]`` the class
    offset.  Positivity of p_a + c_a is enforced at the fiber vertices; the
    normalized inequality c_a > sum_i p_{ai} is available as a diagnostic on
    the result.
    """
    degrees = [list(d) for d in degrees]
    base = list(base)
    c = list(c)
    if not len(degrees) == len(base) == len(c):
        raise ValueError("degrees, base, and c must have one entry per factor")
    if not degrees:
        raise ValueError("at least one base factor is required")
    ell = len(degrees[0])
    fiber = standard_fiber_polytope(ell, t)
    factors = [
        base_factor(n=base[a][0], s=base[a][1], c=c[a], p_gradient=degrees[a], dim=ell)
        for a in range(len(base))
    ]
    return fibration(fiber, factors, convention)


def fano_anticanonical(
    fiber: LabelledPolytope,
    entries,
    convention: Convention = Convention.CANONICAL,
) -> Fibration:
    """Anticanonical specialization: c_a = I_a and s_a = 2 n_a I_a.

    ``entries[a] = (n_a, I_a, p_a)`` with p_a an AffineFunc (zero constant) or
    None for the untwisted factor.  The fiber must be monotone with scale 1.
    """
    mono = monotone_point(fiber)
    if mono is None or mono[1] != 1:
        raise NotMonotoneFiber(
            "the anticanonical normalization needs a monotone fiber with scale 1"
        )
    factors = []
    for n, index, p in entries:
        index = rat(index)
        p = AffineFunc([0] * fiber.dim, 0) if p is None else p
        factors.append(BaseFactor(n=n, s=2 * n * index, c=index, p=p))
    return fibration(fiber, factors, convention)


def soliton_weights(fib: Fibration, v_user: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Soliton-type weight pair built from a user weight times the fibration's v.

    Requires a reflexive-type fiber: monotone with monotone point 0 and scale
    1.  Returns (g, 2(l*g + radial_derivative(g, 0))) with g = v_user * v and
    l the fiber dimension.
    """
    ell = fib.dim
    origin = tuple([Fraction(0)] * ell)
    if fib.fano_fiber is None or fib.fano_fiber != (origin, Fraction(1)):
        raise NotReflexiveFiber(
            "soliton weights need a monotone fiber with monotone point 0 and scale 1"
        )
    if v_user.dim != ell:
        raise ValueError("v_user has the wrong dimension")
    g = v_user * fib.v
    tilde_w = (Polynomial.constant(ell, ell) * g + radial_derivative(g, origin)) * 2
    return g, tilde_w
