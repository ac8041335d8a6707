"""JSON input/output with exact rationals.

Rational numbers travel as JSON integers or "a/b" strings; decimal literals
are rejected at parse time (floats cannot faithfully carry the exact data the
solvers need).  Parse errors carry the field path of the offending node.
Serialization is deterministic: sorted keys, fixed formatting.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import AffineFunc, Polynomial
from .futaki import ExtremalSolution
from .polytope import LabelledPolytope, from_halfspaces, standard_fiber_polytope
from .probe import Crease, ProbeReport
from .stability import StabilityReport, ThresholdResult
from .weights import BASE_PRESETS, BaseFactor, Convention, Fibration, fibration


class InputError(Exception):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _reject_float(text: str):
    raise InputError(
        "<number>",
        f"decimal literal {text!r} is not accepted; write an exact rational "
        'as an integer or an "a/b" string',
    )


def loads(text: str):
    try:
        return json.loads(
            text, parse_float=_reject_float, parse_constant=_reject_float
        )
    except json.JSONDecodeError as exc:
        raise InputError("<input>", f"invalid JSON: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def rational_to_json(x: Fraction):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_json(node, path: str) -> Fraction:
    if isinstance(node, bool):
        raise InputError(path, "expected a rational, got a boolean")
    if isinstance(node, int):
        return Fraction(node)
    if isinstance(node, str):
        try:
            return Fraction(node)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(path, f"not a rational: {node!r} ({exc})") from exc
    raise InputError(path, f"expected a rational (int or 'a/b'), got {type(node).__name__}")


def _expect(node, typ, path: str, what: str):
    if not isinstance(node, typ) or isinstance(node, bool):
        raise InputError(path, f"expected {what}, got {type(node).__name__}")
    return node


def _expect_keys(node: dict, path: str, required, optional=()):
    for key in required:
        if key not in node:
            raise InputError(path, f"missing required key {key!r}")
    for key in node:
        if key not in required and key not in optional:
            raise InputError(path, f"unknown key {key!r}")


def point_to_json(pt) -> list:
    return [rational_to_json(x) for x in pt]


def point_from_json(node, path: str):
    _expect(node, list, path, "a point (list of rationals)")
    return tuple(rational_from_json(x, f"{path}[{i}]") for i, x in enumerate(node))


def affine_to_json(f: AffineFunc) -> dict:
    return {
        "gradient": [rational_to_json(g) for g in f.gradient],
        "constant": rational_to_json(f.constant),
    }


def affine_from_json(node, path: str) -> AffineFunc:
    _expect(node, dict, path, "an affine function object")
    _expect_keys(node, path, ("gradient", "constant"))
    grad = _expect(node["gradient"], list, f"{path}.gradient", "a list")
    gradient = [
        rational_from_json(g, f"{path}.gradient[{i}]") for i, g in enumerate(grad)
    ]
    constant = rational_from_json(node["constant"], f"{path}.constant")
    return AffineFunc(gradient, constant)


def polytope_to_json(P: LabelledPolytope) -> dict:
    return {
        "dim": P.dim,
        "labels": [affine_to_json(L) for L in P.labels],
        "vertices": [point_to_json(v) for v in P.vertices],
    }


def polytope_from_json(node, path: str = "polytope") -> LabelledPolytope:
    _expect(node, dict, path, "a polytope object")
    if "standard_simplex" in node:
        _expect_keys(node, path, ("standard_simplex",))
        body = _expect(
            node["standard_simplex"], dict, f"{path}.standard_simplex", "an object"
        )
        _expect_keys(body, f"{path}.standard_simplex", ("l", "t"))
        ell = _expect(body["l"], int, f"{path}.standard_simplex.l", "an integer")
        t = rational_from_json(body["t"], f"{path}.standard_simplex.t")
        if ell < 1 or t <= 0:
            raise InputError(f"{path}.standard_simplex", "need l >= 1 and t > 0")
        return standard_fiber_polytope(ell, t)
    # "vertices" is derived data: accepted on input (round-trips) but ignored.
    _expect_keys(node, path, ("dim", "labels"), optional=("vertices",))
    dim = _expect(node["dim"], int, f"{path}.dim", "an integer")
    labels_node = _expect(node["labels"], list, f"{path}.labels", "a list")
    labels = [
        affine_from_json(L, f"{path}.labels[{j}]") for j, L in enumerate(labels_node)
    ]
    for j, L in enumerate(labels):
        if L.dim != dim:
            raise InputError(
                f"{path}.labels[{j}]", f"gradient length {L.dim} != dim {dim}"
            )
    return from_halfspaces(labels)


VAR_MARKER = "var"


def _factor_from_json(node, dim: int, path: str, allow_var: bool):
    """Returns (BaseFactor | None, c_is_var: bool); factor is None when c varies."""
    _expect(node, dict, path, "a factor object")
    _expect_keys(node, path, (), optional=("preset", "n", "s", "c", "p"))
    preset = None
    if "preset" in node:
        name = _expect(node["preset"], str, f"{path}.preset", "a string")
        if name not in BASE_PRESETS:
            known = ", ".join(sorted(BASE_PRESETS))
            raise InputError(f"{path}.preset", f"unknown preset {name!r} (known: {known})")
        preset = BASE_PRESETS[name]
    if "n" in node:
        n = _expect(node["n"], int, f"{path}.n", "an integer")
    elif preset is not None:
        n = preset.n
    else:
        raise InputError(path, "missing 'n' (or a 'preset' providing it)")
    if "s" in node:
        s = rational_from_json(node["s"], f"{path}.s")
    elif preset is not None:
        s = preset.s
    else:
        raise InputError(path, "missing 's' (or a 'preset' providing it)")
    grad = None
    if "p" in node:
        pnode = _expect(node["p"], list, f"{path}.p", "a list of rationals")
        grad = [rational_from_json(g, f"{path}.p[{i}]") for i, g in enumerate(pnode)]
        if len(grad) != dim:
            raise InputError(f"{path}.p", f"expected {dim} entries, got {len(grad)}")
    p = AffineFunc(grad if grad is not None else [0] * dim, 0)
    c_is_var = False
    if "c" in node:
        if node["c"] == VAR_MARKER:
            c_is_var = True
        else:
            c = rational_from_json(node["c"], f"{path}.c")
    elif preset is not None and preset.index is not None:
        c = preset.index
    else:
        raise InputError(path, "missing 'c' (or a Fano 'preset' providing it)")
    if c_is_var:
        if not allow_var:
            raise InputError(
                f"{path}.c", '"var" is only allowed in threshold templates'
            )
        return (n, s, p), True
    return BaseFactor(n=n, s=s, c=c, p=p), False


def fibration_from_json(
    node, convention: Convention, path: str = "fibration"
) -> Fibration:
    fiber, factors, _ = _fibration_parts(node, path, allow_var=False)
    return fibration(fiber, factors, convention)


def fibration_template_from_json(node, convention: Convention, path: str = "fibration"):
    """Parse a fibration with exactly one factor's c marked "var"; returns
    (make_fib, fiber) with make_fib(c) building the concrete fibration."""
    fiber, factors, var_index = _fibration_parts(node, path, allow_var=True)
    if var_index is None:
        raise InputError(
            f"{path}.factors", 'threshold templates need one factor with "c": "var"'
        )

    def make_fib(c: Fraction) -> Fibration:
        concrete = list(factors)
        n, s, p = concrete[var_index]
        concrete[var_index] = BaseFactor(n=n, s=s, c=c, p=p)
        return fibration(fiber, concrete, convention)

    return make_fib, fiber


def _fibration_parts(node, path: str, allow_var: bool):
    _expect(node, dict, path, "a fibration object")
    _expect_keys(node, path, ("fiber", "factors"))
    fiber = polytope_from_json(node["fiber"], f"{path}.fiber")
    factors_node = _expect(node["factors"], list, f"{path}.factors", "a list")
    factors = []
    var_index = None
    for a, fnode in enumerate(factors_node):
        factor, is_var = _factor_from_json(
            fnode, fiber.dim, f"{path}.factors[{a}]", allow_var
        )
        if is_var:
            if var_index is not None:
                raise InputError(
                    f"{path}.factors[{a}].c", 'only one factor may set "c": "var"'
                )
            var_index = a
        factors.append(factor)
    return fiber, factors, var_index


def _witness_to_json(witness):
    if witness is None:
        return None
    pt, value = witness
    return {"point": point_to_json(pt), "value": rational_to_json(value)}


def report_to_json(report: StabilityReport) -> dict:
    return {
        "verdict": report.verdict,
        "method": report.method,
        "depth": report.depth,
        "convention": report.convention.value,
        "x0": None if report.x0 is None else point_to_json(report.x0),
        "witness": _witness_to_json(report.witness),
        "margin": None if report.margin is None else rational_to_json(report.margin),
        "per_cone": [
            {
                "facet": o.facet,
                "cell": o.cell,
                "method": o.method,
                "status": o.status,
                "value": None if o.value is None else rational_to_json(o.value),
                "witness": _witness_to_json(o.witness),
                "depth": o.depth,
            }
            for o in report.per_cone
        ],
        "vertex_values": [
            {"vertex": point_to_json(vtx), "value": rational_to_json(val)}
            for vtx, val in report.vertex_values
        ],
        "notes": {k: v for k, v in report.notes},
    }


def extremal_to_json(sol: ExtremalSolution) -> dict:
    return {
        "l_ext": affine_to_json(sol.l_ext),
        "constant": sol.is_constant,
        "convention": sol.convention.value,
    }


def threshold_to_json(res: ThresholdResult) -> dict:
    return {
        "low": rational_to_json(res.low),
        "high": rational_to_json(res.high),
        "exact": None if res.exact is None else rational_to_json(res.exact),
        "certified": res.certified,
        "value_at_hi": None
        if res.value_at_hi is None
        else rational_to_json(res.value_at_hi),
        "floor": rational_to_json(res.floor),
        "tol": rational_to_json(res.tol),
        "convention": res.convention.value,
        "per_vertex": [
            {
                "vertex": point_to_json(e.vertex),
                "low": rational_to_json(e.low),
                "high": rational_to_json(e.high),
                "exact": None if e.exact is None else rational_to_json(e.exact),
                "kind": e.kind,
                "tail_positive": e.tail_positive,
                "num_degree": e.num_degree,
                "den_degree": e.den_degree,
            }
            for e in res.per_vertex
        ],
    }


def _crease_to_json(crease: Crease | None):
    if crease is None:
        return None
    return {
        "h": affine_to_json(crease.h),
        "positive_vertices": [point_to_json(v) for v in crease.positive.vertices],
    }


def probe_to_json(report: ProbeReport, v: Polynomial, w: Polynomial) -> dict:
    out = {
        "n_creases": report.n_creases,
        "min_ratio": None
        if report.min_ratio is None
        else rational_to_json(report.min_ratio),
        "argmin": _crease_to_json(report.argmin),
        "destabilizer": _crease_to_json(report.destabilizer),
        "found_destabilizer": report.found_destabilizer,
        "norm": "L1 surrogate for the J-norm (up to an uncomputed constant); "
        "a positive min_ratio is evidence, not a stability certificate",
    }
    if report.argmin is not None:
        out["argmin"]["df_value"] = rational_to_json(report.argmin.df_value(v, w))
        out["argmin"]["l1_norm"] = rational_to_json(report.argmin.l1_norm())
    return out


def polynomial_to_json(p: Polynomial) -> dict:
    return {
        "dim": p.dim,
        "terms": [
            {"exponents": list(expo), "coefficient": rational_to_json(coeff)}
            for expo, coeff in p.terms_sorted()
        ],
    }
