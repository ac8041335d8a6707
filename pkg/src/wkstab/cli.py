"""Command-line interface.

One executable, subcommand style:

    wkstab info|lext|futaki|check|check-fano|check-fano-total|threshold|probe|sweep

Inputs are JSON (a file path, ``-`` for stdin, or an inline ``{...}`` literal)
with exact rationals only.  Reports are JSON by default (``--text`` for a
human-readable rendering) and always name the sign convention in use.  Exit
codes: 0 certified/completed, 2 refuted (exact witness found), 3 inconclusive,
1 input or usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .exact import Point
from .futaki import (
    FutakiNotVanishing,
    SingularMomentMatrix,
    extremal_affine,
    futaki_character,
    stability_weight,
)
from .jsonio import InputError
from .measure import volume
from .polytope import (
    EmptyInterior,
    NotInterior,
    PolytopeError,
    monotone_point,
)
from .probe import crease_family, probe
from .stability import (
    HypothesisViolatedOnBracket,
    VERDICT_CERTIFIED,
    VERDICT_FAILS,
    base_point_candidates,
    check_fano_fiber,
    check_fano_total,
    check_fibration,
    condition_value_fano,
    default_base_point,
    threshold_c,
)
from .univariate import DegreeEscalationFailed
from .weights import (
    Convention,
    NonpositiveWeight,
    NotFanoFibration,
    NotMonotoneFiber,
    NotReflexiveFiber,
)

_RUNTIME_ERRORS = (
    InputError,
    PolytopeError,
    NonpositiveWeight,
    NotMonotoneFiber,
    NotFanoFibration,
    NotReflexiveFiber,
    HypothesisViolatedOnBracket,
    DegreeEscalationFailed,
    FutakiNotVanishing,
    SingularMomentMatrix,
    ValueError,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the report contract
    reserves 2 for refutations, so usage errors exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _x0_arg(text: str) -> tuple:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(
            f'bad point {text!r}; write rationals like "1/2,-3"'
        ) from exc


def _load_input(source: str):
    if source.lstrip().startswith("{"):
        return jsonio.loads(source)
    if source == "-":
        return jsonio.loads(sys.stdin.read())
    path = Path(source)
    if not path.exists():
        raise InputError("<input>", f"no such file: {source}")
    return jsonio.loads(path.read_text())


def _convention(args) -> Convention:
    return Convention.LEGACY if args.legacy_sign else Convention.CANONICAL


def _emit(args, data: dict, text_lines: list[str]) -> None:
    out = jsonio.dumps(data) if args.format == "json" else "\n".join(text_lines) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _fmt(x) -> str:
    return str(jsonio.rational_to_json(x))


def _fmt_point(pt: Point) -> str:
    return "(" + ", ".join(_fmt(x) for x in pt) + ")"


def _verdict_exit(verdict: str) -> int:
    if verdict == VERDICT_CERTIFIED:
        return 0
    if verdict == VERDICT_FAILS:
        return 2
    return 3


def _report_lines(data: dict) -> list[str]:
    lines = [
        f"verdict:    {data['verdict']}",
        f"method:     {data['method']} (depth {data['depth']})",
        f"convention: {data['convention']}",
    ]
    if data.get("x0") is not None:
        lines.append(f"x0:         ({', '.join(map(str, data['x0']))})")
    if data.get("margin") is not None:
        lines.append(f"margin:     {data['margin']}")
    if data.get("witness"):
        w = data["witness"]
        lines.append(f"witness:    value {w['value']} at ({', '.join(map(str, w['point']))})")
    if data.get("vertex_values"):
        vals = [Fraction(str(e["value"])) for e in data["vertex_values"]]
        lines.append(f"minimum vertex value: {_fmt(min(vals))}")
        for e in data["vertex_values"]:
            lines.append(
                f"  vertex ({', '.join(map(str, e['vertex']))}): {e['value']}"
            )
    for key, val in sorted(data.get("notes", {}).items()):
        lines.append(f"{key}: {val}")
    return lines


# ---------------------------------------------------------------- commands


def _cmd_info(args) -> int:
    node = _load_input(args.input)
    conv = _convention(args)
    data: dict = {"convention": conv.value}
    lines: list[str] = [f"convention: {conv.value}"]
    if isinstance(node, dict) and "fiber" in node:
        fib = jsonio.fibration_from_json(node, conv)
        P = fib.fiber
        data["fibration"] = {
            "factors": [
                {
                    "n": f.n,
                    "s": jsonio.rational_to_json(f.s),
                    "c": jsonio.rational_to_json(f.c),
                    "p": [jsonio.rational_to_json(g) for g in f.p.gradient],
                }
                for f in fib.factors
            ],
            "total_dim": fib.total_dim,
            "v_degree": fib.v.degree(),
            "w_base_degree": fib.w_base.degree(),
            "normalized_inequality": list(fib.normalized_inequality()),
        }
        lines.append(f"total dim Y: {fib.total_dim}; factors: {len(fib.factors)}")
        lines.append(
            "normalized inequality c_a > sum p_ai: "
            + ", ".join(map(str, fib.normalized_inequality()))
        )
    else:
        P = jsonio.polytope_from_json(node)
    mono = monotone_point(P)
    data["polytope"] = jsonio.polytope_to_json(P)
    data["polytope"]["volume"] = jsonio.rational_to_json(volume(P))
    data["polytope"]["simple"] = P.is_simple()
    data["polytope"]["monotone"] = (
        None
        if mono is None
        else {"x0": jsonio.point_to_json(mono[0]), "t": jsonio.rational_to_json(mono[1])}
    )
    lines.append(f"dim: {P.dim}; facets: {P.n_facets}; vertices: {len(P.vertices)}")
    lines.append(f"volume: {_fmt(volume(P))}; simple (Delzant-type): {P.is_simple()}")
    lines.append(
        "monotone: none"
        if mono is None
        else f"monotone: x0 = {_fmt_point(mono[0])}, t = {_fmt(mono[1])}"
    )
    for vtx in P.vertices:
        lines.append(f"  vertex {_fmt_point(vtx)}")
    _emit(args, data, lines)
    return 0


def _cmd_lext(args) -> int:
    fib = jsonio.fibration_from_json(_load_input(args.input), _convention(args))
    sol = extremal_affine(fib)
    data = jsonio.extremal_to_json(sol)
    grad = ", ".join(_fmt(g) for g in sol.l_ext.gradient)
    lines = [
        f"l_ext: gradient ({grad}), constant {_fmt(sol.l_ext.constant)}",
        f"constant function: {sol.is_constant}",
        f"convention: {sol.convention.value}",
    ]
    _emit(args, data, lines)
    return 0


def _cmd_futaki(args) -> int:
    fib = jsonio.fibration_from_json(_load_input(args.input), _convention(args))
    char = futaki_character(fib)
    data = {
        "character": [jsonio.rational_to_json(x) for x in char],
        "vanishes": all(x == 0 for x in char),
        "convention": fib.convention.value,
    }
    lines = [
        f"futaki character: ({', '.join(_fmt(x) for x in char)})",
        f"vanishes (l_ext constant): {data['vanishes']}",
        f"convention: {fib.convention.value}",
    ]
    _emit(args, data, lines)
    return 0


def _cmd_check(args) -> int:
    fib = jsonio.fibration_from_json(_load_input(args.input), _convention(args))
    if args.x0_sweep:
        reports = [
            (x0, check_fibration(fib, x0=x0, max_depth=args.max_depth))
            for x0 in base_point_candidates(fib.fiber)
        ]
        best = min(
            (r for _, r in reports),
            key=lambda r: {VERDICT_CERTIFIED: 0, VERDICT_FAILS: 1}.get(r.verdict, 2),
        )
        data = {
            "verdict": best.verdict,
            "convention": fib.convention.value,
            "x0_sweep": [jsonio.report_to_json(r) for _, r in reports],
        }
        lines = [f"x0 sweep over {len(reports)} base points:"]
        for x0, r in reports:
            lines.append(f"  x0 = {_fmt_point(x0)}: {r.verdict}")
        lines.append(f"best verdict: {best.verdict}")
        lines.append(f"convention: {fib.convention.value}")
        _emit(args, data, lines)
        return _verdict_exit(best.verdict)
    if args.x0 is not None and len(args.x0) != fib.dim:
        raise InputError("--x0", f"expected {fib.dim} coordinates, got {len(args.x0)}")
    report = check_fibration(fib, x0=args.x0, max_depth=args.max_depth)
    data = jsonio.report_to_json(report)
    _emit(args, data, _report_lines(data))
    return _verdict_exit(report.verdict)


def _cmd_check_fano(args) -> int:
    fib = jsonio.fibration_from_json(_load_input(args.input), _convention(args))
    report = check_fano_fiber(fib, max_depth=args.max_depth)
    if args.csv:
        _write_condition_csv(args.csv, fib, args.csv_samples)
    data = jsonio.report_to_json(report)
    _emit(args, data, _report_lines(data))
    return _verdict_exit(report.verdict)


def _write_condition_csv(path: str, fib, samples: int) -> None:
    """Plot-ready table: condition value along each segment x0 -> vertex."""
    sol = extremal_affine(fib)
    x0 = fib.fano_fiber[0]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        coords = [f"x{i+1}" for i in range(fib.dim)]
        writer.writerow(["segment_vertex", "step"] + coords + ["condition_value"])
        for vi, vtx in enumerate(fib.fiber.vertices):
            for k in range(samples + 1):
                s = Fraction(k, samples)
                pt = tuple(x0[i] + s * (vtx[i] - x0[i]) for i in range(fib.dim))
                try:
                    val = condition_value_fano(fib, sol.l_ext, pt)
                except NonpositiveWeight:
                    continue
                writer.writerow(
                    [vi, str(s)] + [str(c) for c in pt] + [str(val)]
                )


def _cmd_check_fano_total(args) -> int:
    fib = jsonio.fibration_from_json(_load_input(args.input), _convention(args))
    report = check_fano_total(fib)
    data = jsonio.report_to_json(report)
    _emit(args, data, _report_lines(data))
    return _verdict_exit(report.verdict)


def _cmd_threshold(args) -> int:
    if args.var != "c":
        raise InputError("--var", "only the class offset 'c' can be swept")
    make_fib, _fiber = jsonio.fibration_template_from_json(
        _load_input(args.input), _convention(args)
    )
    res = threshold_c(
        make_fib, args.lo, args.hi, tol=args.tol, degree_cap=args.degree_cap
    )
    data = jsonio.threshold_to_json(res)
    lines = [
        f"threshold bracket: [{_fmt(res.low)}, {_fmt(res.high)}]"
        + (f" (exact {_fmt(res.exact)})" if res.exact is not None else ""),
        f"certified for larger c: {res.certified}",
        f"condition value at c_hi: "
        + ("n/a" if res.value_at_hi is None else _fmt(res.value_at_hi)),
        f"hypothesis floor c_lo: {_fmt(res.floor)}",
        f"convention: {res.convention.value}",
    ]
    for e in res.per_vertex:
        where = (
            f"[{_fmt(e.low)}, {_fmt(e.high)}]" if e.exact is None else _fmt(e.exact)
        )
        lines.append(
            f"  vertex {_fmt_point(e.vertex)}: {e.kind} {where} "
            f"(num deg {e.num_degree}, den deg {e.den_degree})"
        )
    _emit(args, data, lines)
    return 0 if res.certified else 3


def _cmd_probe(args) -> int:
    fib = jsonio.fibration_from_json(_load_input(args.input), _convention(args))
    sol = extremal_affine(fib)
    w = stability_weight(fib, sol.l_ext)
    x0 = default_base_point(fib.fiber)
    family = crease_family(fib.fiber, x0, args.resolution)
    report = probe(
        fib.fiber,
        fib.v,
        w,
        family,
        verify_futaki=fib.convention is Convention.CANONICAL,
    )
    data = jsonio.probe_to_json(report, fib.v, w)
    data["convention"] = fib.convention.value
    data["resolution"] = args.resolution
    lines = [
        f"creases tried: {report.n_creases} (resolution {args.resolution})",
        "min ratio F(f)/|f|_L1: "
        + ("n/a" if report.min_ratio is None else _fmt(report.min_ratio)),
        f"destabilizer found: {report.found_destabilizer}",
        "note: positive min ratio is evidence only (L1 surrogate), "
        "negative F(f) is an exact refutation",
        f"convention: {fib.convention.value}",
    ]
    if report.destabilizer is not None:
        h = report.destabilizer.h
        grad = ", ".join(_fmt(g) for g in h.gradient)
        lines.append(f"destabilizer crease: h = ({grad}).x + {_fmt(h.constant)}")
    _emit(args, data, lines)
    return 2 if report.found_destabilizer else 0


def _substitute(node, binding: dict, path: str):
    if isinstance(node, str) and node.startswith("$"):
        name = node[1:]
        if name not in binding:
            raise InputError(path, f"unbound placeholder ${name}")
        return jsonio.rational_to_json(binding[name])
    if isinstance(node, list):
        return [_substitute(x, binding, f"{path}[{i}]") for i, x in enumerate(node)]
    if isinstance(node, dict):
        return {k: _substitute(v, binding, f"{path}.{k}") for k, v in node.items()}
    return node


def _sweep_rows(node) -> list[dict]:
    if "rows" in node:
        rows_node = node["rows"]
        if not isinstance(rows_node, list):
            raise InputError("sweep.rows", "expected a list of binding objects")
        rows = []
        for i, row in enumerate(rows_node):
            if not isinstance(row, dict):
                raise InputError(f"sweep.rows[{i}]", "expected an object")
            rows.append(
                {
                    k: jsonio.rational_from_json(v, f"sweep.rows[{i}].{k}")
                    for k, v in row.items()
                }
            )
        return rows
    if "grid" in node:
        grid_node = node["grid"]
        if not isinstance(grid_node, dict):
            raise InputError("sweep.grid", "expected an object of value lists")
        names = sorted(grid_node)
        axes = []
        for name in names:
            vals = grid_node[name]
            if not isinstance(vals, list):
                raise InputError(f"sweep.grid.{name}", "expected a list")
            axes.append(
                [
                    jsonio.rational_from_json(v, f"sweep.grid.{name}[{i}]")
                    for i, v in enumerate(vals)
                ]
            )
        rows = [{}]
        for name, vals in zip(names, axes):
            rows = [dict(r, **{name: v}) for r in rows for v in vals]
        return rows
    raise InputError("sweep", "need either 'rows' or 'grid'")


_SWEEP_RUNNERS = {
    "check-fano": check_fano_fiber,
    "check": check_fibration,
    "check-fano-total": check_fano_total,
}


def _cmd_sweep(args) -> int:
    node = _load_input(args.input)
    if not isinstance(node, dict) or "template" not in node:
        raise InputError("sweep", "expected an object with a 'template' key")
    for key in node:
        if key not in ("template", "rows", "grid", "run"):
            raise InputError("sweep", f"unknown key {key!r}")
    run = node.get("run", "check-fano")
    if run not in _SWEEP_RUNNERS:
        raise InputError(
            "sweep.run", f"unknown command {run!r} (choose from {sorted(_SWEEP_RUNNERS)})"
        )
    runner = _SWEEP_RUNNERS[run]
    conv = _convention(args)
    rows = _sweep_rows(node)
    out_rows = []
    lines = [f"sweep: {len(rows)} rows, command {run}, convention {conv.value}"]
    for binding in rows:
        concrete = _substitute(node["template"], binding, "sweep.template")
        fib = jsonio.fibration_from_json(concrete, conv, path="sweep.template")
        report = runner(fib)
        entry = {
            "bindings": {k: jsonio.rational_to_json(v) for k, v in sorted(binding.items())},
            "verdict": report.verdict,
            "margin": None
            if report.margin is None
            else jsonio.rational_to_json(report.margin),
            "witness": None
            if report.witness is None
            else {
                "point": jsonio.point_to_json(report.witness[0]),
                "value": jsonio.rational_to_json(report.witness[1]),
            },
        }
        out_rows.append(entry)
        bstr = ", ".join(f"{k}={_fmt(v)}" for k, v in sorted(binding.items()))
        lines.append(f"  {bstr}: {report.verdict}")
    data = {
        "command": run,
        "convention": conv.value,
        "n_rows": len(out_rows),
        "rows": out_rows,
    }
    if args.csv:
        _write_sweep_csv(args.csv, out_rows)
    verdicts = {r["verdict"] for r in out_rows}
    _emit(args, data, lines)
    if VERDICT_FAILS in verdicts:
        return 2
    if verdicts - {VERDICT_CERTIFIED}:
        return 3
    return 0


def _write_sweep_csv(path: str, rows: list[dict]) -> None:
    names = sorted({k for r in rows for k in r["bindings"]})
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(names + ["verdict", "margin"])
        for r in rows:
            writer.writerow(
                [str(r["bindings"].get(n, "")) for n in names]
                + [r["verdict"], "" if r["margin"] is None else str(r["margin"])]
            )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wkstab",
        description="Exact sufficient-condition checks for weighted uniform "
        "K-stability of labelled polytopes (fibration weights).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, x0=False):
        sp.add_argument("input", help="JSON file path, '-' for stdin, or inline '{...}'")
        sp.add_argument(
            "--legacy-sign",
            action="store_true",
            help="use the legacy sign convention of the original programs "
            "(default: canonical, fixed by the Fano normalization)",
        )
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument(
            "--json", dest="format", action="store_const", const="json", default="json"
        )
        fmt.add_argument("--text", dest="format", action="store_const", const="text")
        sp.add_argument("--out", help="write the report to this file instead of stdout")
        if x0:
            sp.add_argument(
                "--x0", type=_x0_arg, default=None,
                help='interior base point, e.g. "0,1/2" (default: monotone '
                "point, else vertex centroid)",
            )

    sp = sub.add_parser("info", help="describe a polytope or fibration")
    common(sp)
    sp.set_defaults(func=_cmd_info)

    sp = sub.add_parser("lext", help="solve for the extremal affine function")
    common(sp)
    sp.set_defaults(func=_cmd_lext)

    sp = sub.add_parser("futaki", help="the obstruction to a constant l_ext")
    common(sp)
    sp.set_defaults(func=_cmd_futaki)

    sp = sub.add_parser("check", help="per-cone sufficient condition")
    common(sp, x0=True)
    sp.add_argument("--max-depth", type=int, default=6, help="Bernstein subdivision depth")
    sp.add_argument(
        "--x0-sweep", action="store_true",
        help="try the centroid and all cell barycenters as x0",
    )
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("check-fano", help="vertex condition for monotone fibers")
    common(sp)
    sp.add_argument("--max-depth", type=int, default=6)
    sp.add_argument("--csv", help="also write (point, condition value) samples as CSV")
    sp.add_argument("--csv-samples", type=int, default=50)
    sp.set_defaults(func=_cmd_check_fano)

    sp = sub.add_parser(
        "check-fano-total", help="sup l_ext <= 2(dim Y + 1) for anticanonical data"
    )
    common(sp)
    sp.set_defaults(func=_cmd_check_fano_total)

    sp = sub.add_parser("threshold", help="smallest certified class offset c")
    common(sp)
    sp.add_argument("--var", default="c", help="swept parameter (only 'c')")
    sp.add_argument("--lo", type=_rational, required=True, help="bracket floor c_lo")
    sp.add_argument("--hi", type=_rational, required=True, help="bracket ceiling c_hi")
    sp.add_argument("--tol", type=_rational, default=Fraction(1, 100))
    sp.add_argument("--degree-cap", type=int, default=12)
    sp.set_defaults(func=_cmd_threshold)

    sp = sub.add_parser("probe", help="crease destabilizer search")
    common(sp)
    sp.add_argument("--resolution", type=int, default=3)
    sp.set_defaults(func=_cmd_probe)

    sp = sub.add_parser("sweep", help="run a check over a parameter grid")
    common(sp)
    sp.add_argument("--csv", help="also write one CSV row per grid point")
    sp.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _RUNTIME_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
