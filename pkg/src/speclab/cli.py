"""Command-line front door wiring the library into reproducible reports.

Every command emits one JSON document on stdout (CSV for sweep) with floats
formatted to 15 significant digits, so identical invocations are
byte-identical. Domain errors exit 2, argument errors 64, schema violations
65, numeric failures 70; each prints a one-line JSON error on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import bisection, charpoly, cuts, graph, matrices
from .errors import (DomainError, NumericError, SchemaError, SpecLabError)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_SCHEMA = 65
EXIT_NUMERIC = 70


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(x: float) -> float:
    """Round to 15 significant digits for stable, locale-free output."""
    return float(format(float(x), ".15g"))


def _rat(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator,
            "float": _fmt(float(value))}


def _vertices_1based(subset) -> list[int]:
    return [v + 1 for v in subset.vertices()] if subset is not None else []


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SPECLAB_THREADS", "1")))
    except ValueError:
        return 1


def _family_spec(args) -> graph.FamilySpec:
    fam = args.family.replace("-", "_")
    if fam not in graph.FAMILIES:
        raise DomainError(f"unknown family {args.family!r}")
    spec = graph.FamilySpec(fam, n=args.n, k=args.k, m=args.m, depth=args.depth)
    spec.validate()
    return spec


def _load_input(args) -> tuple[graph.Graph, graph.FamilySpec | None]:
    has_file = getattr(args, "graph", None) is not None
    has_family = getattr(args, "family", None) is not None
    if has_file == has_family:
        raise _UsageError("give exactly one input: --graph PATH or --family NAME")
    if has_file:
        try:
            with open(args.graph, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read graph file: {exc}") from exc
        return graph.from_json(text), None
    spec = _family_spec(args)
    return graph.generate(spec), spec


def _add_input_flags(p: argparse.ArgumentParser, family_only: bool = False):
    if not family_only:
        p.add_argument("--graph", help="path to a graph JSON document")
    p.add_argument("--family", help="graph family name")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--depth", type=int)


def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise _UsageError(f"range must be LO:HI, got {text!r}")
    if hi < lo:
        raise _UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _emit(doc, out, stdout) -> None:
    text = json.dumps(doc) if not isinstance(doc, str) else doc
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    stdout.write(text)


def build_parser() -> _Parser:
    parser = _Parser(prog="speclab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family instance")
    _add_input_flags(p, family_only=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("spectrum", help="eigenvalues of a graph matrix")
    _add_input_flags(p)
    p.add_argument("--kind", default="normalized")
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--vectors", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("mcut", help="exact minimum normalized cut")
    _add_input_flags(p)
    p.add_argument("--method", choices=["brute", "formula", "pruned"], default="brute")
    p.add_argument("--seed", help="comma-separated 1-based vertices for --method pruned")
    p.add_argument("--out")

    p = sub.add_parser("lcut", help="spectral bisection cut")
    _add_input_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("compare", help="minimum cut vs spectral cut")
    _add_input_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("charpoly", help="characteristic polynomial evaluation")
    p.add_argument("--which", choices=["pnk", "qnk", "product"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lam", type=float)
    p.add_argument("--roots", action="store_true")
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="closed-form minima over a parameter grid")
    p.add_argument("--family", required=True)
    p.add_argument("--n-range", required=True)
    p.add_argument("--k-range", required=True)
    p.add_argument("--format", choices=["csv", "gnuplot"], default="csv")
    p.add_argument("--out")

    p = sub.add_parser("bounds", help="expansion constants and eigenvalue bounds")
    _add_input_flags(p)
    p.add_argument("--out")

    p = sub.add_parser("counterexample", help="ladder counterexample verdicts")
    p.add_argument("--k-range", required=True)
    p.add_argument("--out")
    return parser


def _cmd_gen(args, stdout):
    spec = _family_spec(args)
    g = graph.generate(spec)
    if args.format == "dot":
        _emit(graph.to_dot(g), args.out, stdout)
    else:
        _emit(graph.to_json_dict(g), args.out, stdout)


def _cmd_spectrum(args, stdout):
    kind = matrices.MatrixKind.parse(args.kind)
    g, spec = _load_input(args)
    if args.closed_form:
        if spec is None:
            raise _UsageError("--closed-form needs a --family input")
        cf = matrices.closed_form_spectrum(spec, kind)
        doc = {"kind": kind.value, "source": cf.source, "closed_form": True,
               "eigenvalues": [_fmt(v) for v in cf.eigenvalues]}
        if args.vectors and cf.eigenvectors is not None:
            doc["vectors"] = [[_fmt(x) for x in cf.eigenvectors[:, j]]
                              for j in range(cf.eigenvalues.shape[0])]
        _emit(doc, args.out, stdout)
        return
    sp = matrices.eig_sym(matrices.build_matrix(g, kind))
    doc = {"kind": kind.value, "source": sp.source, "closed_form": False,
           "eigenvalues": [_fmt(v) for v in sp.eigenvalues],
           "residual": _fmt(sp.residual)}
    if args.vectors:
        doc["vectors"] = [[_fmt(x) for x in sp.eigenvectors[:, j]]
                          for j in range(sp.order)]
    _emit(doc, args.out, stdout)


def _cut_report_doc(report: cuts.CutReport) -> dict:
    return {"value": _rat(report.value), "cut_weight": report.cut_weight,
            "method": report.method, "branch": report.branch,
            "witness": _vertices_1based(report.witness),
            "family": report.family.label() if report.family else None}


def _cmd_mcut(args, stdout):
    g, spec = _load_input(args)
    if args.method == "formula":
        if spec is None:
            raise _UsageError("--method formula needs a --family input")
        report = cuts.min_ncut_formula(spec)
    elif args.method == "pruned":
        if not args.seed:
            raise _UsageError("--method pruned needs --seed")
        verts = [int(tok) - 1 for tok in args.seed.split(",")]
        report = cuts.min_ncut_pruned(g, graph.vertex_subset(g, verts))
    else:
        report = cuts.min_ncut_brute(g)
    _emit(_cut_report_doc(report), args.out, stdout)


def _bisect_doc(report: bisection.BisectionReport) -> dict:
    # a 2-vertex graph has no third eigenvalue, hence no finite gap
    gap = _fmt(report.gap) if math.isfinite(report.gap) else None
    doc = {"lambda2": _fmt(report.lambda2), "simple": report.simple,
           "gap": gap, "parity": report.parity,
           "lcut": _rat(report.value),
           "positive_side": _vertices_1based(report.positive_side),
           "zero_count": report.zero_count}
    if report.alt_value is not None:
        doc["alt_orientation_lcut"] = _rat(report.alt_value)
    return doc


def _cmd_lcut(args, stdout):
    g, _spec = _load_input(args)
    _emit(_bisect_doc(bisection.spectral_cut(g)), args.out, stdout)


def _cmd_compare(args, stdout):
    g, spec = _load_input(args)
    if spec is not None:
        try:
            mcut = cuts.min_ncut_formula(spec)
        except DomainError:
            mcut = cuts.min_ncut_brute(g)
    else:
        mcut = cuts.min_ncut_brute(g)
    lcut = bisection.spectral_cut(g)
    doc = {"mcut": _rat(mcut.value), "lcut": _rat(lcut.value),
           "lambda2": _fmt(lcut.lambda2),
           "equal": mcut.value == lcut.value,
           "mcut_witness": _vertices_1based(mcut.witness),
           "lcut_positive_side": _vertices_1based(lcut.positive_side)}
    _emit(doc, args.out, stdout)


def _cmd_charpoly(args, stdout):
    fn = {"pnk": charpoly.weighted_path_charpoly,
          "qnk": charpoly.roach_odd_charpoly,
          "product": charpoly.roach_charpoly}[args.which]
    n, k = args.n, args.k
    if args.roots == (args.lam is not None):
        raise _UsageError("give exactly one of --lam X or --roots")
    if args.lam is not None:
        value = fn(n, k, args.lam)
        if not math.isfinite(value):
            raise NumericError(f"polynomial evaluation overflowed at lambda={args.lam}")
        doc = {"which": args.which, "n": n, "k": k, "lambda": _fmt(args.lam),
               "value": _fmt(value)}
        _emit(doc, args.out, stdout)
        return
    steps = args.steps or max(2000, 4 * (n + k))
    brackets = charpoly.bracket_roots(lambda x: fn(n, k, x), steps)
    doc = {"which": args.which, "n": n, "k": k, "interval": [0, 2],
           "steps": steps,
           "roots": [_fmt(0.5 * (a + b)) for a, b in brackets],
           "count": len(brackets)}
    _emit(doc, args.out, stdout)


def _cmd_sweep(args, stdout):
    fam = args.family.replace("-", "_")
    n_range, k_range = _parse_range(args.n_range), _parse_range(args.k_range)
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(lambda n: cuts.formula_sweep(fam, [n], k_range), n_range)
            rows = [row for chunk in chunks for row in chunk]
    else:
        rows = cuts.formula_sweep(fam, n_range, k_range)
    dump = cuts.sweep_to_gnuplot if args.format == "gnuplot" else cuts.sweep_to_csv
    _emit(dump(rows), args.out, stdout)


def _cmd_bounds(args, stdout):
    g, spec = _load_input(args)
    if spec is not None:
        try:
            mcut = cuts.min_ncut_formula(spec)
        except DomainError:
            mcut = cuts.min_ncut_brute(g)
    else:
        mcut = cuts.min_ncut_brute(g)
    lam2_norm = matrices.eig_sym(matrices.build_matrix(g, matrices.MatrixKind.NORMALIZED)).lambda2
    lam2_diff = matrices.eig_sym(matrices.build_matrix(g, matrices.MatrixKind.DIFFERENCE)).lambda2
    iso = cuts.isoperimetric_number(g)
    h = cuts.cheeger_edge(g)
    gv = cuts.cheeger_vertex(g)
    max_deg = max(g.degrees)
    iso_upper_sq = (2 * max_deg - lam2_diff) * lam2_diff
    doc = {
        "mcut": _rat(mcut.value),
        "lambda2_normalized": _fmt(lam2_norm),
        "lambda2_difference": _fmt(lam2_diff),
        "isoperimetric": _rat(iso),
        "cheeger_edge": _rat(h),
        "cheeger_vertex": _rat(gv),
        "max_degree": max_deg,
        "checks": {
            "mcut_ge_lambda2": lam2_norm <= float(mcut.value) + 1e-9,
            "isoperimetric_lower": lam2_diff / 2 <= float(iso) + 1e-9,
            "isoperimetric_upper": (float(iso) ** 2 <= iso_upper_sq + 1e-9)
                                   if g.n >= 4 else None,
            "cheeger_lower": float(h) ** 2 / 2 < lam2_norm + 1e-9,
            "cheeger_upper": lam2_norm <= 2 * float(h) + 1e-9,
        },
    }
    _emit(doc, args.out, stdout)


def _cmd_counterexample(args, stdout):
    krange = _parse_range(args.k_range)
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(bisection.counterexample_check, krange))
    else:
        reports = [bisection.counterexample_check(k) for k in krange]
    doc = {"results": [{
        "k": r.k, "mcut": _rat(r.mcut), "mcut_method": r.mcut_method,
        "lcut": _rat(r.lcut), "lambda2": _fmt(r.lambda2), "parity": r.parity,
        "top_row_cut": r.top_row_cut, "strictly_less": r.strictly_less,
    } for r in reports]}
    _emit(doc, args.out, stdout)


_COMMANDS = {
    "gen": _cmd_gen,
    "spectrum": _cmd_spectrum,
    "mcut": _cmd_mcut,
    "lcut": _cmd_lcut,
    "compare": _cmd_compare,
    "charpoly": _cmd_charpoly,
    "sweep": _cmd_sweep,
    "bounds": _cmd_bounds,
    "counterexample": _cmd_counterexample,
}


def _error_doc(exc: Exception) -> str:
    return json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        stderr.write(_error_doc(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        _COMMANDS[args.command](args, stdout)
    except _UsageError as exc:
        stderr.write(_error_doc(exc))
        return EXIT_USAGE
    except SchemaError as exc:
        stderr.write(_error_doc(exc))
        return EXIT_SCHEMA
    except NumericError as exc:
        stderr.write(_error_doc(exc))
        return EXIT_NUMERIC
    except (DomainError, SpecLabError) as exc:
        stderr.write(_error_doc(exc))
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
