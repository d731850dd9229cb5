"""Command-line front-end: windows, staircase, shift, matrix, verify."""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from . import emit
from .partitions import Context, Partition, ShapeError, canonicalize, parse_int_tuple
from .shifts import general_shift, k_matrix
from .staircase import resolution_sequence, staircase_diagrams
from .verify import (
    verify_regression,
    verify_euler,
    verify_localization,
    verify_relations,
    verify_tilting,
)
from .windows import enumerate_window


def _add_ctx(parser):
    parser.add_argument("--d", type=int, required=True, help="dimension of V")
    parser.add_argument("--r", type=int, required=True, help="tautological rank")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurwin",
        description="Exact window, staircase, and shift combinatorics on Grassmannians",
    )
    parser.add_argument("--version", action="version", version=f"schurwin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("windows", help="list the W_k generator set")
    _add_ctx(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("staircase", help="staircase diagrams or the exact sequence")
    _add_ctx(p)
    p.add_argument("--delta", required=True, help="base diagram, comma-separated")
    p.add_argument("--sequence", action="store_true", help="emit the exact sequence")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("shift", help="window-shift action on one generator")
    _add_ctx(p)
    p.add_argument("--from", dest="from_k", type=int, required=True)
    p.add_argument("--to", dest="to_k", type=int, required=True)
    p.add_argument("--gen", required=True, help="generator weight, comma-separated")
    p.add_argument("--keep-det", action="store_true", help="retain wedge^d V factors")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    # the shift from W_+1 down to W_0 is the twist action on generators;
    # `twist` is a documented alias for that one step
    p = sub.add_parser("twist", help="twist action on a W_+1 generator (shift from 1 to 0)")
    _add_ctx(p)
    p.add_argument("--gen", required=True, help="generator weight, comma-separated")
    p.add_argument("--keep-det", action="store_true", help="retain wedge^d V factors")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("matrix", help="K-class change-of-basis matrix")
    _add_ctx(p)
    p.add_argument("--from", dest="from_k", type=int, required=True)
    p.add_argument("--to", dest="to_k", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("verify", help="run one verification suite")
    p.add_argument(
        "suite",
        choices=("exactness", "euler", "tilting", "relations", "regression"),
    )
    _add_ctx(p)
    p.add_argument("--delta", default=None, help="restrict to one base diagram")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timings", action="store_true", help="include timing in output")
    return parser


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("SCHURWIN_SEED")
    return int(env) if env else 0


def _emit(text: str):
    sys.stdout.write(text)


def _run_windows(args, ctx) -> int:
    labels = enumerate_window(ctx, args.k)
    if args.format == "json":
        _emit(emit.json_dumps(emit.windows_json_obj(ctx, args.k, labels)))
    elif args.format == "latex":
        _emit(emit.windows_latex(ctx, labels))
    else:
        _emit(emit.windows_text(ctx, labels))
    return 0


def _run_staircase(args, ctx) -> int:
    base = Partition(parse_int_tuple(args.delta))
    if args.sequence:
        terms = resolution_sequence(ctx, base)
        if args.format == "json":
            _emit(emit.json_dumps(emit.sequence_json_obj(ctx, base, terms)))
        elif args.format == "latex":
            _emit(emit.sequence_latex(ctx, terms))
        else:
            _emit(emit.sequence_text(ctx, terms))
    else:
        data = staircase_diagrams(ctx, base)
        if args.format == "json":
            _emit(emit.json_dumps(emit.staircase_json_obj(data)))
        elif args.format == "latex":
            _emit(emit.staircase_latex(data))
        else:
            _emit(emit.staircase_text(data))
    return 0


def _run_shift(args, ctx) -> int:
    weight = parse_int_tuple(args.gen)
    if len(weight) != ctx.r:
        raise ShapeError(f"generator weight needs exactly r={ctx.r} entries")
    g = canonicalize(weight)
    tc = general_shift(ctx, args.from_k, args.to_k, g, keep_det=args.keep_det)
    if args.format == "json":
        _emit(emit.json_dumps(emit.term_complex_json_obj(ctx, tc)))
    elif args.format == "latex":
        _emit(emit.complex_latex(ctx, tc))
    else:
        _emit(emit.format_complex(ctx, tc) + "\n")
    return 0


def _run_matrix(args, ctx) -> int:
    mat = k_matrix(ctx, args.from_k, args.to_k)
    if args.format == "json":
        _emit(emit.json_dumps(emit.matrix_json_obj(mat)))
    elif args.format == "csv":
        _emit(emit.matrix_csv(mat))
    else:
        _emit(emit.matrix_text(mat))
    return 0


def _report_text(report, include_timing: bool) -> str:
    lines = [f"check: {report.check}"]
    params = " ".join(f"{k}={v}" for k, v in sorted(report.parameters.items()))
    lines.append(f"parameters: {params}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    if report.note:
        lines.append(f"note: {report.note}")
    if report.counterexample is not None:
        lines.append(f"counterexample: {report.counterexample}")
    if include_timing:
        lines.append(f"time: {report.timing:.3f}s")
    return "\n".join(lines) + "\n"


def _run_verify(args, ctx) -> int:
    seed = _resolve_seed(args)
    delta = parse_int_tuple(args.delta) if args.delta is not None else None
    if args.suite == "exactness":
        report = verify_localization(ctx, delta=delta, samples=args.samples, seed=seed)
    elif args.suite == "euler":
        report = verify_euler(ctx, delta=delta)
    elif args.suite == "tilting":
        report = verify_tilting(ctx)
    elif args.suite == "relations":
        report = verify_relations(ctx)
    else:
        report = verify_regression(ctx)
    if args.format == "json":
        _emit(emit.json_dumps(report.to_json_obj(include_timing=args.timings)))
    else:
        _emit(_report_text(report, args.timings))
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help/--version
        return int(exc.code or 0)
    try:
        ctx = Context(args.d, args.r)
        if args.command == "windows":
            return _run_windows(args, ctx)
        if args.command == "staircase":
            return _run_staircase(args, ctx)
        if args.command == "twist":
            args.from_k, args.to_k = 1, 0
            return _run_shift(args, ctx)
        if args.command == "shift":
            return _run_shift(args, ctx)
        if args.command == "matrix":
            return _run_matrix(args, ctx)
        return _run_verify(args, ctx)
    except (ShapeError, ValueError) as exc:
        sys.stderr.write(f"schurwin: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
