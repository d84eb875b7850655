"""Command line: ``cullen verify run`` and ``cullen series <subcommand>``.

Exit codes: 0 success, 1 failed check or domain error, 2 usage, config or
parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import series as S
from .errors import CullenError, InvalidConfig, ParseError, UnknownSuite
from .verify.config import BACKENDS, FORMATS, SUITES, SuiteConfig, load_config
from .verify.report import emit_report
from .verify.suites import run_suites

REPORT_ENV = "CULLEN_REPORT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cullen", description="Regular quaternionic series tools.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    verify = top.add_parser("verify", help="numerical verification harness")
    vsub = verify.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = vsub.add_parser("run", help="run verification suites")
    run.add_argument("--config", help="JSON config file")
    run.add_argument("--suite", action="append", metavar="NAME",
                     help=f"suite to run (repeatable); one of {', '.join(SUITES)}")
    run.add_argument("--seed", type=int)
    run.add_argument("--order", type=int, help="series truncation order N")
    run.add_argument("--backend", choices=BACKENDS)
    run.add_argument("--report", help=f"output path (overrides ${REPORT_ENV}); default stdout")
    run.add_argument("--format", choices=FORMATS)
    run.add_argument("--jobs", type=int, help="run suites in parallel threads")
    run.add_argument("--timings", action="store_true", default=None,
                     help="include wall times (JSON is then no longer reproducible)")
    run.set_defaults(func=cmd_verify_run)

    ser = top.add_parser("series", help="operations on series files")
    ssub = ser.add_subparsers(dest="action", required=True, parser_class=_Parser)

    star = ssub.add_parser("star", help="regular product f * g")
    star.add_argument("f")
    star.add_argument("g")
    for name, text in (("conj", "regular conjugate"), ("symm", "symmetrization f^c * f"),
                       ("recip", "regular reciprocal")):
        p = ssub.add_parser(name, help=text)
        p.add_argument("f")
    for name in ("star", "conj", "symm", "recip"):
        ssub.choices[name].add_argument("-o", "--output", help="output file; default stdout")
        ssub.choices[name].set_defaults(func=cmd_series)
    ssub.choices["recip"].add_argument("--eps-unit", type=float, default=S.EPS_UNIT,
                                       help="minimum |a_0| (default %(default)g)")

    ev = ssub.add_parser("eval", help="evaluate at a quaternion, printing [t,x,y,z]")
    ev.add_argument("f")
    ev.add_argument("--at", nargs=4, type=float, required=True, metavar=("T", "X", "Y", "Z"))
    ev.add_argument("--closed-with", metavar="G",
                    help="evaluate f * G by the closed formula instead of f")
    ev.set_defaults(func=cmd_series)
    return parser


def _read_series(path: str) -> S.QSeries:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return S.loads(text)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_series(args) -> int:
    f = _read_series(args.f)
    if args.action == "eval":
        q = np.array(args.at)
        if args.closed_with:
            value = S.closed_formula_eval(f, _read_series(args.closed_with), q)
        else:
            value = S.evaluate(f, q)
        print(json.dumps([float(c) for c in value]))
        return 0
    if args.action == "star":
        out = S.star_mul(f, _read_series(args.g))
    elif args.action == "conj":
        out = S.regular_conjugate(f)
    elif args.action == "symm":
        out = S.symmetrization(f).to_qseries()
    else:
        out = S.reciprocal(f, eps_unit=args.eps_unit)
    _write(S.dumps(out) + "\n", args.output)
    return 0


def _run_config(args) -> SuiteConfig:
    cfg = load_config(args.config) if args.config else SuiteConfig()
    overrides = {
        "suites": tuple(args.suite) if args.suite else None,
        "seed": args.seed,
        "order": args.order,
        "backend": args.backend,
        "format": args.format,
        "jobs": args.jobs,
        "timings": args.timings,
    }
    report = args.report or os.environ.get(REPORT_ENV) or None
    if report is not None:
        overrides["report"] = report
    return cfg.with_overrides(**overrides)


def cmd_verify_run(args) -> int:
    cfg = _run_config(args)
    report = run_suites(cfg)
    data = emit_report(report, cfg.format, cfg.timings)
    if cfg.report:
        Path(cfg.report).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if report.overall_pass else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InvalidConfig, UnknownSuite, ParseError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CullenError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
