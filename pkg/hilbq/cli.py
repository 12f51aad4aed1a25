"""Command-line front end: batch verification and table export."""


from __future__ import annotations

from .config import Settings
from .base.surface import PRESETS, SurfaceModel
from .closedforms import b_table, theta
from .components import series_ch
from .verify import SUITES, run_suite
from .utils.load import resolve_models
from .utils.export import dump_reports, dump_series, dump_table

from typing import Any, Callable, List, Optional, Sequence
from contextlib import contextmanager
import argparse
import logging
import sys


__all__ = ["build_parser", "main"]


DEFAULT_MODELS = "minimal,two-class,kpos"


@contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as f:
            yield f


def _models(specs: Optional[Sequence[str]]) -> List[SurfaceModel]:
    models: List[SurfaceModel] = []
    for spec in specs or [DEFAULT_MODELS]:
        models.extend(resolve_models(spec))
    return models


def _surface(spec: str) -> SurfaceModel:
    models = resolve_models(spec)
    if len(models) != 1:
        raise ValueError(f"Expected one surface, got {len(models)}.")
    return models[0]


### Subcommands ###


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    models = _models(args.models)
    reports = run_suite(args.suite, models, args.qmax, settings)
    for r in reports:
        logging.info(f"{r.identity}: {r.status} ({r.cases} cases)")
    with _output(args.out) as f:
        dump_reports(reports, f)
    failed = [r.identity for r in reports if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(reports)} identities failed: "
            f"{', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def cmd_emit(args: argparse.Namespace, settings: Settings) -> int:
    qmax = args.qmax if args.qmax is not None else settings.qmax
    with _output(args.out) as f:
        if args.what == "constants":
            table = b_table(args.imax, args.jmax, collapse=not args.direct)
            dump_table(table, f, args.format)
        elif args.what == "theta":
            model = _surface(args.surface)
            alpha = model.class_named(args.alpha)
            dump_series(theta(model, alpha, args.k, qmax, via=args.via), f,
                args.format)
        else:
            model = _surface(args.surface)
            if not args.chk:
                raise ValueError("emit series needs at least one --chk.")
            Ls = args.L or []
            if len(Ls) != len(args.chk):
                raise ValueError("Give one --L per --chk.")
            s = series_ch(model, Ls, args.chk, not args.full, qmax, settings)
            dump_series(s, f, args.format)
    return 0


### Parser ###


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbq",
        description="Exact Fock-space traces and closed-form q-series "
            "for Hilbert schemes of points on surfaces.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
        help="INFO logging; repeat for DEBUG.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run registered identity suites.")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    verify.add_argument("--qmax", type=int, default=None)
    verify.add_argument("--models", action="append", metavar="PATH|PRESET",
        help=f"Model file or preset ({', '.join(PRESETS)}); comma lists "
            f"and repeats allowed. Default: {DEFAULT_MODELS}.")
    verify.add_argument("--out", default=None, help="Report path (JSON).")
    verify.set_defaults(func=cmd_verify)

    emit = sub.add_parser("emit", help="Write a table or series.")
    emit.add_argument("what", choices=("constants", "series", "theta"))
    emit.add_argument("--imax", type=int, default=7)
    emit.add_argument("--jmax", type=int, default=4)
    emit.add_argument("--direct", action="store_true",
        help="Enumerate slot sums instead of collapsing them.")
    emit.add_argument("--k", type=int, default=0)
    emit.add_argument("--alpha", default="point",
        help="Class label: one, point, K, eX, e<a> or a line bundle.")
    emit.add_argument("--via", choices=("compositions", "genpartitions"),
        default="compositions")
    emit.add_argument("--chk", type=int, action="append")
    emit.add_argument("--L", action="append")
    emit.add_argument("--full", action="store_true",
        help="Keep the Euler factor in ch series.")
    emit.add_argument("--surface", default="minimal")
    emit.add_argument("--qmax", type=int, default=None)
    emit.add_argument("--format", choices=("json", "csv"), default="json")
    emit.add_argument("--out", default=None)
    emit.set_defaults(func=cmd_emit)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
        logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(message)s")
    func: Callable[[Any, Settings], int] = args.func
    try:
        return func(args, Settings.from_env())
    except (ValueError, RuntimeError, OSError) as e:
        print(f"hilbq: error: {e}", file=sys.stderr)
        return 1
