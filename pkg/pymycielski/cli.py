from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from pymycielski import consts
from pymycielski.closed_forms import published_quantity
from pymycielski.graph import (
    FamilyInstance,
    Graph,
    graph_power,
    make_family,
    parse_edgelist,
    write_edgelist,
    write_json,
)
from pymycielski.harness import (
    HarnessConfig,
    errata_report,
    instances_for,
    records_to_csv,
    records_to_json,
    sweep,
    sweep_to_csv,
    verify_instances,
)
from pymycielski.logger import set_log_level
from pymycielski.stats import parse_colouring, summarize, summarize_colouring
from pymycielski.types import Family, Mode, Quantity
from pymycielski.utils import (
    InfeasibleError,
    OracleLimitError,
    PyMycielskiError,
    SolverLimitError,
    UsageError,
    format_rational,
    parse_n_range,
    render_decimal,
)

logger = logging.getLogger(__name__)

_FAMILY_NAMES = [f.value for f in Family] + ["friendship"]
_MODES = {"chi": Mode.CHI, "chi-plus": Mode.CHI_PLUS}
_LIMIT_ERRORS = (InfeasibleError, OracleLimitError, SolverLimitError)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _family(name: str) -> Family:
    try:
        return Family.parse(name)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid family {name!r} (choose from {', '.join(_FAMILY_NAMES)})"
        )


def _add_family_flags(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument(
        "--family",
        type=_family,
        required=required,
        metavar="{" + "|".join(_FAMILY_NAMES) + "}",
    )
    parser.add_argument("--n", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)


def _add_mode_flag(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--mode", choices=list(_MODES), required=required)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="pymycielski",
        description="Colouring statistics of Mycielski graphs.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress")
    parser.add_argument("--debug", action="store_true", help="log solver details")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a family graph")
    _add_family_flags(gen)
    gen.add_argument("--mycielskian", action="store_true")
    gen.add_argument("--power", type=int)
    gen.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    gen.add_argument("--out", type=Path)

    color = sub.add_parser("color", help="extremal colouring summary as JSON")
    color.add_argument("--in", dest="input", type=Path)
    _add_family_flags(color, required=False)
    color.add_argument("--mycielskian", action="store_true")
    _add_mode_flag(color)
    color.add_argument("--k", type=int)
    color.add_argument("--out", type=Path)

    stats = sub.add_parser("stats", help="statistics of a given colouring")
    stats.add_argument("--in", dest="input", type=Path, required=True)
    stats.add_argument("--coloring", type=Path, required=True)

    formula = sub.add_parser("formula", help="evaluate a published closed form")
    _add_family_flags(formula)
    _add_mode_flag(formula)
    formula.add_argument(
        "--quantity", choices=[q.value for q in Quantity], required=True
    )

    verify = sub.add_parser("verify", help="adjudicate published values")
    _add_family_flags(verify)
    verify.add_argument("--n-range")
    verify.add_argument("--report", choices=["json", "csv"], default="json")
    verify.add_argument("--out", type=Path)
    verify.add_argument("--jobs", type=int, default=1)

    sweep_ = sub.add_parser("sweep", help="published values over a size range (CSV)")
    _add_family_flags(sweep_)
    sweep_.add_argument("--n-range", required=True)
    _add_mode_flag(sweep_)
    sweep_.add_argument("--out", type=Path)
    sweep_.add_argument("--jobs", type=int, default=1)

    errata = sub.add_parser("errata", help="report over the default instances")
    errata.add_argument("--format", choices=["json", "text"], default="text")
    errata.add_argument("--out", type=Path)
    errata.add_argument("--jobs", type=int, default=1)
    return parser


def _instance(args: argparse.Namespace, mycielskian: bool = False) -> FamilyInstance:
    if args.family is Family.COMPLETE_BIPARTITE:
        if args.a is None or args.b is None:
            raise UsageError("complete_bipartite requires --a and --b")
        n = args.a + args.b if args.n is None else args.n
        return FamilyInstance(args.family, n, args.a, args.b, mycielskian)
    if args.n is None:
        raise UsageError(f"{args.family.value} requires --n")
    return FamilyInstance(args.family, args.n, mycielskian=mycielskian)


def _instances(args: argparse.Namespace) -> list[FamilyInstance]:
    if args.n_range is not None:
        if args.n is not None:
            raise UsageError("--n and --n-range are mutually exclusive")
        return instances_for(args.family, parse_n_range(args.n_range))
    if args.family is Family.COMPLETE_BIPARTITE and args.a is None:
        if args.n is None:
            raise UsageError("complete_bipartite requires --a and --b, or --n")
        return instances_for(args.family, [args.n])
    return [_instance(args, mycielskian=True)]


def _jobs(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    return args.jobs


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {out}: {e.strerror}")
    logger.info(f"Wrote {out}")


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    except UnicodeDecodeError as e:
        raise UsageError(f"cannot read {path}: not UTF-8 text at byte {e.start}")


def _gen(args: argparse.Namespace) -> None:
    g = make_family(_instance(args, args.mycielskian))
    if args.power is not None:
        g = graph_power(g, args.power)
    _emit(write_edgelist(g) if args.format == "edgelist" else write_json(g), args.out)


def _color(args: argparse.Namespace) -> None:
    instance: FamilyInstance | None = None
    if args.input is not None:
        if args.family is not None:
            raise UsageError("--in and --family are mutually exclusive")
        g: Graph = parse_edgelist(_read(args.input))
    elif args.family is not None:
        instance = _instance(args, args.mycielskian)
        g = make_family(instance)
    else:
        raise UsageError("one of --in or --family is required")
    summary = summarize(g, _MODES[args.mode], args.k)
    _emit(json.dumps(summary.to_dict(instance), indent=2) + "\n", args.out)


def _stats(args: argparse.Namespace) -> None:
    g = parse_edgelist(_read(args.input))
    colouring = parse_colouring(_read(args.coloring), g.n)
    sys.stdout.write(json.dumps(summarize_colouring(g, colouring), indent=2) + "\n")


def _formula(args: argparse.Namespace) -> None:
    quantity = Quantity(args.quantity)
    published = published_quantity(_instance(args), _MODES[args.mode], quantity)
    value = published.value
    if quantity is Quantity.DISTRIBUTION:
        assert isinstance(value, tuple)
        sys.stdout.write(" ".join(str(t) for t in value) + "\n")
    else:
        assert not isinstance(value, tuple)
        rendered = render_decimal(value, consts.DECIMAL_DIGITS)
        sys.stdout.write(f"{format_rational(value)} ({rendered})\n")
    if published.note:
        logger.info(f"Note: {published.note}")


def _verify(args: argparse.Namespace) -> None:
    config = HarnessConfig(jobs=_jobs(args))
    records = verify_instances(_instances(args), config)
    if args.report == "csv":
        _emit(records_to_csv(records), args.out)
    else:
        _emit(records_to_json(records), args.out)


def _sweep(args: argparse.Namespace) -> None:
    config = HarnessConfig(jobs=_jobs(args))
    rows = sweep(args.family, parse_n_range(args.n_range), _MODES[args.mode], config)
    _emit(sweep_to_csv(rows), args.out)


def _errata(args: argparse.Namespace) -> None:
    report = errata_report(config=HarnessConfig(jobs=_jobs(args)))
    text = report.to_json() if args.format == "json" else report.summary_text()
    _emit(text, args.out)


_COMMANDS = {
    "gen": _gen,
    "color": _color,
    "stats": _stats,
    "formula": _formula,
    "verify": _verify,
    "sweep": _sweep,
    "errata": _errata,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command line.

    Returns:
        int: 0 on success, 1 on usage or input errors, 2 when a colouring is
            infeasible or a solver limit is hit.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    if args.debug:
        set_log_level(logging.DEBUG)
    elif args.verbose:
        set_log_level(logging.INFO)
    else:
        set_log_level(logging.WARNING)

    try:
        _COMMANDS[args.command](args)
    except _LIMIT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PyMycielskiError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
