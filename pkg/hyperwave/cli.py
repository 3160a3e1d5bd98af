#!/usr/bin/env python3
"""
Command-line front end for hyperwave.

Subcommands:
    eval    evaluate one function at points or on a grid
    table   evaluate a family of functions (several m or k) into a table
    verify  run the relation catalog and report pass/fail per relation

Data rows go to stdout or to files; diagnostics go to stderr.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .config import Config, EvalOptions
from .exceptions import ConfigurationError, DomainError, HyperwaveError
from .specs import (
    DiscreteSpec,
    NewClassSpec,
    PrincipalSpec,
    SeriesSpec,
    SupplementarySpec,
    parse_rational,
)
from .tables import (
    EvalRequest,
    evaluate_rows,
    linspace_values,
    metadata_for,
    split_path,
    write_rows,
    write_table,
)
from .verify import SUITES, VerificationSuite

SERIES_CHOICES = ["dplus", "dminus", "newclass", "principal", "supplementary"]
TOLERANCE_FLAGS = ["eigen", "ladder", "route", "recurrence", "quad"]
# series whose members are indexed by k
K_INDEXED_SERIES = ("dplus", "dminus", "newclass")

logger = logging.getLogger(__name__)


def _require(value: Any, flag: str, series: str) -> Any:
    if value is None:
        raise DomainError(f"{flag} is required for --series {series}")
    return value


def weight_from_args(args: argparse.Namespace) -> Optional[Fraction]:
    """m from --m, or from --m-half N as N/2."""
    if args.m is not None and args.m_half is not None:
        raise DomainError("give either --m or --m-half, not both")
    if args.m_half is not None:
        if args.m_half % 2 == 0:
            raise DomainError(f"--m-half takes an odd N for m = N/2, got {args.m_half}")
        return Fraction(args.m_half, 2)
    return None if args.m is None else parse_rational(args.m)


def spec_from_args(args: argparse.Namespace, k: Any = None, m: Any = None) -> SeriesSpec:
    """
    Build the series spec named by the command-line flags.

    Args:
        args: Parsed arguments carrying the series flags.
        k: Overrides --k (used by `table --k-values`).
        m: Overrides --m (used by `table --m-values`).
    """
    series = args.series
    k = args.k if k is None else k
    m = weight_from_args(args) if m is None else parse_rational(m)

    if series in ("dplus", "dminus"):
        return DiscreteSpec(
            _require(k, "--k", series),
            _require(m, "--m", series),
            "D+" if series == "dplus" else "D-",
        )
    if series == "newclass":
        return NewClassSpec(
            _require(k, "--k", series),
            0.0 if args.alpha is None else args.alpha,
            1.0 if args.beta is None else args.beta,
            -1 if args.sign == "-" else 1,
        )
    if series == "principal":
        if args.seq is not None:
            sequence = f"seq{args.seq}"
        elif args.parity is not None:
            sequence = f"{args.parity}-raw"
        else:
            sequence = "seq1"
        return PrincipalSpec(
            _require(args.lam, "--lambda", series), _require(m, "--m", series), sequence
        )
    if series == "supplementary":
        return SupplementarySpec(
            _require(args.gamma, "--gamma", series),
            _require(m, "--m", series),
            args.parity or "even",
        )
    raise DomainError(f"Unknown series {series!r}; choose from {', '.join(SERIES_CHOICES)}")


def _grid(values: Optional[List[float]], grid: Optional[List[str]], flag: str) -> List[float]:
    if values and grid:
        raise DomainError(f"give either --{flag} or --{flag}-range, not both")
    if grid:
        start, stop, count = grid
        try:
            return linspace_values(float(start), float(stop), int(count))
        except ValueError as e:
            raise DomainError(f"--{flag}-range expects A B N, got {' '.join(grid)}") from e
    return list(values or [])


def request_from_args(args: argparse.Namespace, spec: SeriesSpec) -> EvalRequest:
    taus = _grid(args.tau, args.tau_range, "tau")
    if not taus:
        raise DomainError("at least one --tau or a --tau-range is required")
    phis = _grid(args.phi, args.phi_range, "phi") or [0.0]
    return EvalRequest(spec, tuple(taus), tuple(phis), args.format)


def cmd_eval(args: argparse.Namespace, opts: EvalOptions) -> int:
    """Evaluate one function on the requested points and write the rows to stdout."""
    spec = spec_from_args(args)
    request = request_from_args(args, spec)
    rows = evaluate_rows(spec, request.points(), opts, args.workers)
    write_rows(
        rows, metadata_for(spec, opts), sys.stdout, request.fmt, with_version=args.with_version
    )
    return 0


def _family(args: argparse.Namespace) -> List[SeriesSpec]:
    if args.m_values and args.k_values:
        raise DomainError("give either --m-values or --k-values, not both")
    if args.k_values and args.series not in K_INDEXED_SERIES:
        raise DomainError(
            f"--k-values applies only to {', '.join(K_INDEXED_SERIES)}; "
            f"use --m-values for {args.series}"
        )
    if args.m_values:
        return [spec_from_args(args, m=m) for m in args.m_values]
    if args.k_values:
        return [spec_from_args(args, k=k) for k in args.k_values]
    raise DomainError("table needs --m-values or --k-values")


def _index(spec: SeriesSpec, by_k: bool) -> str:
    return str(spec.k) if by_k else str(spec.m)


def cmd_table(args: argparse.Namespace, opts: EvalOptions) -> int:
    """Evaluate a family of functions into one long-format table or one file per function."""
    specs = _family(args)
    by_k = bool(args.k_values)
    request = request_from_args(args, specs[0])
    points = request.points()

    if args.split:
        if not args.output:
            raise DomainError("--split requires --output")
        for spec in specs:
            rows = evaluate_rows(spec, points, opts, args.workers)
            path = split_path(args.output, _index(spec, by_k))
            write_table(
                rows, metadata_for(spec, opts), path, request.fmt, with_version=args.with_version
            )
            print(f"Wrote {len(rows)} rows to {path}", file=sys.stderr)
        return 0

    rows: List[Dict[str, Any]] = []
    for spec in specs:
        index = _index(spec, by_k)
        family_rows = evaluate_rows(spec, points, opts, args.workers)
        rows.extend({"index": index, **row} for row in family_rows)
    metadata = {
        "specs": {_index(s, by_k): s.to_dict() for s in specs},
        "options": opts.to_dict(),
    }
    if args.output:
        write_table(rows, metadata, args.output, request.fmt, ("index",), args.with_version)
        print(f"Wrote {len(rows)} rows to {args.output}", file=sys.stderr)
    else:
        write_rows(rows, metadata, sys.stdout, request.fmt, ("index",), args.with_version)
    return 0


def tolerance_overrides(args: argparse.Namespace) -> Dict[str, float]:
    """--tol-* flags that were given."""
    out = {}
    for name in TOLERANCE_FLAGS:
        value = getattr(args, f"tol_{name}")
        if value is not None:
            out[name] = value
    return out


def cmd_verify(args: argparse.Namespace, opts: EvalOptions, config: Config) -> int:
    """Run a verification suite; exit code 1 if any relation fails."""
    if args.suite != "all" and args.suite not in SUITES:
        raise ConfigurationError(
            f"Unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}"
        )
    overrides = tolerance_overrides(args)
    if args.save_tolerances and overrides:
        config.save_tolerances(overrides)
        print(f"Tolerance overrides saved to {config.config_path}", file=sys.stderr)
    tolerances = {**(config.get_tolerances() or {}), **overrides}

    suite = VerificationSuite(opts, tolerances, samples=args.samples, seed=args.seed)
    result = suite.run(args.suite)
    print(result.summary())
    if args.json:
        try:
            with open(args.json, "w", encoding="utf-8") as f:
                json.dump(result.to_dict(), f, indent=2, sort_keys=True)
                f.write("\n")
        except OSError as e:
            raise OSError(f"Cannot write report to {args.json}: {e.strerror or e}") from e
    return result.exit_code


def _add_series_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--series", required=True, choices=SERIES_CHOICES, help="Representation series"
    )
    parser.add_argument("--k", help="Weight k as an integer or rational, e.g. 1/2")
    parser.add_argument("--m", help="Weight m as an integer or rational, e.g. -3/2")
    parser.add_argument("--m-half", type=int, help="Half-integer weight m = N/2 given as N")
    parser.add_argument("--lambda", dest="lam", type=float, help="Principal-series lambda > 0")
    parser.add_argument("--gamma", type=float, help="Supplementary-series gamma in (0, 1/2)")
    parser.add_argument("--seq", type=int, choices=[1, 2], help="Principal ladder sequence")
    parser.add_argument(
        "--parity", choices=["even", "odd"], help="Raw principal family or supplementary parity"
    )
    parser.add_argument("--alpha", type=float, help="New-class constant term (default: 0)")
    parser.add_argument("--beta", type=float, help="New-class arcsin coefficient (default: 1)")
    parser.add_argument(
        "--sign", choices=["+", "-"], default="+", help="New-class weight sign, m = +-k"
    )


def _add_grid_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tau", type=float, action="append", help="tau value (repeatable)")
    parser.add_argument(
        "--phi", type=float, action="append", help="phi value (repeatable, default: 0)"
    )
    parser.add_argument(
        "--tau-range", nargs=3, metavar=("A", "B", "N"), help="N tau values from A to B"
    )
    parser.add_argument(
        "--phi-range", nargs=3, metavar=("A", "B", "N"), help="N phi values from A to B"
    )
    parser.add_argument(
        "--format", choices=["csv", "json"], default="csv", help="Output format (default: csv)"
    )
    parser.add_argument(
        "--workers", type=int, default=1, help="Threads for grid evaluation (default: 1)"
    )
    parser.add_argument(
        "--with-version", action="store_true", help="Add a hyperwave version header"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwave",
        description="Pseudospherical functions on the one-sheet hyperboloid",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Lowest D+ weight at the waist of the hyperboloid
  %(prog)s eval --series dplus --k 0 --m 1 --tau 0 --phi 0

  # Half-integer principal-series function m = 1/2 on a grid, as JSON
  %(prog)s eval --series principal --seq 1 --lambda 1 --m-half 1 \\
      --tau-range -3 3 121 --format json

  # D+ k=0, m = 1..4 in one long-format CSV
  %(prog)s table --series dplus --k 0 --m-values 1 2 3 4 \\
      --tau-range -3 3 121 --output dplus.csv

  # Run the numerics relations, loosening nothing
  %(prog)s verify --suite numerics

  # Run the discrete relations with a looser eigenvalue tolerance and keep a JSON report
  %(prog)s verify --suite discrete --tol-eigen 1e-3 --json report.json
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--config", help="Path to config file (default: ~/.config/hyperwave/defaults.json)"
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument(
        "--max-terms", type=int, help="Cap on 2F1 series terms (env: HYPERWAVE_MAX_TERMS)"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    eval_parser = subparsers.add_parser("eval", help="Evaluate one function")
    _add_series_arguments(eval_parser)
    _add_grid_arguments(eval_parser)

    table_parser = subparsers.add_parser(
        "table", help="Evaluate a family of functions into a table"
    )
    _add_series_arguments(table_parser)
    _add_grid_arguments(table_parser)
    table_parser.add_argument("--m-values", nargs="+", help="Weights m of the family")
    table_parser.add_argument("--k-values", nargs="+", help="Weights k of the family")
    table_parser.add_argument("--output", help="Output path (default: stdout)")
    table_parser.add_argument(
        "--split", action="store_true", help="One file per function, suffix _<index>"
    )

    verify_parser = subparsers.add_parser("verify", help="Run the relation catalog")
    verify_parser.add_argument(
        "--suite", default="all", help=f"Suite to run: all, {', '.join(SUITES)} (default: all)"
    )
    for name in TOLERANCE_FLAGS:
        verify_parser.add_argument(
            f"--tol-{name}", type=float, help=f"Override the {name} tolerance"
        )
    verify_parser.add_argument("--samples", type=int, help="Sample points per sampling relation")
    verify_parser.add_argument("--seed", type=int, help="Seed for the sample generator")
    verify_parser.add_argument("--json", help="Write the JSON report to this path")
    verify_parser.add_argument(
        "--save-tolerances",
        action="store_true",
        help="Persist the --tol-* overrides to the config file",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point: parse arguments, dispatch the subcommand, map errors to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)

    log_level = logging.DEBUG if args.debug else logging.WARNING
    logging.basicConfig(level=log_level)

    if not args.command:
        parser.print_help()
        return 2

    try:
        config = Config(args.config)
        opts = config.eval_options(max_terms=args.max_terms)

        if args.command == "eval":
            return cmd_eval(args, opts)
        if args.command == "table":
            return cmd_table(args, opts)
        return cmd_verify(args, opts, config)

    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return 130
    except ConfigurationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    except (HyperwaveError, OSError, ValueError, ArithmeticError) as e:
        print(f"Error: {e}", file=sys.stderr)
        if args.debug:
            logger.exception("command %s failed", args.command)
        return 1


def cli_main() -> None:
    """Entry point for the CLI command."""
    sys.exit(main())


if __name__ == "__main__":
    cli_main()
