"""Command line front end: the ``simulate`` command.

Every config file key has a matching flag, and flags win over the file, so
quick one-off runs do not need a config file at all.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .experiment import (
    ALL_STRATEGIES,
    ConfigError,
    ExperimentSpec,
    InvalidConfigValue,
    _STRATEGY_NAMES,
    cell_basename,
    load_config,
    run_experiment,
)


def _parse_strategies(tokens: list[str]):
    if "all" in tokens:
        return ALL_STRATEGIES
    try:
        return tuple(_STRATEGY_NAMES[t] for t in tokens)
    except KeyError as exc:
        known = ", ".join(sorted(_STRATEGY_NAMES) + ["all"])
        raise InvalidConfigValue(
            f"unknown strategy {exc.args[0]!r}; expected one of {known}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Run recommendation-strategy experiments and write CSV series.")
    parser.add_argument("--config", type=Path, default=None,
                        help="flat key = value config file")
    parser.add_argument("--strategy", action="append", metavar="NAME",
                        help="strategy to run (repeatable), or 'all'")
    parser.add_argument("--threshold", action="append", type=int, metavar="N",
                        help="strong-tie threshold (repeatable)")
    parser.add_argument("--runs", type=int, default=None)
    parser.add_argument("--weeks", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker processes for the runs of a cell")
    parser.add_argument("--out", type=Path, default=None,
                        help="output directory for the CSV files")
    parser.add_argument("--grid-size", type=int, default=None)
    parser.add_argument("--poi-count", type=int, default=None)
    parser.add_argument("--home-count", type=int, default=None)
    parser.add_argument("--step-sigma", type=float, default=None)
    parser.add_argument("--closure-requires-both-strong",
                        choices=("true", "false"), default=None)
    return parser


def spec_from_args(args: argparse.Namespace) -> ExperimentSpec:
    spec = load_config(args.config) if args.config is not None else ExperimentSpec()
    overrides = {}
    if args.strategy:
        overrides["strategies"] = _parse_strategies(args.strategy)
    if args.threshold:
        overrides["thresholds"] = tuple(args.threshold)
    for name in ("runs", "weeks", "seed", "jobs", "out", "grid_size",
                 "poi_count", "home_count", "step_sigma"):
        value = getattr(args, name)
        if value is not None:
            overrides[name] = value
    if args.closure_requires_both_strong is not None:
        overrides["closure_requires_both_strong"] = \
            args.closure_requires_both_strong == "true"
    spec = replace(spec, **overrides)
    spec.validate()
    return spec


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(args)
        result = run_experiment(spec)
    except ConfigError as exc:
        print(f"simulate: {exc}", file=sys.stderr)
        return 1
    for (strategy, threshold) in result.cells:
        base = Path(spec.out) / cell_basename(
            result.cells[(strategy, threshold)].strategy, threshold)
        print(f"wrote {base}.csv and {base}_novisit.csv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
