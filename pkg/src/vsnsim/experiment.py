"""Batch experiments: config files, seed derivation, aggregation, CSV output.

A config file is a flat ``key = value`` text document, e.g.::

    # compare both thresholds at reduced scale
    strategy = all
    threshold = [5, 2]
    runs = 10
    seed = 7

Every key has a default, so an empty file (or no file at all) describes the
standard full-scale experiment.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product
from pathlib import Path

import numpy as np

from .engine import SimConfig, run
from .metrics import RunSeries
from .strategy import StrategyKind

ALL_STRATEGIES = tuple(StrategyKind)


class ConfigError(Exception):
    """Base class for experiment configuration problems."""


class MissingConfigFile(ConfigError):
    pass


class UnknownConfigKey(ConfigError):
    pass


class InvalidConfigValue(ConfigError):
    pass


@dataclass(frozen=True)
class ExperimentSpec:
    """One batch: the cartesian product of strategies and thresholds."""

    strategies: tuple[StrategyKind, ...] = ALL_STRATEGIES
    thresholds: tuple[int, ...] = (5,)
    grid_size: int = 75
    poi_count: int = 15
    home_count: int = 500
    weeks: int = 20
    runs: int = 100
    step_sigma: float = 0.05
    seed: int = 0
    closure_requires_both_strong: bool = False
    jobs: int = 1
    out: Path = Path("results")

    def cell_config(self, strategy: StrategyKind, threshold: int) -> SimConfig:
        return SimConfig(
            grid_size=self.grid_size,
            poi_count=self.poi_count,
            home_count=self.home_count,
            strong_tie_threshold=threshold,
            strategy=strategy,
            weeks=self.weeks,
            runs=self.runs,
            step_sigma=self.step_sigma,
            seed=self.seed,
            closure_requires_both_strong=self.closure_requires_both_strong,
        )

    def cells(self) -> list[tuple[StrategyKind, int]]:
        return list(product(self.strategies, self.thresholds))

    def validate(self) -> None:
        if not self.strategies:
            raise InvalidConfigValue("at least one strategy is required")
        if not self.thresholds:
            raise InvalidConfigValue("at least one threshold is required")
        if self.jobs < 1:
            raise InvalidConfigValue(f"jobs must be at least 1, got {self.jobs}")
        try:
            self.cell_config(self.strategies[0], self.thresholds[0]).validate()
        except ValueError as exc:
            raise InvalidConfigValue(str(exc)) from None


def run_seed(master_seed: int, run_index: int) -> np.random.SeedSequence:
    """Seed for one run, derived from the experiment seed and the run's index.

    Runs are independent streams no matter in which order (or process) they
    execute, and the same run index always replays the same stream.  All
    cells share the per-index seeds, so strategies face identical worlds.
    """
    return np.random.SeedSequence(master_seed, spawn_key=(run_index,))


_INT_KEYS = {"grid_size", "poi_count", "home_count", "weeks", "runs",
             "seed", "jobs"}
_STRATEGY_NAMES = {s.value: s for s in StrategyKind}


def _parse_value(key: str, raw: str):
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise InvalidConfigValue(f"{key} expects an integer, got {raw!r}") from None
    if key == "step_sigma":
        try:
            return float(raw)
        except ValueError:
            raise InvalidConfigValue(f"step_sigma expects a number, got {raw!r}") from None
    if key == "closure_requires_both_strong":
        lowered = raw.lower()
        if lowered in ("true", "false"):
            return lowered == "true"
        raise InvalidConfigValue(f"{key} expects true or false, got {raw!r}")
    if key == "out":
        return Path(raw)
    if key == "threshold":
        items = raw.strip("[]").split(",") if raw.startswith("[") else [raw]
        try:
            values = tuple(int(item) for item in items)
        except ValueError:
            raise InvalidConfigValue(
                f"threshold expects an integer or a [list], got {raw!r}") from None
        return values
    if key == "strategy":
        if raw == "all":
            return ALL_STRATEGIES
        items = raw.strip("[]").split(",") if raw.startswith("[") else [raw]
        try:
            return tuple(_STRATEGY_NAMES[item.strip()] for item in items)
        except KeyError as exc:
            known = ", ".join(sorted(_STRATEGY_NAMES) + ["all"])
            raise InvalidConfigValue(
                f"unknown strategy {exc.args[0]!r}; expected one of {known}") from None
    raise UnknownConfigKey(f"unknown config key {key!r}")


_KEY_TO_FIELD = {"threshold": "thresholds", "strategy": "strategies"}


def parse_config(text: str) -> ExperimentSpec:
    """Parse flat ``key = value`` lines; blank lines and ``#`` comments allowed."""
    overrides = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise InvalidConfigValue(f"line {lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        overrides[_KEY_TO_FIELD.get(key, key)] = _parse_value(key, raw)
    spec = replace(ExperimentSpec(), **overrides)
    spec.validate()
    return spec


def load_config(path: str | Path) -> ExperimentSpec:
    path = Path(path)
    if not path.is_file():
        raise MissingConfigFile(f"config file not found: {path}")
    return parse_config(path.read_text())


@dataclass
class CellAggregate:
    """Across-run means for one (strategy, threshold) cell."""

    strategy: StrategyKind
    threshold: int
    quality: np.ndarray
    connectivity: np.ndarray
    sdu: np.ndarray
    no_visit_mean: np.ndarray
    no_visit_first_run: list[int]
    runs: list[RunSeries]


@dataclass
class AggregateSeries:
    cells: dict[tuple[str, int], CellAggregate] = field(default_factory=dict)


def _run_cell_index(args) -> RunSeries:
    config, master_seed, run_index = args
    return run(config, run_seed(master_seed, run_index))


def run_cell(config: SimConfig, master_seed: int, runs: int,
             jobs: int = 1) -> list[RunSeries]:
    """All runs of one cell, ordered by run index regardless of ``jobs``."""
    args = [(config, master_seed, i) for i in range(runs)]
    if jobs <= 1:
        return [_run_cell_index(a) for a in args]
    workers = min(jobs, runs, os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_cell_index, args))


def aggregate_cell(strategy: StrategyKind, threshold: int,
                   series: list[RunSeries]) -> CellAggregate:
    return CellAggregate(
        strategy=strategy,
        threshold=threshold,
        quality=np.mean([s.quality for s in series], axis=0),
        connectivity=np.mean([s.connectivity for s in series], axis=0),
        sdu=np.mean([s.sdu for s in series], axis=0),
        no_visit_mean=np.mean([s.weekly_no_visit for s in series], axis=0),
        no_visit_first_run=list(series[0].weekly_no_visit),
        runs=series,
    )


def cell_basename(strategy: StrategyKind, threshold: int) -> str:
    return f"{strategy.value}_th{threshold}"


def write_cell_csv(out_dir: Path, cell: CellAggregate) -> tuple[Path, Path]:
    base = cell_basename(cell.strategy, cell.threshold)
    series_path = out_dir / f"{base}.csv"
    with open(series_path, "w", newline="\n") as fh:
        fh.write("tick,quality_index,connectivity_index,sdu\n")
        for t in range(len(cell.quality)):
            fh.write(f"{t},{cell.quality[t]:.6f},{cell.connectivity[t]:.6f},"
                     f"{cell.sdu[t]:.6f}\n")
    novisit_path = out_dir / f"{base}_novisit.csv"
    with open(novisit_path, "w", newline="\n") as fh:
        fh.write("week,no_visit_count\n")
        for week, count in enumerate(cell.no_visit_first_run, start=1):
            fh.write(f"{week},{count}\n")
    return series_path, novisit_path


def run_experiment(spec: ExperimentSpec) -> AggregateSeries:
    """Run every cell, write its two CSV files, and return the aggregates.

    Identical specs produce byte-identical CSV output.
    """
    spec.validate()
    out_dir = Path(spec.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    result = AggregateSeries()
    for strategy, threshold in spec.cells():
        config = spec.cell_config(strategy, threshold)
        series = run_cell(config, spec.seed, spec.runs, spec.jobs)
        cell = aggregate_cell(strategy, threshold, series)
        write_cell_csv(out_dir, cell)
        result.cells[(strategy.value, threshold)] = cell
    return result
