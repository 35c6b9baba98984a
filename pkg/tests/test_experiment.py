from __future__ import annotations

import numpy as np
import pytest

from vsnsim.cli import main
from vsnsim.engine import run
from vsnsim.experiment import (
    ALL_STRATEGIES,
    ExperimentSpec,
    InvalidConfigValue,
    MissingConfigFile,
    UnknownConfigKey,
    aggregate_cell,
    load_config,
    parse_config,
    run_cell,
    run_experiment,
    run_seed,
)
from vsnsim.strategy import StrategyKind

TINY = dict(grid_size=10, poi_count=3, home_count=5, weeks=1, runs=2, seed=9,
            strategies=(StrategyKind.BLACKLIST,), thresholds=(2,))


def tiny_spec(**overrides) -> ExperimentSpec:
    merged = {**TINY, **overrides}
    return ExperimentSpec(**merged)


class TestParseConfig:
    def test_empty_text_gives_defaults(self):
        spec = parse_config("")
        assert spec == ExperimentSpec()
        assert spec.grid_size == 75
        assert spec.poi_count == 15
        assert spec.home_count == 500
        assert spec.thresholds == (5,)
        assert spec.weeks == 20
        assert spec.runs == 100

    def test_comments_and_blank_lines_ignored(self):
        spec = parse_config("\n# a comment\n\nruns = 7  # trailing\n")
        assert spec.runs == 7

    def test_scalar_threshold_and_strategy(self):
        spec = parse_config("threshold = 2\nstrategy = blacklist\n")
        assert spec.thresholds == (2,)
        assert spec.strategies == (StrategyKind.BLACKLIST,)

    def test_list_threshold_and_all_strategies(self):
        spec = parse_config("threshold = [5, 2]\nstrategy = all\n")
        assert spec.thresholds == (5, 2)
        assert spec.strategies == ALL_STRATEGIES
        assert len(spec.cells()) == 8

    def test_strategy_list(self):
        spec = parse_config("strategy = [replace, replace_closure]\n")
        assert spec.strategies == (StrategyKind.REPLACE,
                                   StrategyKind.REPLACE_WITH_CLOSURE)

    def test_unknown_key_rejected(self):
        with pytest.raises(UnknownConfigKey):
            parse_config("grid = 75\n")

    def test_bad_integer_rejected(self):
        with pytest.raises(InvalidConfigValue):
            parse_config("runs = soon\n")

    def test_unknown_strategy_rejected(self):
        with pytest.raises(InvalidConfigValue):
            parse_config("strategy = greedy\n")

    def test_zero_runs_rejected(self):
        with pytest.raises(InvalidConfigValue):
            parse_config("runs = 0\n")

    def test_zero_weeks_rejected(self):
        with pytest.raises(InvalidConfigValue):
            parse_config("weeks = 0\n")

    def test_missing_equals_rejected(self):
        with pytest.raises(InvalidConfigValue):
            parse_config("runs\n")

    def test_boolean_switch(self):
        spec = parse_config("closure_requires_both_strong = true\n")
        assert spec.closure_requires_both_strong is True

    def test_remaining_scalar_keys(self):
        text = ("grid_size = 20\npoi_count = 4\nhome_count = 9\nweeks = 2\n"
                "step_sigma = 0.1\nseed = 3\njobs = 2\nout = elsewhere\n")
        spec = parse_config(text)
        assert (spec.grid_size, spec.poi_count, spec.home_count) == (20, 4, 9)
        assert spec.weeks == 2 and spec.step_sigma == 0.1 and spec.seed == 3
        assert spec.jobs == 2 and str(spec.out) == "elsewhere"


class TestLoadConfig:
    def test_missing_file(self, tmp_path):
        with pytest.raises(MissingConfigFile):
            load_config(tmp_path / "nope.cfg")

    def test_round_trip(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("runs = 3\nthreshold = [2]\n")
        spec = load_config(path)
        assert spec.runs == 3
        assert spec.thresholds == (2,)


class TestRunCell:
    def test_ordered_by_run_index(self):
        spec = tiny_spec()
        config = spec.cell_config(StrategyKind.BLACKLIST, 2)
        series = run_cell(config, spec.seed, spec.runs)
        direct = [run(config, run_seed(spec.seed, i)) for i in range(spec.runs)]
        for got, want in zip(series, direct):
            assert got.quality.tolist() == want.quality.tolist()
            assert got.weekly_no_visit == want.weekly_no_visit

    def test_parallel_jobs_match_serial(self):
        spec = tiny_spec()
        config = spec.cell_config(StrategyKind.BLACKLIST, 2)
        serial = run_cell(config, spec.seed, spec.runs, jobs=1)
        parallel = run_cell(config, spec.seed, spec.runs, jobs=2)
        for a, b in zip(serial, parallel):
            assert a.quality.tolist() == b.quality.tolist()
            assert a.connectivity.tolist() == b.connectivity.tolist()
            assert a.sdu.tolist() == b.sdu.tolist()
            assert a.weekly_no_visit == b.weekly_no_visit


class TestAggregation:
    def test_mean_of_two_runs(self):
        spec = tiny_spec()
        config = spec.cell_config(StrategyKind.BLACKLIST, 2)
        series = run_cell(config, spec.seed, 2)
        cell = aggregate_cell(StrategyKind.BLACKLIST, 2, series)
        manual_q = (series[0].quality + series[1].quality) / 2
        manual_c = (series[0].connectivity + series[1].connectivity) / 2
        assert np.allclose(cell.quality, manual_q, atol=1e-15)
        assert np.allclose(cell.connectivity, manual_c, atol=1e-15)
        assert cell.no_visit_first_run == series[0].weekly_no_visit
        manual_nv = [(a + b) / 2 for a, b in
                     zip(series[0].weekly_no_visit, series[1].weekly_no_visit)]
        assert cell.no_visit_mean.tolist() == manual_nv


class TestRunExperiment:
    def test_writes_expected_files(self, tmp_path):
        spec = tiny_spec(out=tmp_path / "res")
        result = run_experiment(spec)
        base = tmp_path / "res" / "blacklist_th2"
        series_csv = base.with_suffix(".csv")
        novisit_csv = tmp_path / "res" / "blacklist_th2_novisit.csv"
        assert series_csv.is_file() and novisit_csv.is_file()

        lines = series_csv.read_text().splitlines()
        assert lines[0] == "tick,quality_index,connectivity_index,sdu"
        assert len(lines) == 1 + 168  # one week
        first = lines[1].split(",")
        assert first[0] == "0"
        assert all("." in part and len(part.split(".")[1]) == 6
                   for part in first[1:])

        nv_lines = novisit_csv.read_text().splitlines()
        assert nv_lines[0] == "week,no_visit_count"
        cell = result.cells[("blacklist", 2)]
        assert nv_lines[1] == f"1,{cell.no_visit_first_run[0]}"

    def test_byte_identical_for_same_seed(self, tmp_path):
        a_dir, b_dir = tmp_path / "a", tmp_path / "b"
        run_experiment(tiny_spec(out=a_dir))
        run_experiment(tiny_spec(out=b_dir))
        for name in ("blacklist_th2.csv", "blacklist_th2_novisit.csv"):
            assert (a_dir / name).read_bytes() == (b_dir / name).read_bytes()

    def test_cartesian_cells(self, tmp_path):
        spec = tiny_spec(strategies=(StrategyKind.AS_PLANNED,
                                     StrategyKind.BLACKLIST),
                         thresholds=(5, 2), out=tmp_path / "res")
        result = run_experiment(spec)
        assert set(result.cells) == {("asplanned", 5), ("asplanned", 2),
                                     ("blacklist", 5), ("blacklist", 2)}
        assert len(list((tmp_path / "res").glob("*.csv"))) == 8


class TestCli:
    def test_full_invocation(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("grid_size = 10\npoi_count = 3\nhome_count = 5\nweeks = 1\n")
        code = main(["--config", str(cfg), "--strategy", "blacklist",
                     "--threshold", "2", "--runs", "1", "--seed", "4",
                     "--out", str(tmp_path / "res")])
        assert code == 0
        assert (tmp_path / "res" / "blacklist_th2.csv").is_file()
        assert "blacklist_th2" in capsys.readouterr().out

    def test_flags_override_config_file(self, tmp_path):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("grid_size = 10\npoi_count = 3\nhome_count = 5\n"
                       "weeks = 1\nruns = 50\nstrategy = replace\n")
        code = main(["--config", str(cfg), "--strategy", "asplanned",
                     "--threshold", "3", "--runs", "1",
                     "--out", str(tmp_path / "res")])
        assert code == 0
        files = sorted(p.name for p in (tmp_path / "res").glob("*.csv"))
        assert files == ["asplanned_th3.csv", "asplanned_th3_novisit.csv"]

    def test_missing_config_file_fails_cleanly(self, tmp_path, capsys):
        code = main(["--config", str(tmp_path / "nope.cfg")])
        assert code == 1
        assert "not found" in capsys.readouterr().err

    def test_unknown_strategy_fails_cleanly(self, tmp_path, capsys):
        code = main(["--strategy", "greedy", "--out", str(tmp_path / "res")])
        assert code == 1
        assert "greedy" in capsys.readouterr().err

    def test_works_without_config_file(self, tmp_path):
        code = main(["--strategy", "asplanned", "--threshold", "5",
                     "--runs", "1", "--weeks", "1",
                     "--grid-size", "10", "--poi-count", "3",
                     "--home-count", "5", "--out", str(tmp_path / "res")])
        assert code == 0
        assert (tmp_path / "res" / "asplanned_th5.csv").is_file()
