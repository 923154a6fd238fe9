import pytest

from satprep import bench
from satprep.bench import BenchConfig, RunRecord, delta_pct, delta_stats
from satprep.generate import EXAMPLE_F, write_suite


def rec(instance, config, status, runtime, dv=None, dc=None):
    return RunRecord(instance, config, status, runtime, dv, dc, 0)


def test_config_parsing():
    assert BenchConfig.parse("reference").name == "reference"
    assert BenchConfig.parse("bce+bve").name == "BCE+BVE"
    assert BenchConfig.parse("-:UH+DI").name == "-:UH+DI"
    assert BenchConfig.parse("BCE+BVE+UH:UH+DI") == BenchConfig("BCE+BVE+UH", "UH+DI")


def test_delta_pct():
    assert delta_pct(3, 2) == pytest.approx(-33.333333)
    assert delta_pct(2, 1) == -50.0
    assert delta_pct(0, 0) is None
    assert delta_pct(10, 12) == pytest.approx(20.0)


def test_delta_stats_means_and_sentinels():
    rs = [rec("a", "SUB", "SAT", 1.0, 0.0, -50.0), rec("b", "SUB", "SAT", 1.0, -10.0, None),
          rec("c", "BVE", "SAT", 1.0, 0.0, 0.0)]
    assert delta_stats(rs, "SUB") == (-5.0, -50.0)
    assert delta_stats(rs, "BVE") == (0.0, 0.0)
    with pytest.raises(ValueError):
        delta_stats(rs, "UH")


def test_cactus_sort_and_clamp():
    rs = [rec("a", "X", "SAT", 3.0), rec("b", "X", "SAT", 1.0), rec("c", "X", "UNKNOWN", 599.9),
          rec("d", "Y", "UNSAT", 2.0)]
    lines = bench.emit_cactus_csv(rs, 600.0).splitlines()
    assert lines[0] == "config,index,runtime_s"
    assert lines[1:4] == ["X,1,1.000000", "X,2,3.000000", "X,3,600.000000"]
    assert lines[4] == "Y,1,2.000000"
    assert bench.emit_cactus_csv([]) == "config,index,runtime_s\n"


def test_records_roundtrip():
    rs = [rec("a b.cnf", "BCE+BVE", "SAT", 0.1 + 0.2, -1 / 3, None), rec("x", "reference", "ERROR", 0.0)]
    text = bench.emit_records_csv(rs)
    assert text.splitlines()[0] == ",".join(bench.RECORD_FIELDS)
    assert bench.parse_records_csv(text) == rs


def test_manifest(tmp_path):
    (tmp_path / "m.txt").write_text("# suite\na.cnf\n\n/abs/b.cnf  # trailing\n")
    assert bench.read_manifest(tmp_path / "m.txt") == [str(tmp_path / "a.cnf"), "/abs/b.cnf"]


def test_run_suite_products_and_errors(tmp_path):
    paths = write_suite(tmp_path, 4, seed=1, hard=0)
    bad = tmp_path / "bad.cnf"
    bad.write_text("not dimacs\n")
    configs = [BenchConfig(), BenchConfig("SUB"), BenchConfig("BVE", "UH+DI")]
    rs = bench.run_suite([*map(str, paths[:2]), str(bad)], configs, timeout=5.0)
    assert len(rs) == 9
    assert [r.status for r in rs[-3:]] == ["ERROR"] * 3
    sub_f = [r for r in rs if r.config == "SUB" and r.instance.endswith("example_f.cnf")][0]
    assert sub_f.delta_cls_pct == pytest.approx(-100 / 3)
    assert sub_f.delta_vars_pct == pytest.approx(-100 / 3)   # x3 no longer occurs


def test_jobs_do_not_change_statuses(tmp_path):
    paths = list(map(str, write_suite(tmp_path, 5, seed=2, hard=0)))
    configs = [BenchConfig(), BenchConfig("BCE+BVE+UH")]
    one = bench.run_suite(paths, configs, 5.0, jobs=1)
    two = bench.run_suite(paths, configs, 5.0, jobs=2)
    assert [(r.instance, r.config, r.status) for r in one] == \
           [(r.instance, r.config, r.status) for r in two]


def test_timeout_gives_unknown_near_timeout(tmp_path):
    paths = write_suite(tmp_path, 3, seed=3, hard=1)
    hard = [p for p in paths if p.name.startswith("hard")][0]
    r = bench.run_instance(str(hard), BenchConfig(), timeout=0.3)
    if r.status == "UNKNOWN":
        assert 0.25 <= r.runtime <= 0.6
    s = bench.summarize([r])
    assert s[0]["solved"] == int(r.solved)


def test_summary_format():
    rs = [rec("a", "SUB", "SAT", 1.0, 0.0, -33.333), rec("b", "SUB", "UNKNOWN", 600.0, 0.0, 0.0)]
    out = bench.format_summary(bench.summarize(rs))
    assert "SUB" in out and "-16.67" in out and out.splitlines()[1].split()[1] == "1"


def test_suite_contains_example(tmp_path):
    paths = write_suite(tmp_path, 30, seed=0)
    assert len(paths) == 30
    text = paths[0].read_text().split("\n", 1)[1]
    assert text.split("\n")[:3] == [" ".join(map(str, c)) + " 0" for c in EXAMPLE_F]
