import math

import pytest

import pathcover as pc
from pathcover.cli import main


def small_er(seed=0):
    return pc.GenSpec(family="erdos-renyi", n=300, c=2.0, seed=seed)


def test_run_plan_record_consistency():
    record = pc.run_plan(pc.RunPlan(source=small_er(), repetitions=3, verify=True))
    assert record.n == 300
    assert record.cover_weight_1 == record.cover_weight_2
    assert record.t_algo1_seconds > 0 and record.t_algo2_seconds > 0
    assert math.isfinite(record.time_ratio)
    assert record.time_ratio == pytest.approx(
        record.t_algo2_seconds / record.t_algo1_seconds)
    assert record.h == record.n - record.k
    assert "seed=0" in record.spec and "engine=python" in record.spec


def test_run_plan_trace_and_verify_do_not_change_weights():
    base = pc.run_plan(pc.RunPlan(source=small_er(3), repetitions=2))
    checked = pc.run_plan(pc.RunPlan(source=small_er(3), repetitions=2,
                                     verify=True, trace=True))
    assert base.cover_weight_1 == checked.cover_weight_1
    assert base.h == checked.h and base.k == checked.k


def test_run_plan_fixed_seed_weights_stable_across_repetitions():
    a = pc.run_plan(pc.RunPlan(source=small_er(9), repetitions=3))
    b = pc.run_plan(pc.RunPlan(source=small_er(9), repetitions=1))
    assert a.cover_weight_1 == b.cover_weight_1


def test_run_plan_rejects_bad_protocol():
    with pytest.raises(ValueError):
        pc.RunPlan(source=small_er(), repetitions=0)
    with pytest.raises(ValueError):
        pc.RunPlan(source=small_er(), warmup=-1)


def test_run_bench_multiple_plans():
    plans = [pc.RunPlan(source=small_er(s), repetitions=1) for s in (1, 2)]
    records = pc.run_bench(plans)
    assert [r.seed for r in records] == [1, 2]


def test_verify_graph_with_oracle(triangle_321):
    report = pc.verify_graph(triangle_321, oracle_limit=10)
    assert report.bound_checked
    assert report.weight_ratio == pytest.approx(1.0)
    assert report.optimal_weight == 5.0
    assert report.classification_sizes == (2, 0, 0)


def test_verify_graph_skips_oracle_above_limit():
    g = pc.generate(pc.GenSpec(family="ring-lattice", n=100, k=4, seed=0))
    report = pc.verify_graph(g, oracle_limit=10)
    assert not report.bound_checked
    assert report.notices
    assert report.h == g.n - report.k


def test_verify_pair_detects_mismatch(triangle_321):
    from pathcover.bench import _verify_pair
    c1 = pc.cover_baseline(triangle_321)
    other = pc.PathCover(triangle_321, [])
    with pytest.raises(pc.VerificationError):
        _verify_pair(triangle_321, c1, other)


def test_cli_generate_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    args = ["generate", "--family", "ring", "--nodes", "8", "--degree", "2",
            "--seed", "5"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_text() == out2.read_text()
    data_lines = [l for l in out1.read_text().splitlines() if not l.startswith("#")]
    assert len(data_lines) == 8


def test_cli_generate_er_edge_count_within_3_sigma(tmp_path):
    out = tmp_path / "er.txt"
    assert main(["generate", "--family", "er", "--nodes", "1000", "--coef", "2",
                 "--seed", "1", "--out", str(out)]) == 0
    m = sum(1 for l in out.read_text().splitlines() if not l.startswith("#"))
    p = 2 * math.log(1000) / 1000
    expect = p * 1000 * 999 / 2
    sigma = math.sqrt(expect * (1 - p))
    assert abs(m - expect) <= 3 * sigma


def test_cli_bench_writes_csv(tmp_path):
    out = tmp_path / "bench.csv"
    code = main(["bench", "--family", "er", "--nodes", "300", "--coef", "2",
                 "--seed", "4", "--reps", "2", "--warmup", "1", "--verify",
                 "--out", str(out)])
    assert code == 0
    records = pc.read_bench_csv(out)
    assert len(records) == 1
    assert records[0].cover_weight_1 == records[0].cover_weight_2


def test_cli_bench_loaded_edge_list(tmp_path):
    graph_file = tmp_path / "g.txt"
    main(["generate", "--family", "er", "--nodes", "200", "--coef", "2",
          "--seed", "2", "--out", str(graph_file)])
    out = tmp_path / "bench.csv"
    code = main(["bench", "--input", str(graph_file), "--weight-policy",
                 "use-file", "--reps", "1", "--out", str(out)])
    assert code == 0
    assert pc.read_bench_csv(out)[0].label == str(graph_file)


def test_cli_verify_small_graph(tmp_path, capsys):
    graph_file = tmp_path / "tri.txt"
    graph_file.write_text("0 1 3\n1 2 2\n0 2 1\n")
    code = main(["verify", "--input", str(graph_file), "--weight-policy",
                 "use-file", "--oracle-limit", "10"])
    assert code == 0
    out = capsys.readouterr().out
    assert "ratio 1.000" in out
    assert "|E1|=2" in out


def test_cli_stats_ring_zero_variance(tmp_path, capsys):
    out = tmp_path / "hist.csv"
    code = main(["stats", "--family", "ring", "--nodes", "50", "--degree", "4",
                 "--out", str(out)])
    assert code == 0
    assert "undefined" in capsys.readouterr().out
    assert pc.read_histogram_csv(out) == ((4, 50),)


def test_cli_stats_empty_graph(tmp_path, capsys):
    graph_file = tmp_path / "empty_edges.txt"
    graph_file.write_text("0 1\n")
    code = main(["stats", "--input", str(graph_file), "--weight-policy", "unit"])
    assert code == 0
    assert "avg_degree=1" in capsys.readouterr().out


def test_cli_exit_code_input_error(tmp_path):
    assert main(["bench", "--family", "er", "--nodes", "100",
                 "--out", str(tmp_path / "x.csv")]) == 2  # missing --coef
    assert main(["stats", "--input", str(tmp_path / "missing.txt")]) == 2


def test_cli_exit_code_generate_without_family(tmp_path):
    assert main(["generate", "--out", str(tmp_path / "g.txt")]) == 2
