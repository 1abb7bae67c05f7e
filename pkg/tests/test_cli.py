import json

import pytest

from koutgraph.cli import dispatch
from koutgraph.connectivity import connectivity_report
from koutgraph.model import read_edgelist


def run(argv, capsys):
    code = dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_threshold_prints_value(capsys):
    code, out, _ = run(["threshold", "--n", "500", "--mu", "0.5", "--k", "2"], capsys)
    assert code == 0
    assert out.strip() == "13"


def test_check_triangle(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text("n 3\n0 1\n0 2\n1 2\n")
    code, out, _ = run(["check", "--in", str(path), "--k", "2"], capsys)
    assert code == 0
    assert "min degree: 2" in out
    assert "connected: true" in out
    assert "k-connected: true" in out


def test_generate_deterministic_output(tmp_path, capsys):
    args = [
        "generate", "--n", "40", "--mu", "0.5", "--k2", "4", "--seed", "9",
    ]
    p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
    assert dispatch(args + ["--out", str(p1)]) == 0
    assert dispatch(args + ["--out", str(p2)]) == 0
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()


def test_generate_then_check_round_trip(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code = dispatch(
        ["generate", "--n", "60", "--mu", "0.3", "--k2", "5", "--seed", "3",
         "--out", str(path)]
    )
    assert code == 0
    with open(path) as fp:
        g = read_edgelist(fp)
    rep = connectivity_report(g, 2)
    code, out, _ = run(["check", "--in", str(path), "--k", "2"], capsys)
    assert code == 0
    assert f"min degree: {rep.min_degree}" in out
    assert f"k-connected: {str(rep.is_k_vertex_connected).lower()}" in out


def test_generate_dot_format(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code = dispatch(
        ["generate", "--n", "10", "--mu", "0.5", "--k2", "2", "--seed", "1",
         "--out", str(path), "--format", "dot"]
    )
    capsys.readouterr()
    assert code == 0
    assert path.read_text().startswith("graph G {")


def test_analytics_output(tmp_path, capsys):
    pmf_path = tmp_path / "pmf.csv"
    code, out, _ = run(
        ["analytics", "--n", "500", "--mu", "0.5", "--k2", "25", "--k", "2",
         "--pmf-csv", str(pmf_path)],
        capsys,
    )
    assert code == 0
    assert "mean_selection: 13.000000" in out
    assert "mean_degree: 25.661323" in out
    assert "threshold_k2 (k=2): 13" in out
    lines = pmf_path.read_text().splitlines()
    assert lines[0] == "d,pmf_type1,pmf_type2,expected_count"
    assert len(lines) == 501


def test_validate_small_grid_passes(capsys):
    code, out, _ = run(["validate", "--max-n", "5"], capsys)
    assert code == 0
    assert "validation: PASS" in out
    assert "max abs error" in out


def test_experiment_subcommand(tmp_path, capsys):
    cfg = {
        "n": 30,
        "mu_list": [0.5],
        "k_list": [2],
        "k2_range": [2, 6, 2],
        "trials": 60,
        "master_seed": 4,
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out_path = tmp_path / "rows.csv"
    code, out, err = run(
        ["experiment", "--config", str(cfg_path), "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    assert out_path.exists()
    lines = out_path.read_text().splitlines()
    assert len(lines) == 4  # header + 3 points
    assert "wrote 3 rows" in out
    assert "[3/3]" in err  # progress on stderr


def test_experiment_rejects_unknown_config_keys(tmp_path, capsys):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"n": 10, "mu_list": [0.5], "k_list": [2],
                                    "k2_range": [2, 3, 1], "bogus": 1}))
    code, _, err = run(
        ["experiment", "--config", str(cfg_path), "--out", str(tmp_path / "o.csv")],
        capsys,
    )
    assert code == 2
    assert "bogus" in err


def test_experiment_parallelism_env_default(tmp_path, capsys, monkeypatch):
    # env var supplies the default; flag and config take precedence
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"n": 20, "mu_list": [0.5], "k_list": [2],
                                    "k2_range": [2, 4, 1], "trials": 30}))
    monkeypatch.setenv("KOUTGRAPH_PARALLELISM", "2")
    out_path = tmp_path / "o.csv"
    code, _, _ = run(
        ["experiment", "--config", str(cfg_path), "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    assert out_path.exists()
    monkeypatch.setenv("KOUTGRAPH_PARALLELISM", "not-a-number")
    code, _, err = run(
        ["experiment", "--config", str(cfg_path), "--out", str(out_path),
         "--parallelism", "1"],
        capsys,
    )
    assert code == 0  # flag wins; bogus env ignored


def test_usage_error_unknown_flag(capsys):
    code, _, _ = run(["threshold", "--n", "500", "--wat", "1"], capsys)
    assert code == 2


def test_usage_error_missing_file(capsys):
    code, _, err = run(["check", "--in", "/nonexistent/file", "--k", "2"], capsys)
    assert code == 2
    assert "error:" in err


def test_usage_error_out_of_range_params(capsys):
    code, _, err = run(
        ["generate", "--n", "3", "--mu", "0.5", "--k2", "9", "--seed", "1"], capsys
    )
    assert code == 2
    assert "k2" in err


def test_usage_error_mu_one_threshold(capsys):
    code, _, _ = run(["threshold", "--n", "500", "--mu", "1.0", "--k", "2"], capsys)
    assert code == 2
