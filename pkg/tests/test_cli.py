"""End-to-end command-line behavior, including byte-level determinism."""

import json

import pytest

from medcover.cli import main
from medcover.reduction import instance_from_json

C5_TEXT = "0 1\n1 2\n2 3\n3 4\n0 4\n"
P4_TEXT = "0 1\n1 2\n2 3\n"
HYPER_TEXT = "0 1 2\n1 2 3\n2 3 4\n0 3 4\n"


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text(C5_TEXT)
    return str(p)


@pytest.fixture
def p4_file(tmp_path):
    p = tmp_path / "p4.txt"
    p.write_text(P4_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reduce_writes_a_loadable_instance(tmp_path, capsys, p4_file):
    out = tmp_path / "inst.json"
    code, stdout, _ = run(capsys, "reduce", "--graph", p4_file, "--k", "2",
                          "--out", str(out))
    assert code == 0
    payload = json.loads(stdout)
    assert payload["instance_points"] == 3
    assert payload["yes_cost"] == 2.0
    inst = instance_from_json(out.read_text())
    assert inst.k == 2
    assert len(inst.points) == 3


def test_median_reports_closed_form_when_it_exists(capsys, p4_file):
    code, stdout, _ = run(capsys, "median", "--graph", p4_file)
    assert code == 0
    payload = json.loads(stdout)
    assert payload["converged"] is True
    assert payload["closed_form"] == pytest.approx(payload["cost"], abs=1e-6)
    assert payload["extra_cost"]["value"] > 0.158


def test_decompose_reports_both_modes_for_c5(capsys, c5_file):
    code, stdout, _ = run(capsys, "decompose", "--graph", c5_file)
    assert code == 0
    payload = json.loads(stdout)
    assert payload["class"] == "C5"
    assert payload["safe"]["bound"] == pytest.approx(5.0955735647785594, abs=1e-9)
    assert payload["ultra_safe"]["bound"] == pytest.approx(5.095, abs=1e-9)


def test_decompose_skips_ultra_for_bridge_graphs(capsys, p4_file):
    code, stdout, _ = run(capsys, "decompose", "--graph", p4_file)
    assert code == 0
    payload = json.loads(stdout)
    assert payload["ultra_safe"] is None
    assert "bridge" in payload["note"]


def test_cover_recovers_the_minimum_on_c5(capsys, c5_file):
    code, stdout, _ = run(capsys, "cover", "--graph", c5_file, "--k", "3")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["total_cover_size"] == 3
    assert payload["min_vertex_cover"] == 3
    assert payload["beta"] == 1.0
    assert len(payload["per_cluster"]) >= 1


def test_oracle_on_edge_list_requires_k(capsys, p4_file):
    code, _, stderr = run(capsys, "oracle", "--graph", p4_file)
    assert code == 1
    assert "--k" in stderr


def test_oracle_on_instance_json(tmp_path, capsys):
    hyper = tmp_path / "h.txt"
    hyper.write_text(HYPER_TEXT)
    inst = tmp_path / "inst.json"
    code, _, _ = run(capsys, "hyper-reduce", "--graph", str(hyper), "--k", "2",
                     "--out", str(inst))
    assert code == 0
    code, stdout, _ = run(capsys, "oracle", "--graph", str(inst))
    assert code == 0
    payload = json.loads(stdout)
    assert payload["optimal_cost"] == 8.0
    assert payload["method"] == "center_subset_enum"


def test_missing_file_is_a_clean_error(capsys):
    code, _, stderr = run(capsys, "median", "--graph", "/nonexistent/x.txt")
    assert code == 1
    assert "error:" in stderr


def test_malformed_graph_file_is_a_clean_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    code, _, stderr = run(capsys, "median", "--graph", str(bad))
    assert code == 1
    assert stderr.startswith("error:")
    assert "self-loop" in stderr


def test_malformed_instance_json_is_a_clean_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"bad": 1}')
    code, _, stderr = run(capsys, "oracle", "--graph", str(bad))
    assert code == 1
    assert stderr.startswith("error:")
    assert "missing fields" in stderr


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_lemmas_passes_and_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code1, _, _ = run(capsys, "verify-lemmas", "--max-edges", "4",
                      "--trials", "4", "--out", str(a))
    code2, _, _ = run(capsys, "verify-lemmas", "--max-edges", "4",
                      "--trials", "4", "--out", str(b))
    assert code1 == code2 == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    assert report["all_passed"] is True


def test_sweep_is_deterministic_and_verdicts_hold(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--n", "7", "--d", "3", "--trials", "4", "--seed", "2"]
    code1, _, _ = run(capsys, *args, "--out", str(a))
    code2, _, _ = run(capsys, *args, "--out", str(b))
    assert code1 == code2 == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().strip().split("\n")
    header = lines[0].split(",")
    assert header[:6] == ["trial", "seed", "n", "m", "k", "blocks"]
    assert len(lines) == 5
    for line in lines[1:]:
        row = dict(zip(header, line.split(",")))
        assert row["median_complete"] == "true"
        assert row["means_complete"] == "true"
        if row["cover_valid"]:
            assert row["cover_valid"] == "true"
            assert row["beta_monotone"] == "true"
