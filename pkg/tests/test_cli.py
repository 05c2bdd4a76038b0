import io
import json

import pytest

from tupledom import atlas
from tupledom.cli import main
from tupledom.formats import parse_graph6, write_dimacs, write_graph6
from tupledom.generators import GENERATOR_ID


def run_cli(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_atlas_to_stdout(monkeypatch, capsys):
    code, out, err = run_cli(monkeypatch, capsys, ["gen", "--atlas", "heawood"])
    assert code == 0
    assert parse_graph6(out.strip()) == atlas.heawood()


def test_gen_random_deterministic(tmp_path, monkeypatch, capsys):
    out_a = tmp_path / "a.g6"
    out_b = tmp_path / "b.g6"
    for path in (out_a, out_b):
        code, _, _ = run_cli(
            monkeypatch, capsys,
            ["gen", "--n", "20", "--r", "3", "--count", "5", "--seed", "7", "--out", str(path)],
        )
        assert code == 0
    assert out_a.read_text() == out_b.read_text()
    assert len(out_a.read_text().splitlines()) == 5


def test_gen_meta_sidecar(tmp_path, monkeypatch, capsys):
    out = tmp_path / "corpus.g6"
    code, _, _ = run_cli(
        monkeypatch, capsys,
        ["gen", "--n", "12", "--r", "3", "--count", "2", "--seed", "3", "--out", str(out), "--meta"],
    )
    assert code == 0
    meta = (tmp_path / "corpus.g6.meta").read_text()
    assert f"generator={GENERATOR_ID}" in meta
    assert "n=12 r=3 seed=3 count=2" in meta
    assert all(line.startswith("c ") for line in meta.splitlines())


def test_gen_meta_without_out_is_usage_error(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["gen", "--atlas", "heawood", "--meta"])
    assert code == 2
    assert "--meta needs --out" in err


def test_gen_parity_error(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["gen", "--n", "5", "--r", "3"])
    assert code == 2
    assert "even" in err


def test_gen_unknown_atlas(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["gen", "--atlas", "petersen-ish"])
    assert code == 2
    assert "unknown atlas" in err


def test_gen_atlas_arity_error(monkeypatch, capsys):
    code, _, err = run_cli(monkeypatch, capsys, ["gen", "--atlas", "pg2"])
    assert code == 2
    assert "takes 1 argument" in err


def test_dominate_heawood_json(monkeypatch, capsys):
    g6 = write_graph6(atlas.heawood())
    code, out, _ = run_cli(
        monkeypatch, capsys, ["dominate", "--variant", "total"], stdin=g6 + "\n"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "dominate"
    rec = payload["records"][0]
    assert rec["index"] == 0
    assert rec["graph6"] == g6
    assert rec["branch"] == "projective-plane-exact"
    assert rec["size"] == 12
    assert rec["verified"] is True
    assert rec["set"] == sorted(rec["set"])


def test_dominate_batch_isolates_bad_graphs(monkeypatch, capsys):
    lines = "\n".join(
        [write_graph6(atlas.cycle(4)), write_graph6(atlas.moore_graph(3))]
    )
    code, out, _ = run_cli(
        monkeypatch, capsys, ["dominate", "--variant", "total"], stdin=lines + "\n"
    )
    assert code == 1  # one record failed its preconditions
    records = json.loads(out)["records"]
    assert len(records) == 2
    assert "error" in records[0]
    assert "at least 3" in records[0]["error"]
    assert records[1]["branch"] == "generic-coloring"
    assert records[1]["size"] == 8


def test_exact_cli(monkeypatch, capsys):
    g6 = write_graph6(atlas.heawood())
    code, out, _ = run_cli(
        monkeypatch, capsys,
        ["exact", "--variant", "total", "--k", "2"], stdin=g6 + "\n",
    )
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["status"] == "proven"
    assert rec["size"] == 12


def test_exact_budget_exhaustion_fails(monkeypatch, capsys):
    g6 = write_graph6(atlas.moore_graph(3))
    code, out, _ = run_cli(
        monkeypatch, capsys,
        ["exact", "--variant", "total", "--k", "2", "--budget", "3"], stdin=g6 + "\n",
    )
    assert code == 1
    rec = json.loads(out)["records"][0]
    assert rec["status"] == "budget-exhausted"
    assert "size" not in rec


def test_exact_infeasible_fails(monkeypatch, capsys):
    star = write_graph6(atlas.complete_bipartite(1, 3))
    code, out, _ = run_cli(
        monkeypatch, capsys,
        ["exact", "--variant", "total", "--k", "2"], stdin=star + "\n",
    )
    assert code == 1
    assert json.loads(out)["records"][0]["status"] == "infeasible"


def test_bounds_csv(monkeypatch, capsys):
    g6 = write_graph6(atlas.heawood())
    code, out, _ = run_cli(
        monkeypatch, capsys, ["bounds", "--format", "csv"], stdin=g6 + "\n"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("index,n,r,k_total,k_closed,constructive_total")
    assert lines[1].startswith("0,14,3,2,3,11.667")


def test_bounds_text_format(monkeypatch, capsys):
    g6 = write_graph6(atlas.moore_graph(3))
    code, out, _ = run_cli(
        monkeypatch, capsys, ["bounds", "--format", "text"], stdin=g6 + "\n"
    )
    assert code == 0
    header, row = out.splitlines()[:2]
    assert "constructive_closed" in header
    assert "8.889" in row


def test_verify_pass_and_fail(monkeypatch, capsys):
    c5 = write_graph6(atlas.cycle(5))
    code, out, _ = run_cli(
        monkeypatch, capsys,
        ["verify", "--variant", "closed", "--k", "2", "--set", "0,1,2,3"],
        stdin=c5 + "\n",
    )
    assert code == 0
    assert out.startswith("PASS")
    code, out, _ = run_cli(
        monkeypatch, capsys,
        ["verify", "--variant", "closed", "--k", "2", "--set", "0,1,2"],
        stdin=c5 + "\n",
    )
    assert code == 1
    assert out.startswith("FAIL: vertex 3")


def test_verify_out_of_range_set(monkeypatch, capsys):
    c5 = write_graph6(atlas.cycle(5))
    code, _, err = run_cli(
        monkeypatch, capsys,
        ["verify", "--variant", "total", "--k", "1", "--set", "0,7"],
        stdin=c5 + "\n",
    )
    assert code == 2
    assert "out of range" in err


def test_dimacs_extension_sniffing(tmp_path, monkeypatch, capsys):
    path = tmp_path / "k4.col"
    path.write_text(write_dimacs(atlas.complete(4)))
    code, out, _ = run_cli(
        monkeypatch, capsys, ["dominate", "--variant", "closed", str(path)]
    )
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["graph6"] == "C~"
    assert rec["verified"] is True


def test_format_in_override(tmp_path, monkeypatch, capsys):
    path = tmp_path / "k4.txt"
    path.write_text(write_dimacs(atlas.complete(4)))
    code, out, _ = run_cli(
        monkeypatch, capsys,
        ["dominate", "--variant", "closed", "--format-in", "dimacs", str(path)],
    )
    assert code == 0
    assert json.loads(out)["records"][0]["n"] == 4


def test_missing_input_file_is_usage_error(monkeypatch, capsys):
    code, _, err = run_cli(
        monkeypatch, capsys, ["dominate", "--variant", "total", "/nonexistent/x.g6"]
    )
    assert code == 2
    assert err.startswith("error: ")
    assert "x.g6" in err


def test_graph6_parse_error_is_usage_error(monkeypatch, capsys):
    code, _, err = run_cli(
        monkeypatch, capsys, ["dominate", "--variant", "total"], stdin='C"\n'
    )
    assert code == 2
    assert "invalid graph6 byte" in err


def test_usage_error_exit_code(monkeypatch, capsys):
    code, _, _ = run_cli(monkeypatch, capsys, ["dominate", "--variant", "sideways"])
    assert code == 2
    code, _, _ = run_cli(monkeypatch, capsys, ["no-such-command"])
    assert code == 2
