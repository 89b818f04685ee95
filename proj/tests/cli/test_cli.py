import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
BIN = os.environ.get("ILLUSION_BIN", str(ROOT / "build" / "illusion"))


def schema(name):
    return json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())


def run(*args):
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, timeout=600)


def valid(proc, name):
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, schema(name))
    return doc


@pytest.fixture(scope="module")
def data(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    for name, file in [("fig1", "fig1.json"), ("fig10", "fig10.json"), ("xor-like", "xor.cnf")]:
        assert run("fixture", name, "--out", d / file).returncode == 0
    assert run("gen", "3cnf", "--vars", 3, "--clauses", 2, "--seed", 7, "--out", d / "small.cnf").returncode == 0
    assert run("gen", "2p2n", "--vars", 2, "--seed", 3, "--out", d / "pp.cnf").returncode == 0
    return d


def test_fig1_is_full_illusion(data):
    p = run("analyze", data / "fig1.json", "--q", "1/1")
    assert p.returncode == 0
    doc = valid(p, "report")
    assert doc["q_illusion"] and doc["fraction"] == "1/1" and doc["global_winner"] == "b"


def test_fixture_networks_match_schema(data):
    for f in ("fig1.json", "fig10.json"):
        jsonschema.validate(json.loads((data / f).read_text()), schema("network"))


def test_fig10_has_no_majority_witness(data):
    p = run("search", data / "fig10.json", "--q", "1/1", "--method", "backtrack")
    assert p.returncode == 1 and p.stdout.strip() == "none"


def test_fig10_plurality_report(data):
    p = run("analyze", data / "fig10.json", "--plurality", "--q", "1")
    assert p.returncode == 0
    assert valid(p, "report")["illuded_count"] == 13


def test_xor_like_is_not_refuted(data):
    p = run("verify-reduction", data / "xor.cnf", "--theorem", 2, "--q", "1/3")
    assert p.returncode == 3
    assert valid(p, "verdict")["verdict"] == "not-refuted"


def test_search_methods_agree(data):
    for method in ("backtrack", "brute", "cnf"):
        p = run("search", data / "fig1.json", "--q", "1", "--method", method)
        assert p.returncode == 0, method
        assert valid(p, "labelling")["illuded_count"] == 9


def test_backtrack_rejects_fractional_q(data):
    p = run("search", data / "fig1.json", "--q", "1/2", "--method", "backtrack")
    assert p.returncode == 2
    assert p.stderr.startswith("error: domain:") and p.stdout == ""


def test_eliminate_plan(data):
    p = run("eliminate", data / "fig1.json", "--q", "1", "--k", 1)
    assert p.returncode == 0
    doc = valid(p, "plan")
    assert doc["verified"] and doc["size"] <= 1


def test_eliminate_none(data):
    p = run("eliminate", data / "fig1.json", "--q", "1/10", "--k", 1, "--mode", "add")
    assert p.returncode == 1 and p.stdout.strip() == "none"


def test_encode_targets(data):
    p = run("encode", data / "small.cnf", "--target", "verify", "--q", "2/3")
    assert p.returncode == 0
    doc = valid(p, "encoding")
    assert len(doc["nodes"]) == 2 * doc["padding_pairs"] + doc["expected_node_count"]
    assert doc["expected_node_count"] == 12 * doc["m"] + 18 * doc["n"] - 1
    for variant in ("mixed", "addition", "removal"):
        p = run("encode", data / "pp.cnf", "--target", "eliminate", "--q", "1/3", "--variant", variant)
        assert p.returncode == 0
        assert valid(p, "elimination")["variant"] == variant


def test_export_and_ingest_round_trip(data, tmp_path):
    cnf, mp = tmp_path / "f.cnf", tmp_path / "map.json"
    assert run("export-cnf", data / "fig1.json", "--q", "1", "--map", mp, "--out", cnf).returncode == 0
    jsonschema.validate(json.loads(mp.read_text()), schema("variable_map"))
    header = cnf.read_text().splitlines()[0].split()
    count = int(header[2])
    # An all-false assignment is not a model; the decoder must refuse it.
    model = tmp_path / "model.txt"
    model.write_text("s SATISFIABLE\nv " + " ".join(str(-v) for v in range(1, count + 1)) + " 0\n")
    p = run("ingest-model", mp, model)
    assert p.returncode in (0, 1)
    if p.returncode == 0:
        valid(p, "labelling")


def test_theorem1_single_formula(data):
    p = run("verify-reduction", data / "small.cnf", "--theorem", 1)
    assert p.returncode == 0
    assert valid(p, "verdict")["variant"] == "verify"


def test_corpus_log_lines_match_schema(tmp_path):
    log = tmp_path / "c.jsonl"
    p = run("--jobs", 2, "verify-reduction", "--theorem", 2, "--variant", "mixed", "--q", "1/3",
            "--corpus", log, "--count", 2)
    assert p.returncode == 0
    lines = log.read_text().splitlines()
    assert len(lines) == 9 + 712 + 2
    s = schema("verdict")
    for line in lines:
        jsonschema.validate(json.loads(line), s)
    assert not (tmp_path / "c.jsonl.tmp").exists()


def test_gen_is_deterministic(tmp_path):
    a = run("gen", "graph", "--nodes", 12, "--labelled", "--seed", 11)
    b = run("--seed", 11, "gen", "graph", "--nodes", 12, "--labelled")
    assert a.returncode == 0 and a.stdout == b.stdout
    jsonschema.validate(json.loads(a.stdout), schema("network"))
    out = tmp_path / "many"
    assert run("gen", "3cnf", "--count", 3, "--out", out, "--seed", 1).returncode == 0
    assert sorted(f.name for f in out.iterdir()) == ["3cnf-0000.cnf", "3cnf-0001.cnf", "3cnf-0002.cnf"]


def test_errors_exit_two(tmp_path):
    p = run("analyze", tmp_path / "missing.json")
    assert p.returncode == 2 and p.stderr.startswith("error: io:")
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 2 1\n1 3 0\n")
    p = run("verify-reduction", bad, "--theorem", 1)
    assert p.returncode == 2 and p.stderr.startswith("error: parse:")
    assert run("no-such-command").returncode == 2
