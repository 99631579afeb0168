import io
import json
import os

import jsonschema
import networkx as nx
import pytest

from halftrans import analysis
from halftrans.cli import EXIT_BUDGET, EXIT_CLAIM, EXIT_OK, EXIT_USAGE, corrupted_graph, main, run_audit


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_enumerate_csv():
    code, text = run("enumerate", "--max-n", "9")
    assert code == EXIT_OK
    assert text.splitlines() == ["n,a,b", "7,2,4", "9,4,7"]


def test_enumerate_empty_and_json():
    assert run("enumerate", "--max-n", "6")[1].splitlines() == ["n,a,b"]
    code, text = run("enumerate", "--max-n", "63", "--json")
    rows = {(r["n"], r["a"], r["b"]) for r in json.loads(text)}
    assert {(63, 4, 16), (63, 22, 43)} <= rows


@pytest.mark.parametrize("argv", [
    ("enumerate",),
    ("enumerate", "--max-n", "10001"),
    ("enumerate", "--max-n", "20", "--format", "xml"),
    ("analyze", "--n", "8", "--a", "3"),
    ("analyze", "--n", "9"),
    ("frobnicate",),
    ("analyze", "--n", "9", "--a", "4", "--budget", "0"),
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == EXIT_USAGE
    assert "halftrans: error:" in capsys.readouterr().err


@pytest.mark.parametrize("n, a, girth, kind, order", [
    (9, 4, 5, "half-transitive", 54),
    (7, 2, 3, "arc-transitive", 336),
    (14, 9, 6, "arc-transitive", 672),
])
def test_analyze_json(n, a, girth, kind, order):
    code, text = run("analyze", "--n", str(n), "--a", str(a), "--json")
    assert code == EXIT_OK
    report = analysis.loads(text)
    assert report["structure"]["girth"] == girth
    assert report["transitivity"]["classification"] == kind
    assert report["aut_order"] == order
    assert report["structure"]["bipartite"] == (n % 2 == 0)
    assert report["schema_version"] == analysis.SCHEMA_VERSION


def test_report_round_trips_byte_identically():
    text = run("analyze", "--n", "13", "--a", "3", "--json")[1]
    assert analysis.dumps(json.loads(text)) == text


def test_loads_rejects_unknown_and_missing_fields():
    report = json.loads(run("analyze", "--n", "9", "--a", "4", "--json", "--skip-hamiltonian")[1])
    extra = dict(report, surprise=1)
    with pytest.raises(jsonschema.ValidationError):
        analysis.loads(json.dumps(extra))
    missing = {k: v for k, v in report.items() if k != "claims"}
    with pytest.raises(jsonschema.ValidationError):
        analysis.loads(json.dumps(missing))


def test_analyze_is_deterministic_apart_from_timings():
    a = json.loads(run("analyze", "--n", "19", "--a", "7", "--json")[1])
    b = json.loads(run("analyze", "--n", "19", "--a", "7", "--json")[1])
    a.pop("timings_ms"), b.pop("timings_ms")
    assert a == b


def test_analyze_text_and_out_file(tmp_path):
    dest = tmp_path / "r.json"
    code, text = run("analyze", "--n", "9", "--a", "4", "--out", str(dest))
    assert code == EXIT_OK
    assert "half-transitive" in text and "PASS" in text
    assert analysis.loads(dest.read_text())["aut_order"] == 54


def test_analyze_budget_exhaustion_is_not_fatal():
    code, text = run("analyze", "--n", "63", "--a", "4", "--budget", "3", "--json")
    report = json.loads(text)
    assert code == EXIT_BUDGET
    assert report["automorphism"]["status"] == "budget_exceeded"
    assert report["structure"]["hamiltonian_status"] == "budget_exceeded"
    assert report["structure"]["girth"] == 6


def test_corrupted_report_fails_claims():
    report = analysis.analyze(9, 4, graph=corrupted_graph(9, 4), skip_hamiltonian=True)
    assert analysis.failed_claims(report)


def test_audit_max20_all_pass():
    code, text = run("audit", "--max-n", "20", "--json")
    rows = json.loads(text)
    assert code == EXIT_OK
    assert all(r["status"] == "PASS" for r in rows)
    kinds = {r["n"]: r["classification"] for r in rows}
    assert all((k == "arc-transitive") == (n in (7, 14)) for n, k in kinds.items())


def test_audit_injected_fault():
    code, text = run("audit", "--max-n", "9", "--inject-fault", "9")
    assert code == EXIT_CLAIM
    row9 = next(line for line in text.splitlines() if line.startswith("9 "))
    assert "FAIL" in row9


def test_audit_structural_only_n63():
    rows = run_audit(63, skip_aut=True, skip_hamiltonian=True)
    odd = {r["a"]: r["odd_girth"] for r in rows if r["n"] == 63}
    assert odd[4] == 9 and odd[22] == 21
    assert all(r["status"] != "FAIL" for r in rows)


def test_audit_parallel_matches_serial(monkeypatch):
    serial = run("audit", "--max-n", "21", "--json")[1]
    monkeypatch.setenv("HALFTRANS_THREADS", "3")
    assert run("audit", "--max-n", "21", "--json")[1] == serial
    monkeypatch.setenv("HALFTRANS_THREADS", "many")
    assert run("audit", "--max-n", "21")[0] == EXIT_USAGE


def test_audit_range_limit():
    assert run("audit", "--max-n", "201")[0] == EXIT_USAGE


@pytest.mark.parametrize("n, a, found", [(7, 2, True), (9, 4, False), (13, 3, False)])
def test_probe(n, a, found):
    code, text = run("probe", "--n", str(n), "--a", str(a))
    assert code == EXIT_OK
    assert ("found" in text.splitlines()[0].split(":")[-1]) == found
    assert ("witness:" in text) == found


def test_export_graph6_file(tmp_path):
    dest = tmp_path / "holt.g6"
    code, text = run("export", "--n", "9", "--a", "4", "--format", "graph6", "--out", str(dest))
    assert code == EXIT_OK and "27 vertices" in text and "54 edges" in text
    G = nx.from_graph6_bytes(dest.read_bytes().strip())
    assert G.number_of_nodes() == 27 and G.number_of_edges() == 54


def test_export_dot_and_json():
    dot = run("export", "--n", "7", "--a", "2", "--format", "dot")[1]
    assert sum(1 for line in dot.splitlines() if " -- " in line) == 42
    doc = json.loads(run("export", "--n", "14", "--a", "9", "--format", "json")[1])
    assert (doc["n"], doc["a"], doc["b"]) == (14, 9, 11)


def test_export_errors(tmp_path):
    assert run("export", "--n", "9", "--a", "4", "--format", "gml")[0] == EXIT_USAGE
    missing = os.path.join(str(tmp_path), "no", "such", "dir", "x.g6")
    assert run("export", "--n", "9", "--a", "4", "--out", missing)[0] == EXIT_USAGE


def test_relations_single_and_range():
    code, text = run("relations", "--n", "7", "--a", "2")
    assert code == EXIT_OK
    assert [line.split()[0] for line in text.splitlines() if "HOLDS" in line] == ["3"]
    code, text = run("relations", "--max-n", "60", "--json")
    rows = json.loads(text)
    assert code == EXIT_OK
    assert {r["n"] for r in rows if r["holding"]} == {7, 9, 14, 18}
