import json
import subprocess
import sys

import pytest

from cyclemeet.cli import main
from cyclemeet.corpus import two_triangles_shared_vertex
from cyclemeet.cycles import enumerate_longest_cycles
from cyclemeet.graphs import (
    complete_graph,
    cycle_graph,
    graph_to_graph6,
    petersen_graph,
    wheel_graph,
)
from cyclemeet.harness import (
    CorpusSpec,
    reports_to_json,
    run_corpus,
    verify_babai,
    verify_devos,
    verify_smith,
    verify_thm14,
)


def test_verify_babai():
    assert verify_babai(cycle_graph(9)).status == "pass"
    assert verify_babai(petersen_graph()).status == "pass"
    out = verify_babai(wheel_graph(6))
    assert out.status == "skipped"  # hub breaks transitivity


def test_verify_smith():
    out = verify_smith(complete_graph(5))
    assert out.status == "pass" and out.lhs == 5 and out.rhs == 4
    pet = verify_smith(petersen_graph())
    assert pet.status == "pass" and pet.lhs == 8 and pet.rhs == 3
    w6 = verify_smith(wheel_graph(6))
    assert w6.status == "pass" and w6.lhs >= 3


def test_verify_thm14():
    g = two_triangles_shared_vertex()
    cs = enumerate_longest_cycles(g)
    x, y = cs.cycles[0], cs.cycles[1]
    out = verify_thm14(g, x, y)
    assert out.status == "pass" and out.lhs == 1
    same = verify_thm14(g, x, x)
    assert same.status == "pass"


def test_verify_devos():
    g = cycle_graph(7)
    out = verify_devos(g, frozenset({0}), 1)
    assert out.status == "pass" and out.lhs == 7 and out.rhs == 7.0
    allv = verify_devos(petersen_graph(), frozenset(range(10)), 3)
    assert allv.status == "pass"
    notrans = verify_devos(petersen_graph(), frozenset({0}), 1)
    assert notrans.status == "skipped"


def test_run_corpus_smoke_all_pass():
    spec = CorpusSpec.parse("smoke", seed=1)
    reports = run_corpus(spec, suite="all")
    assert reports
    assert all(r.worst_status() in ("pass", "observed", "skipped") for r in reports)


def test_run_corpus_exhaustive6_all_theorem_checks_pass():
    spec = CorpusSpec.parse("exhaustive6", seed=0)
    reports = run_corpus(spec, suite="all")
    assert len(reports) == 143
    assert all(r.worst_status() != "fail" for r in reports)
    assert not any(r.worst_status() == "inconclusive" for r in reports)


def test_run_corpus_seeded_circulants_pass():
    spec = CorpusSpec.parse("circulants:count=50,max_n=24", seed=5)
    reports = run_corpus(spec, suite="babai")
    assert len(reports) == 50
    assert all(r.worst_status() == "pass" for r in reports)
    ratios = [r.observations.get("connectivity_vs_two_thirds_degree") for r in reports]
    assert all(val is not None for val in ratios)


def test_reports_serialization_deterministic():
    spec = CorpusSpec.parse("smoke", seed=42)
    a = reports_to_json(run_corpus(spec, "all"), spec, "all")
    b = reports_to_json(run_corpus(spec, "all"), spec, "all")
    assert a == b
    payload = json.loads(a)
    assert payload["summary"]["failed"] == 0


def test_corpus_spec_parsing():
    spec = CorpusSpec.parse("circulants:count=5,max_n=12", seed=3)
    assert spec.kind == "circulants" and spec.param("count", "0") == "5"
    with pytest.raises(ValueError):
        CorpusSpec.parse("circulants:count")
    with pytest.raises(ValueError):
        from cyclemeet.harness import corpus_instances

        corpus_instances(CorpusSpec.parse("nonsense"))


# -- CLI ----------------------------------------------------------------------


def test_cli_gen_and_cycles(tmp_path):
    out = tmp_path / "g.g6"
    code = main(["gen", "circulant", "--n", "5", "--conn", "1,4"])
    assert code == 0


def test_cli_pipeline(tmp_path, capsys):
    main(["gen", "circulant", "--n", "5", "--conn", "1,4"])
    g6 = capsys.readouterr().out.strip()
    path = tmp_path / "c5.g6"
    path.write_text(g6 + "\n")
    assert main(["cycles", "--in", str(path), "--enumerate"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["length"] == 5 and payload["count"] == 1
    assert main(["intersect", "--in", str(path)]) == 0


def test_cli_separator_and_auxgraph(tmp_path, capsys):
    g = petersen_graph()
    path = tmp_path / "pet.g6"
    path.write_text(graph_to_graph6(g) + "\n")
    cs = enumerate_longest_cycles(g)
    x = ",".join(map(str, cs.cycles[0].vertices))
    y = ",".join(map(str, cs.cycles[1].vertices))
    assert main(["separator", "--in", str(path), "--x", x, "--y", y]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["bound_satisfied"] is True
    assert main(["auxgraph", "--in", str(path), "--x", x, "--y", y]) == 0
    aux = json.loads(capsys.readouterr().out)
    assert "type_census" in aux and aux["type_census"]["(0,0)"] == 0
    assert main(["certify", "--in", str(path), "--x", x, "--y", y]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["improved"] is False


def test_cli_usage_errors(tmp_path, capsys):
    assert main(["cycles", "--in", str(tmp_path / "missing.g6")]) == 3
    capsys.readouterr()
    assert main(["gen", "circulant", "--n", "7", "--conn", "1"]) == 3


def test_cli_cycles_budget_inconclusive(tmp_path, capsys):
    from cyclemeet.graphs import graph_to_graph6

    path = tmp_path / "k9.g6"
    path.write_text(graph_to_graph6(complete_graph(9)) + "\n")
    assert main(["cycles", "--in", str(path), "--budget", "3"]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert "error" in payload and "best_length_lower_bound" in payload


def test_cli_auxgraph_disjoint_cycles_fails(tmp_path, capsys):
    from cyclemeet.graphs import Graph, graph_to_graph6

    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    path = tmp_path / "two.g6"
    path.write_text(graph_to_graph6(g) + "\n")
    assert main(["auxgraph", "--in", str(path), "--x", "0,1,2", "--y", "3,4,5"]) == 1
    assert "empty intersection" in capsys.readouterr().out


def test_cli_verify_exit_codes(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--suite", "babai", "--corpus", "smoke", "--seed", "1",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["suite"] == "babai"
    # inconclusive from an impossible budget
    code = main(["verify", "--suite", "smith", "--corpus", "smoke", "--seed", "1",
                 "--budget", "2", "--out", str(out)])
    assert code == 2


def test_cli_verify_determinism_bytes(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["verify", "--suite", "all", "--corpus", "smoke", "--seed", "42",
                 "--out", str(a)]) == 0
    assert main(["verify", "--suite", "all", "--corpus", "smoke", "--seed", "42",
                 "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_entrypoint_subprocess(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "cyclemeet.cli", "gen", "random", "--n", "8", "--p",
         "0.5", "--seed", "3"],
        capture_output=True, text=True, check=True,
    )
    assert result.stdout.strip()


def test_cli_cayley_from_file(tmp_path, capsys):
    grp = tmp_path / "grp.txt"
    grp.write_text("cyclic 6: 1,5\n")
    assert main(["gen", "cayley", "--file", str(grp)]) == 0
    g6 = capsys.readouterr().out.strip()
    from cyclemeet.graphs import graph_from_graph6

    assert graph_from_graph6(g6) == cycle_graph(6)
