"""The command-line surface: grammar, outputs, exit codes."""

import io
import json

from equiarbor.cli import run_command
from equiarbor.graphs import generate
from equiarbor.resistance import WeightedNetwork, dump_network
from equiarbor.schemes import format_scheme_table, scheme_from_distance_partition


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_fxy_prints_exact_fraction():
    code, out, _ = run(["fxy", "5", "1", "1"])
    assert code == 0
    assert out.strip() == "3/7"


def test_fxy_domain_error_is_usage():
    code, _, err = run(["fxy", "7", "7", "1"])
    assert code == 2
    assert "error" in err


def test_analyze_petersen():
    code, out, _ = run(["analyze", "--family", "petersen"])
    assert code == 0
    data = json.loads(out)
    assert data == {"equiarboreal": True, "omega": "3/5", "witness": None,
                    "godsilBound": "5/3", "lambda": 3}


def test_analyze_negative_control():
    code, out, _ = run(["analyze", "--family", "triangular_prism"])
    assert code == 0
    data = json.loads(out)
    assert data["equiarboreal"] is False
    assert data["witness"] == {"edgeA": [0, 1], "edgeB": [0, 3],
                               "valueA": "8/15", "valueB": "3/5"}
    assert data["godsilBound"] is None


def test_resist_network_file(tmp_path):
    from fractions import Fraction

    net = WeightedNetwork.from_resistances(4, [
        (0, 2, 1), (0, 3, 1), (1, 3, Fraction(1, 2)),
        (0, 1, Fraction(1, 3)), (2, 3, Fraction(1, 4))])
    path = tmp_path / "net.json"
    path.write_text(dump_network(net))
    code, out, _ = run(["resist", str(path), "0", "2"])
    assert code == 0
    assert out.strip() == "31/75"


def test_cut_enumerate_classify():
    code, out, _ = run(["cut", "--family", "petersen",
                        "--enumerate", "--classify"])
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == 3
    assert len(data["cuts"]) == 10
    assert all(c["isTrivial"] for c in data["classifications"])
    assert data["theorem"]["passed"] is True


def test_cut_non_regular_graph_marks_theorem_inapplicable():
    code, out, _ = run(["cut", "--family", "star", "--params", "5"])
    assert code == 0
    data = json.loads(out)
    assert data["lambda"] == 1
    assert data["theorem"]["applicable"] is False


def test_transform_bipartite():
    code, out, err = run(["transform", "--bipartite", "2", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["vertices"] == 7
    assert {"u": 5, "v": 6, "r": "-1/6"} in data["edges"]
    assert "bipartite-to-double-star" in err


def test_transform_eliminate(tmp_path):
    net = WeightedNetwork.from_resistances(
        3, [(0, 1, 1), (1, 2, 1)], terminals=(0, 2))
    path = tmp_path / "path.json"
    path.write_text(dump_network(net))
    code, out, err = run(["transform", str(path), "--eliminate", "1"])
    assert code == 0
    data = json.loads(out)
    assert {"u": 0, "v": 2, "r": "2"} in data["edges"]
    assert "series" in err


def test_scheme_from_family_with_godsil():
    code, out, _ = run(["scheme", "--family", "petersen", "--verify-godsil"])
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is True
    assert data["classCount"] == 2
    assert data["godsil"]["passed"] is True
    assert len(data["godsil"]["classes"]) == 2


def test_scheme_table_file(tmp_path):
    scheme = scheme_from_distance_partition(generate("cycle", (5,)))
    path = tmp_path / "c5.scheme"
    path.write_text(format_scheme_table(scheme))
    code, out, _ = run(["scheme", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is True
    assert data["intersectionNumbers"][1][1][2] == 1


def test_scheme_invalid_reports_witness():
    code, out, _ = run(["scheme", "--family", "triangular_prism"])
    assert code == 0  # reporting invalidity is a result, not a failure
    data = json.loads(out)
    assert data["valid"] is False
    assert data["violation"]["axiom"] == "intersection"
    # With verification requested, the invalid scheme is a counterexample.
    code, _, _ = run(["scheme", "--family", "triangular_prism",
                      "--verify-godsil"])
    assert code == 1


def test_matching_command():
    code, out, _ = run(["matching", "--family", "cycle", "--params", "5"])
    assert code == 0
    assert json.loads(out) == {"hasPerfect": False, "matching": None}
    code, out, _ = run(["matching", "--family", "petersen"])
    data = json.loads(out)
    assert data["hasPerfect"] is True
    assert len(data["matching"]) == 5


def test_verify_claims_small_range():
    code, out, _ = run(["verify", "claims", "--k-range", "7..9"])
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert [e["k"] for e in data["perK"]] == [7, 8, 9]
    assert all(e["doubleStarThreshold"] and e["denominatorPositivity"]
               and e["reducedNetworkGrid"] for e in data["perK"])


def test_survey_default_exit_zero(tmp_path, monkeypatch):
    monkeypatch.delenv("EQUIARBOR_CATALOG", raising=False)
    code, out, err = run(["survey"])
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["failed"] == 0
    assert "survey:" in err


def test_survey_env_manifest(tmp_path, monkeypatch):
    manifest = tmp_path / "cat.json"
    manifest.write_text(json.dumps([
        {"name": "C5", "format": "generator",
         "payload": {"family": "cycle", "params": [5]}},
    ]))
    monkeypatch.setenv("EQUIARBOR_CATALOG", str(manifest))
    code, out, _ = run(["survey"])
    assert code == 0
    data = json.loads(out)
    assert [e["graphName"] for e in data["entries"]] == ["C5"]
    assert data["entries"][0]["omega"] == "4/5"


def test_survey_empty_manifest(tmp_path):
    manifest = tmp_path / "empty.json"
    manifest.write_text("[]")
    code, out, _ = run(["survey", str(manifest)])
    assert code == 0
    assert json.loads(out)["summary"]["total"] == 0


def test_survey_unreadable_entry_fails_but_continues(tmp_path):
    manifest = tmp_path / "cat.json"
    manifest.write_text(json.dumps([
        {"name": "ok", "format": "generator",
         "payload": {"family": "cycle", "params": [5]}},
        {"name": "broken", "format": "graph6", "payload": "C~",
         "expected_regularity": 4},
    ]))
    code, out, _ = run(["survey", str(manifest)])
    assert code == 1
    data = json.loads(out)
    statuses = {e["graphName"]: e for e in data["entries"]}
    assert statuses["ok"]["equiarboreal"] is True
    assert "unreadable entry" in statuses["broken"]["notes"]
    assert data["summary"]["failed"] == 1


def test_survey_reruns_are_byte_identical():
    _, first, _ = run(["--deterministic", "survey"])
    _, second, _ = run(["--deterministic", "survey"])
    assert first == second
    # Without the flag the only permitted difference is the timestamp.
    _, stamped_a, _ = run(["survey"])
    _, stamped_b, _ = run(["survey"])
    a, b = json.loads(stamped_a), json.loads(stamped_b)
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b


def test_graph_file_sniffing(tmp_path):
    from equiarbor.graphs import emit_graph6, format_edge_list

    g6 = tmp_path / "petersen.g6"
    g6.write_text(emit_graph6(generate("petersen")) + "\n")
    code, out, _ = run(["analyze", str(g6)])
    assert code == 0
    assert json.loads(out)["omega"] == "3/5"

    # The same graph through the multigraph edge-list format.
    el = tmp_path / "petersen.edges"
    el.write_text(format_edge_list(generate("petersen")))
    code, out2, _ = run(["analyze", str(el)])
    assert code == 0
    assert json.loads(out2) == json.loads(out)


def test_scheme_from_distance_file(tmp_path):
    from equiarbor.graphs import emit_graph6

    path = tmp_path / "c5.g6"
    path.write_text(emit_graph6(generate("cycle", (5,))))
    code, out, _ = run(["scheme", "--from-distance", str(path)])
    assert code == 0
    assert json.loads(out)["classCount"] == 2


def test_usage_errors_exit_two():
    code, _, _ = run(["nosuch"])
    assert code == 2
    code, _, _ = run(["fxy", "5", "1"])
    assert code == 2
    code, _, _ = run([])
    assert code == 2


def test_missing_file_exits_two(tmp_path):
    code, _, err = run(["resist", str(tmp_path / "missing.json"), "0", "1"])
    assert code == 2
    assert "error" in err
