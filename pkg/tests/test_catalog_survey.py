"""Catalog manifests and the batch survey."""

import json

import pytest

from equiarbor.catalog import (
    GraphCatalogEntry,
    default_catalog,
    default_manifest_json,
    load_manifest,
)
from equiarbor.errors import ParameterError
from equiarbor.graphs import generate
from equiarbor.survey import survey


def test_default_catalog_contents():
    entries = default_catalog()
    assert len(entries) >= 12
    names = {e.name for e in entries}
    for required in ("C5", "C6", "Petersen", "H(2,2)", "H(2,3)", "H(3,2)",
                     "J(4,2)", "J(5,2)", "Q3", "Q4", "TriangularPrism"):
        assert required in names
    prism = next(e for e in entries if e.name == "TriangularPrism")
    assert prism.negative_control


def test_default_manifest_roundtrip():
    loaded = load_manifest(default_manifest_json())
    assert [e.name for e in loaded] == [e.name for e in default_catalog()]
    assert all(a.graph == b.graph
               for a, b in zip(loaded, default_catalog()))


def test_manifest_alternate_formats():
    manifest = json.dumps([
        {"name": "K4-g6", "format": "graph6", "payload": "C~",
         "expected_regularity": 3},
        {"name": "path", "format": "edge-list", "payload": "3 2\n0 1\n1 2\n"},
    ])
    entries = load_manifest(manifest)
    assert entries[0].graph == generate("complete", (4,))
    assert entries[0].provenance == "graph6"
    assert entries[1].graph.edge_count == 2


def test_manifest_regularity_mismatch():
    manifest = json.dumps([
        {"name": "bad", "format": "graph6", "payload": "C~",
         "expected_regularity": 4},
    ])
    with pytest.raises(ParameterError):
        load_manifest(manifest)


def test_entry_provenance_validation():
    with pytest.raises(ParameterError):
        GraphCatalogEntry("x", generate("cycle", (4,)), provenance="magic")


def test_survey_default_catalog_passes():
    report = survey(default_catalog())
    assert report.failed == 0
    summary = report.summary
    assert summary["total"] == len(default_catalog())
    assert summary["passed"] + summary["skipped"] == summary["total"]

    by_name = {e.graph_name: e for e in report.entries}
    prism = by_name["TriangularPrism"]
    assert prism.status == "skipped"
    assert prism.equiarboreal is False
    assert prism.main_theorem == "skipped"
    assert "negative control" in prism.notes
    assert "8/15" in prism.notes and "3/5" in prism.notes

    petersen = by_name["Petersen"]
    assert petersen.status == "passed"
    assert petersen.main_theorem == "pass"
    assert petersen.matching == "pass"
    assert petersen.omega is not None

    star = by_name["S5"]
    assert star.equiarboreal is True  # trees are equiarboreal
    assert star.main_theorem == "skipped"  # but not regular


def test_survey_empty_catalog():
    report = survey([])
    assert report.summary == {"total": 0, "passed": 0, "failed": 0, "skipped": 0}
    assert report.failed == 0


def test_survey_concurrent_matches_sequential():
    catalog = default_catalog()
    sequential = survey(catalog, jobs=1)
    threaded = survey(catalog, jobs=4)
    assert sequential.to_json() == threaded.to_json()


def test_survey_deterministic_flag_controls_timestamp():
    catalog = default_catalog()[:2]
    with_stamp = survey(catalog, deterministic=False)
    without = survey(catalog, deterministic=True)
    assert with_stamp.timestamp is not None
    assert "timestamp" not in without.to_json_dict()
    assert survey(catalog).to_json() == without.to_json()


def test_survey_handles_unexpectedly_passing_negative_control():
    # A negative control that is actually equiarboreal must fail the run.
    entry = GraphCatalogEntry("fake-control", generate("cycle", (5,)),
                              negative_control=True)
    report = survey([entry])
    assert report.failed == 1
    assert report.entries[0].status == "failed"


def test_survey_rational_serialization():
    report = survey([GraphCatalogEntry("Petersen", generate("petersen"))])
    data = report.to_json_dict()
    assert data["entries"][0]["omega"] == "3/5"
    assert data["entries"][0]["lambda"] == 3


def test_survey_report_validates_against_published_schema():
    import jsonschema

    from equiarbor.survey import SURVEY_REPORT_SCHEMA

    report = survey(default_catalog())
    jsonschema.validate(report.to_json_dict(), SURVEY_REPORT_SCHEMA)
    stamped = survey(default_catalog()[:1], deterministic=False)
    jsonschema.validate(stamped.to_json_dict(), SURVEY_REPORT_SCHEMA)
