"""The verification catalog: named graphs with provenance.

A manifest is a JSON array of ``{"name", "format", "payload"}`` entries,
where format is one of ``generator`` (payload ``{"family", "params"}``),
``graph6`` (payload: one graph6 line) or ``edge-list`` (payload: the
multigraph text format).  Optional keys: ``expected_regularity`` (checked at
load time) and ``negative_control`` (the entry is expected to violate the
equiarboreality hypothesis; the survey reports it as a documented skip, not
a failure).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import ParameterError
from .graphs import Graph, generate, parse_edge_list, parse_graph6

PROVENANCES = ("generator", "graph6", "edge-list")


@dataclass(frozen=True)
class GraphCatalogEntry:
    name: str
    graph: Graph
    expected_regularity: Optional[int] = None
    provenance: str = "generator"
    negative_control: bool = False

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ParameterError(f"unknown provenance {self.provenance!r}")
        if self.expected_regularity is not None:
            k = self.graph.is_regular()
            if k != self.expected_regularity:
                raise ParameterError(
                    f"{self.name}: expected {self.expected_regularity}-regular, "
                    f"found degree sequence with regularity {k}")


def entry_from_manifest(item: dict) -> GraphCatalogEntry:
    try:
        name = item["name"]
        fmt = item["format"]
        payload = item["payload"]
    except KeyError as exc:
        raise ParameterError(f"manifest entry missing key {exc}") from exc
    if fmt == "generator":
        graph = generate(payload["family"], payload.get("params", []))
    elif fmt == "graph6":
        graph = parse_graph6(payload)
    elif fmt == "edge-list":
        graph = parse_edge_list(payload)
    else:
        raise ParameterError(f"unknown manifest format {fmt!r}")
    return GraphCatalogEntry(
        name=name,
        graph=graph,
        expected_regularity=item.get("expected_regularity"),
        provenance=fmt,
        negative_control=bool(item.get("negative_control", False)),
    )


def load_manifest(text: str) -> list[GraphCatalogEntry]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ParameterError("manifest must be a JSON array")
    return [entry_from_manifest(item) for item in data]


def load_manifest_file(path: str) -> list[GraphCatalogEntry]:
    with open(path, "r", encoding="utf-8") as fh:
        return load_manifest(fh.read())


_DEFAULT_ENTRIES: list[tuple] = [
    # (name, family, params, expected_regularity, negative_control)
    ("K4", "complete", (4,), 3, False),
    ("K5", "complete", (5,), 4, False),
    ("K33", "complete_bipartite", (3, 3), 3, False),
    ("C5", "cycle", (5,), 2, False),
    ("C6", "cycle", (6,), 2, False),
    ("C7", "cycle", (7,), 2, False),
    ("S5", "star", (5,), None, False),
    ("S23", "double_star", (2, 3), None, False),
    ("Petersen", "petersen", (), 3, False),
    ("TriangularPrism", "triangular_prism", (), 3, True),
    ("Q3", "hypercube", (3,), 3, False),
    ("Q4", "hypercube", (4,), 4, False),
    ("H(2,2)", "hamming", (2, 2), 2, False),
    ("H(2,3)", "hamming", (2, 3), 4, False),
    ("H(3,2)", "hamming", (3, 2), 3, False),
    ("J(4,2)", "johnson", (4, 2), 4, False),
    ("J(5,2)", "johnson", (5, 2), 6, False),
]

#: Names of the catalog members whose distance partitions form schemes,
#: feeding the colour-class verification suite.
SCHEME_SOURCE_NAMES = (
    "C5", "C6", "Petersen", "H(2,2)", "H(2,3)", "H(3,2)",
    "J(4,2)", "J(5,2)", "Q3", "Q4",
)


def default_catalog() -> list[GraphCatalogEntry]:
    entries = []
    for name, family, params, reg, neg in _DEFAULT_ENTRIES:
        entries.append(GraphCatalogEntry(
            name=name,
            graph=generate(family, params),
            expected_regularity=reg,
            provenance="generator",
            negative_control=neg,
        ))
    return entries


def default_manifest_json() -> str:
    items = []
    for name, family, params, reg, neg in _DEFAULT_ENTRIES:
        item: dict = {
            "name": name,
            "format": "generator",
            "payload": {"family": family, "params": list(params)},
        }
        if reg is not None:
            item["expected_regularity"] = reg
        if neg:
            item["negative_control"] = True
        items.append(item)
    return json.dumps(items, indent=2) + "\n"
