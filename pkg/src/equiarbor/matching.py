"""Perfect-matching existence for even-order regular equiarboreal graphs.

The maximum matching comes from networkx's blossom implementation (general
graphs, exact integer arithmetic for unit weights); bipartite-only methods
would miss the non-bipartite catalog members.  Returned matchings are always
re-verified by a cover check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .errors import VerificationError
from .graphs import Graph

Edge = tuple[int, int]


@dataclass(frozen=True)
class MatchingResult:
    has_perfect: bool
    matching: Optional[tuple[Edge, ...]]


def maximum_matching(g: Graph) -> tuple[Edge, ...]:
    """A maximum-cardinality matching, as sorted (u, v) pairs with u < v."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.vertex_count))
    nxg.add_edges_from(e for e, _ in g.edge_items())
    pairs = nx.max_weight_matching(nxg, maxcardinality=True)
    return tuple(sorted((min(u, v), max(u, v)) for u, v in pairs))


def has_perfect_matching(g: Graph) -> MatchingResult:
    """Exact decision; odd orders are rejected without running the search."""
    if g.vertex_count % 2 == 1:
        return MatchingResult(False, None)
    matching = maximum_matching(g)
    if 2 * len(matching) != g.vertex_count:
        return MatchingResult(False, None)
    covered: set[int] = set()
    for u, v in matching:
        if u in covered or v in covered or not g.has_edge(u, v):
            raise VerificationError(f"matching fails the cover check at {u}-{v}")
        covered.update((u, v))
    if covered != set(range(g.vertex_count)):
        raise VerificationError("matching does not cover every vertex")
    return MatchingResult(True, matching)
