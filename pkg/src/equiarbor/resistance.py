"""Exact effective resistances and spanning-tree counts.

A :class:`WeightedNetwork` stores conductances (1/resistance) per unordered
vertex pair.  Parallel edges are merged at construction time by conductance
addition; an absent entry models an edge of infinite resistance, and a zero
resistance is rejected (identify the endpoints instead).  Negative
resistances are legal: some terminal-preserving transformations introduce
them, and the solver simply reports a singular network if a reduced system
degenerates.

Resistance is computed by grounding one probe vertex and solving the
reduced conductance-Laplacian system for a unit injected current.  For an
unweighted connected graph the result equals the ratio of spanning-tree
counts of the edge-identified graph and the graph itself; that tree-ratio
path is kept as an independent oracle, not the default.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import exactalg
from .errors import (
    ConnectivityError,
    InfiniteResistanceError,
    ParameterError,
    SingularNetworkError,
    SingularSystemError,
)
from .exactalg import RationalMatrix, Rational, format_rational, parse_rational
from .graphs import Graph, identify_vertices, require_connected

Pair = tuple[int, int]


def _norm(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class WeightedNetwork:
    """Immutable electrical network over vertices ``0..n-1``."""

    __slots__ = ("_n", "_cond", "_terminals")

    def __init__(self, vertex_count: int, conductances: Mapping[Pair, Rational],
                 terminals: Iterable[int] | None = None):
        if vertex_count < 0:
            raise ParameterError("negative vertex count")
        cond: dict[Pair, Fraction] = {}
        for (u, v), c in conductances.items():
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ParameterError(f"edge {u}-{v} out of range")
            c = Fraction(c)
            if c == 0:
                continue
            key = _norm(u, v)
            if key in cond:
                raise ParameterError(f"duplicate conductance entry for {key}")
            cond[key] = c
        self._n = vertex_count
        self._cond = cond
        if terminals is None:
            self._terminals = None
        else:
            ts = frozenset(terminals)
            for t in ts:
                if not 0 <= t < vertex_count:
                    raise ParameterError(f"terminal {t} out of range")
            self._terminals = ts

    @classmethod
    def from_resistances(cls, vertex_count: int,
                         edges: Iterable[tuple[int, int, Rational | int | str]],
                         terminals: Iterable[int] | None = None
                         ) -> "WeightedNetwork":
        """Build from (u, v, resistance) triples; parallel entries merge by
        conductance addition and cancellations to zero drop the edge."""
        cond: dict[Pair, Fraction] = {}
        for u, v, r in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            r = parse_rational(r) if isinstance(r, str) else Fraction(r)
            if r == 0:
                raise ParameterError(
                    f"zero resistance on {u}-{v}: identify the vertices instead")
            key = _norm(u, v)
            cond[key] = cond.get(key, Fraction(0)) + 1 / r
        return cls(vertex_count,
                   {k: c for k, c in cond.items() if c != 0},
                   terminals)

    @classmethod
    def from_graph(cls, g: Graph, terminals: Iterable[int] | None = None
                   ) -> "WeightedNetwork":
        """Unit resistors, one per edge; multiplicity m merges to conductance m."""
        return cls(g.vertex_count,
                   {e: Fraction(m) for e, m in g.edge_items()},
                   terminals)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def terminals(self) -> frozenset[int] | None:
        return self._terminals

    def conductance(self, u: int, v: int) -> Fraction:
        if u == v:
            return Fraction(0)
        return self._cond.get(_norm(u, v), Fraction(0))

    def resistance_of_edge(self, u: int, v: int) -> Fraction | None:
        c = self.conductance(u, v)
        return None if c == 0 else 1 / c

    def edge_items(self) -> list[tuple[Pair, Fraction]]:
        """(pair, conductance) in lexicographic pair order."""
        return sorted(self._cond.items())

    def neighbors(self, u: int) -> tuple[int, ...]:
        out = []
        for (a, b) in self._cond:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return tuple(sorted(out))

    def is_all_positive(self) -> bool:
        return all(c > 0 for c in self._cond.values())

    def with_resistance(self, u: int, v: int, r: Rational | None
                        ) -> "WeightedNetwork":
        """Copy with the resistance of pair (u, v) replaced (None removes)."""
        if u == v:
            raise ParameterError("cannot set a loop resistance")
        cond = dict(self._cond)
        key = _norm(u, v)
        cond.pop(key, None)
        if r is not None:
            r = Fraction(r)
            if r == 0:
                raise ParameterError("zero resistance: identify the vertices instead")
            cond[key] = 1 / r
        return WeightedNetwork(self._n, cond, self._terminals)

    def without_vertex_edges(self, w: int) -> dict[Pair, Fraction]:
        return {k: c for k, c in self._cond.items() if w not in k}

    def components(self) -> list[frozenset[int]]:
        adj: list[list[int]] = [[] for _ in range(self._n)]
        for (u, v) in self._cond:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = {s}
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedNetwork):
            return NotImplemented
        return (self._n == other._n and self._cond == other._cond
                and self._terminals == other._terminals)

    def __repr__(self) -> str:
        return f"WeightedNetwork({self._n}, {self.edge_items()})"


@dataclass(frozen=True)
class ResistanceResult:
    value: Fraction
    method: str  # "laplacian-solve" | "tree-ratio" | "closed-form"


# ---------------------------------------------------------------------------
# Spanning trees (Matrix-Tree) and the tree-ratio resistance oracle


def spanning_tree_count(g: Graph) -> int:
    """Exact spanning-tree count respecting multiplicities.

    Any principal minor of the Laplacian works; vertex 0 is deleted for a
    deterministic trace.  Disconnected graphs give 0, K1 gives 1.
    """
    n = g.vertex_count
    if n == 0:
        raise ParameterError("spanning trees of the empty graph are undefined")
    if n == 1:
        return 1
    size = n - 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    for (u, v), m in g.edge_items():
        for x in (u, v):
            if x != 0:
                rows[x - 1][x - 1] += m
        if u != 0 and v != 0:
            rows[u - 1][v - 1] -= m
            rows[v - 1][u - 1] -= m
    det = exactalg.determinant(RationalMatrix.from_rows(rows))
    return int(det)


def tree_ratio_resistance(g: Graph, u: int, v: int) -> Fraction:
    """Resistance as tau(G with u,v identified) / tau(G).

    Independent of the Laplacian-solve path; used as a cross-checking
    oracle on unweighted graphs.
    """
    if u == v:
        raise ParameterError("identical probe vertices")
    tau = spanning_tree_count(g)
    if tau == 0:
        raise ConnectivityError("tree-ratio resistance needs a connected graph")
    merged, _ = identify_vertices(g, [{u, v}])
    return Fraction(spanning_tree_count(merged), tau)


def tree_ratio_result(g: Graph, u: int, v: int) -> ResistanceResult:
    return ResistanceResult(tree_ratio_resistance(g, u, v), "tree-ratio")


# ---------------------------------------------------------------------------
# Laplacian solves


def _reduced_laplacian(net: WeightedNetwork, vertices: Sequence[int],
                       grounded: int) -> tuple[RationalMatrix, dict[int, int]]:
    idx = [x for x in vertices if x != grounded]
    pos = {x: i for i, x in enumerate(idx)}
    size = len(idx)
    rows = [[Fraction(0)] * size for _ in range(size)]
    vset = set(vertices)
    for (a, b), c in net.edge_items():
        if a not in vset or b not in vset:
            continue
        for x in (a, b):
            if x != grounded:
                rows[pos[x]][pos[x]] += c
        if a != grounded and b != grounded:
            rows[pos[a]][pos[b]] -= c
            rows[pos[b]][pos[a]] -= c
    return RationalMatrix.from_rows(rows) if size else RationalMatrix(0, 0, ()), pos


def resistance(net: WeightedNetwork, u: int, v: int) -> Fraction:
    """Effective resistance between u and v by grounding v and injecting a
    unit current at u."""
    n = net.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise ParameterError(f"probe vertex out of range 0..{n - 1}")
    if u == v:
        raise ParameterError("identical probe vertices")
    comp = next(c for c in net.components() if u in c)
    if v not in comp:
        raise InfiniteResistanceError(
            f"vertices {u} and {v} lie in different components")
    vertices = sorted(comp)
    lap, pos = _reduced_laplacian(net, vertices, grounded=v)
    rhs = [Fraction(0)] * lap.rows
    rhs[pos[u]] = Fraction(1)
    try:
        x = exactalg.solve(lap, rhs)
    except SingularSystemError as exc:
        raise SingularNetworkError(
            f"reduced system is singular for probe pair ({u}, {v})") from exc
    return x[pos[u]]


def resistance_result(net: WeightedNetwork, u: int, v: int) -> ResistanceResult:
    return ResistanceResult(resistance(net, u, v), "laplacian-solve")


def resistance_matrix(net: WeightedNetwork) -> list[list[Fraction]]:
    """All pairwise resistances from a single factorization.

    Grounds the last vertex and inverts the reduced Laplacian once;
    Omega(u, v) = M[u][u] + M[v][v] - 2 M[u][v] with the grounded row and
    column read as zero.
    """
    n = net.vertex_count
    if n == 0:
        return []
    if not net.is_connected():
        raise ConnectivityError("resistance matrix needs a connected network")
    g = n - 1
    lap, pos = _reduced_laplacian(net, list(range(n)), grounded=g)
    try:
        inv = exactalg.invert(lap) if lap.rows else lap
    except SingularSystemError as exc:
        raise SingularNetworkError("reduced system is singular") from exc

    def m(a: int, b: int) -> Fraction:
        if a == g or b == g:
            return Fraction(0)
        return inv.entry(pos[a], pos[b])

    out = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            val = m(a, a) + m(b, b) - 2 * m(a, b)
            out[a][b] = val
            out[b][a] = val
    return out


# ---------------------------------------------------------------------------
# Foster sum and inverse-weight sums


def foster_sum(g: Graph) -> Fraction:
    """Sum of edge resistances counting multiplicity; equals n - 1 on any
    connected graph."""
    require_connected(g, "foster sum")
    omega = resistance_matrix(WeightedNetwork.from_graph(g))
    total = Fraction(0)
    for (u, v), m in g.edge_items():
        total += m * omega[u][v]
    return total


def w_sum(net: WeightedNetwork, u: int) -> Fraction:
    """Sum of inverse resistances over the edges incident to u.

    Equals the degree on unweighted graphs.
    """
    if not 0 <= u < net.vertex_count:
        raise ParameterError(f"vertex {u} out of range")
    nbrs = net.neighbors(u)
    if not nbrs:
        raise ParameterError(f"vertex {u} has no incident edges")
    return sum((net.conductance(u, v) for v in nbrs), Fraction(0))


# ---------------------------------------------------------------------------
# Network JSON format: {"vertices": n, "terminals": [...],
#                       "edges": [{"u":, "v":, "r": "p/q"}]}


def network_to_json_dict(net: WeightedNetwork) -> dict:
    edges = []
    for (u, v), c in net.edge_items():
        edges.append({"u": u, "v": v, "r": format_rational(1 / c)})
    return {
        "vertices": net.vertex_count,
        "terminals": sorted(net.terminals) if net.terminals is not None else [],
        "edges": edges,
    }


def network_from_json_dict(data: Mapping) -> WeightedNetwork:
    try:
        n = int(data["vertices"])
        raw_edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"bad network JSON: {exc}") from exc
    terminals = data.get("terminals") or None
    edges = []
    for e in raw_edges:
        edges.append((int(e["u"]), int(e["v"]), parse_rational(str(e["r"]))))
    return WeightedNetwork.from_resistances(n, edges, terminals)


def load_network(path: str) -> WeightedNetwork:
    with open(path, "r", encoding="utf-8") as fh:
        return network_from_json_dict(json.load(fh))


def dump_network(net: WeightedNetwork) -> str:
    return json.dumps(network_to_json_dict(net), indent=2) + "\n"
