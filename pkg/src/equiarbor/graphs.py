"""Multigraph representation, graph6 codec, and the generator families
used by the verification catalog.

Vertices are always ``0..n-1``.  The core type is a multigraph because
vertex identification produces parallel edges; simple graphs are the
special case where every multiplicity is 1.

Generator labelings (stable, so witnesses in reports are reproducible):

* ``complete(n)``: all pairs.
* ``complete_bipartite(m, n)``: left part ``0..m-1``, right part ``m..m+n-1``.
* ``cycle(n)``: ``i -- i+1 mod n``.
* ``star(n)``: centre 0, leaves ``1..n-1`` (star of order n).
* ``double_star(m, n)``: centres 0 and ``m+1``; leaves ``1..m`` and
  ``m+2..m+n+1``; centres joined by an edge.
* ``hypercube(d)``: vertices are the integers ``0..2^d-1`` read as bit
  strings; edges flip one bit.
* ``petersen()``: outer cycle ``0..4``, inner pentagram ``5..9``, spokes
  ``i -- i+5``.
* ``triangular_prism()``: triangles ``{0,1,2}`` and ``{3,4,5}``, rungs
  ``i -- i+3``.
* ``hamming(d, q)``: vertices are length-d base-q digit strings in
  lexicographic order; edges join strings at Hamming distance 1.
* ``johnson(n, k)``: vertices are the k-subsets of ``{0..n-1}`` in
  lexicographic order; edges join subsets meeting in k-1 points.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import ConnectivityError, Graph6ParseError, ParameterError

Edge = tuple[int, int]

_GRAPH6_MAX_N = 258047


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected multigraph with integer edge multiplicities."""

    __slots__ = ("_n", "_edges", "_degrees")

    def __init__(self, vertex_count: int,
                 edges: Iterable[Edge | tuple[int, int, int]] = ()):
        if vertex_count < 0:
            raise ParameterError("negative vertex count")
        acc: dict[Edge, int] = {}
        for e in edges:
            if len(e) == 3:
                u, v, mult = e  # type: ignore[misc]
            else:
                u, v = e  # type: ignore[misc]
                mult = 1
            if mult < 1:
                raise ParameterError(f"multiplicity {mult} < 1 on edge {u}-{v}")
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ParameterError(f"edge {u}-{v} out of range 0..{vertex_count - 1}")
            key = _norm_edge(u, v)
            acc[key] = acc.get(key, 0) + mult
        self._n = vertex_count
        self._edges = acc
        degrees = [0] * vertex_count
        for (u, v), m in acc.items():
            degrees[u] += m
            degrees[v] += m
        self._degrees = tuple(degrees)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        """Total number of edges counting multiplicity."""
        return sum(self._edges.values())

    @property
    def distinct_edge_count(self) -> int:
        return len(self._edges)

    def edge_items(self) -> list[tuple[Edge, int]]:
        """(edge, multiplicity) pairs in lexicographic edge order."""
        return sorted(self._edges.items())

    def edge_list(self) -> list[Edge]:
        """Edges in lexicographic order, repeated per multiplicity."""
        out: list[Edge] = []
        for e, m in self.edge_items():
            out.extend([e] * m)
        return out

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._edges.get(_norm_edge(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def degree(self, u: int) -> int:
        return self._degrees[u]

    def neighbors(self, u: int) -> tuple[int, ...]:
        out = []
        for (a, b) in self._edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return tuple(sorted(out))

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for m in self._edges.values())

    def is_regular(self) -> int | None:
        """The common degree, or None if the graph is not regular."""
        if self._n == 0:
            return None
        k = self._degrees[0]
        return k if all(d == k for d in self._degrees) else None

    def components(self) -> list[frozenset[int]]:
        seen = [False] * self._n
        adj: list[list[int]] = [[] for _ in range(self._n)]
        for (u, v) in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        comps = []
        for start in range(self._n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = {start}
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
        if self._n <= 1:
            return True
        return len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"Graph({self._n}, {self.edge_items()})"


# ---------------------------------------------------------------------------
# Generators


def _complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete(n) needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def _complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ParameterError("complete_bipartite(m, n) needs m, n >= 1")
    return Graph(m + n, ((u, m + v) for u in range(m) for v in range(n)))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle(n) needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def _star(n: int) -> Graph:
    if n < 2:
        raise ParameterError("star(n) needs n >= 2")
    return Graph(n, ((0, i) for i in range(1, n)))


def _double_star(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ParameterError("double_star(m, n) needs m, n >= 1")
    edges = [(0, i) for i in range(1, m + 1)]
    edges.append((0, m + 1))
    edges.extend((m + 1, m + 1 + j) for j in range(1, n + 1))
    return Graph(m + n + 2, edges)


def _hypercube(d: int) -> Graph:
    if d < 1:
        raise ParameterError("hypercube(d) needs d >= 1")
    return Graph(1 << d, ((v, v ^ (1 << b)) for v in range(1 << d)
                          for b in range(d) if v < v ^ (1 << b)))


def _petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, 5 + (i + 2) % 5))
    return Graph(10, edges)


def _triangular_prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])


def _hamming(d: int, q: int) -> Graph:
    if d < 1 or q < 2:
        raise ParameterError("hamming(d, q) needs d >= 1 and q >= 2")
    n = q ** d
    # Vertex v encodes the digit string of v in base q, most significant
    # digit first, which is exactly lexicographic order on strings.
    def digits(v: int) -> tuple[int, ...]:
        out = []
        for _ in range(d):
            out.append(v % q)
            v //= q
        return tuple(reversed(out))

    words = [digits(v) for v in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if sum(1 for a, b in zip(words[u], words[v]) if a != b) == 1:
                edges.append((u, v))
    return Graph(n, edges)


def _johnson(n: int, k: int) -> Graph:
    if n < 1 or k < 1 or k > n:
        raise ParameterError(f"johnson({n}, {k}) needs 1 <= k <= n")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = []
    for i in range(len(subsets)):
        for j in range(i + 1, len(subsets)):
            if len(subsets[i] & subsets[j]) == k - 1:
                edges.append((i, j))
    return Graph(len(subsets), edges)


_FAMILIES = {
    "complete": (_complete, 1),
    "complete_bipartite": (_complete_bipartite, 2),
    "cycle": (_cycle, 1),
    "star": (_star, 1),
    "double_star": (_double_star, 2),
    "hypercube": (_hypercube, 1),
    "petersen": (_petersen, 0),
    "triangular_prism": (_triangular_prism, 0),
    "hamming": (_hamming, 2),
    "johnson": (_johnson, 2),
}


def generate(family: str, params: Sequence[int] = ()) -> Graph:
    """Build the canonical labeled member of a generator family."""
    if family not in _FAMILIES:
        raise ParameterError(f"unknown family {family!r}; "
                             f"known: {sorted(_FAMILIES)}")
    fn, arity = _FAMILIES[family]
    if len(params) != arity:
        raise ParameterError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def family_names() -> list[str]:
    return sorted(_FAMILIES)


# ---------------------------------------------------------------------------
# graph6 codec


def _g6_read_n(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed) from a graph6 header."""
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    b0 = data[0]
    if b0 != 126:  # '~'
        if not 63 <= b0 <= 126:
            raise Graph6ParseError(f"bad header byte {b0}", 0)
        return b0 - 63, 1
    if len(data) < 4:
        raise Graph6ParseError("truncated extended header", len(data))
    if data[1] == 126:
        raise Graph6ParseError("graphs above 258047 vertices are unsupported", 1)
    n = 0
    for i in range(1, 4):
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"bad header byte {b}", i)
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a simple graph (bit-exact round trip)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii", errors="replace")
    n, pos = _g6_read_n(data)
    if n > _GRAPH6_MAX_N:
        raise Graph6ParseError(f"vertex count {n} above supported range", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6ParseError(
            f"bit vector needs {nbytes} bytes, found {len(data) - pos}",
            len(data))
    bits: list[int] = []
    for i in range(nbytes):
        b = data[pos + i]
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"bad body byte {b}", pos + i)
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    for i in range(nbits, len(bits)):
        if bits[i]:
            raise Graph6ParseError("nonzero padding bits", pos + nbytes - 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a simple graph as one graph6 line."""
    if not g.is_simple:
        raise ParameterError("graph6 cannot encode multiplicities")
    n = g.vertex_count
    if n > _GRAPH6_MAX_N:
        raise ParameterError(f"vertex count {n} above supported range")
    if n <= 62:
        header = [n + 63]
    else:
        header = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return bytes(header + body).decode("ascii")


# ---------------------------------------------------------------------------
# Multigraph edge-list text format: header "n m", then m lines "u v";
# repeated lines encode multiplicity (graph6 cannot carry multiplicities).


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ParameterError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParameterError(f"bad edge-list header {lines[0]!r}; expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParameterError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParameterError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Vertex identification (quotient multigraph)


def identify_vertices(g: Graph, groups: Sequence[Iterable[int]]
                      ) -> tuple[Graph, tuple[int, ...]]:
    """Merge each group of vertices into one, deleting loops and keeping
    parallel edges as multiplicities.

    Returns the quotient graph and the old-to-new relabeling.  Each group
    collapses onto the slot of its smallest member; surviving labels keep
    their relative order.
    """
    group_sets = [frozenset(grp) for grp in groups]
    seen: set[int] = set()
    for grp in group_sets:
        if not grp:
            raise ParameterError("empty identification group")
        for v in grp:
            if not 0 <= v < g.vertex_count:
                raise ParameterError(f"vertex {v} out of range")
            if v in seen:
                raise ParameterError(f"vertex {v} appears in two groups")
            seen.add(v)
    rep: dict[int, int] = {}
    for grp in group_sets:
        r = min(grp)
        for v in grp:
            rep[v] = r
    survivors = sorted({rep.get(v, v) for v in range(g.vertex_count)})
    new_index = {old: i for i, old in enumerate(survivors)}
    mapping = tuple(new_index[rep.get(v, v)] for v in range(g.vertex_count))
    edges = []
    for (u, v), mult in g.edge_items():
        a, b = mapping[u], mapping[v]
        if a != b:
            edges.append((a, b, mult))
    return Graph(len(survivors), edges), mapping


def require_connected(g: Graph, what: str = "operation") -> None:
    if not g.is_connected():
        raise ConnectivityError(f"{what} requires a connected graph")
