"""Immutable simple undirected graphs and the elementary operations on them.

Vertices are dense integers 0..n-1.  Original display names, when an input
format carries them, live in a side table (``labels``) so results can be
reported in user coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

VertexSet = frozenset[int]


class GraphFormatError(ValueError):
    """Raised when graph input text cannot be parsed."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with adjacency stored as per-vertex frozensets."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length does not match vertex count")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
                if u not in self.adj[v]:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> "Graph":
        """Build a graph from an edge iterable; duplicate edges collapse."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            n,
            tuple(frozenset(s) for s in nbrs),
            None if labels is None else tuple(labels),
        )

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines, with an optional leading line declaring n.

    Blank lines and lines starting with '#' are ignored.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    max_seen = -1
    lines = [
        ln
        for ln in (raw.strip() for raw in text.splitlines())
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise GraphFormatError("empty input")
    start = 0
    first = lines[0].split()
    if len(first) == 1:
        try:
            declared = int(first[0])
        except ValueError as exc:
            raise GraphFormatError(f"malformed line: {lines[0]!r}") from exc
        if declared < 0:
            raise GraphFormatError("declared vertex count must be non-negative")
        start = 1
    for ln in lines[start:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"malformed line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"malformed line: {ln!r}") from exc
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex id in line {ln!r}")
        if u == v:
            raise GraphFormatError(f"self-loop {u} {v}")
        if declared is not None and (u >= declared or v >= declared):
            raise GraphFormatError(f"vertex id in {ln!r} exceeds declared count {declared}")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared if declared is not None else max_seen + 1
    return Graph.from_edges(n, edges)


def _graph6_read_n(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:  # '~'
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 vertex count")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, data[4:]
    if len(data) < 8:
        raise GraphFormatError("truncated graph6 vertex count")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, data[8:]


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (column-major upper-triangle bit order)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 input")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"graph6 byte {b} outside printable range 63..126")
    n, rest = _graph6_read_n(data)
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bits = 0
    for b in rest:
        bits = (bits << 6) | (b - 63)
    pad = len(rest) * 6 - nbits
    bits >>= pad
    edges = []
    # bits now hold the upper triangle, last pair in the lowest bit
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> (pos)) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


def complement(g: Graph) -> Graph:
    full = frozenset(range(g.n))
    adj = tuple(full - g.adj[v] - {v} for v in range(g.n))
    return Graph(g.n, adj, g.labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = g.adj + tuple(frozenset(w + g.n for w in h.adj[v]) for v in range(h.n))
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(
            h.label(v) for v in range(h.n)
        )
    return Graph(g.n + h.n, adj, labels)


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    left = frozenset(range(g.n))
    right = frozenset(range(g.n, g.n + h.n))
    adj = tuple(
        (u.adj[v] | right) if v < g.n else (u.adj[v] | left) for v in range(u.n)
    )
    return Graph(u.n, adj, u.labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on s, relabelled 0..|s|-1 in increasing order of id.

    The original identities are retained as labels of the result.
    """
    vs = sorted(set(s))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(vs)}
    members = frozenset(vs)
    adj = tuple(
        frozenset(index[w] for w in g.adj[v] & members) for v in vs
    )
    return Graph(len(vs), adj, tuple(g.label(v) for v in vs))


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    vs = frozenset(s)
    return all(not (g.adj[v] & vs) for v in vs)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = frozenset(s)
    return all(vs - g.adj[v] == {v} for v in vs)
