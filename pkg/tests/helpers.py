"""Shared fixtures and graph utilities for the test suite."""

from __future__ import annotations

import itertools
import random

from klcograph import Graph, disjoint_union, join


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def l_copies_of_k_clique(l: int, k: int) -> Graph:
    """lK_k: disjoint union of l cliques of size k."""
    g = complete_graph(k)
    for _ in range(l - 1):
        g = disjoint_union(g, complete_graph(k))
    return g


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# The 7-vertex worked example: two triangles sharing structure through a
# middle vertex; it contains an induced P4, so only the oracle applies.
EXAMPLE_7 = Graph.from_edges(
    7,
    [(0, 1), (0, 2), (1, 2), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)],
)


def encode_graph6(g: Graph) -> str:
    """graph6 encoder, for round-trip tests of the decoder."""
    if g.n > 62:
        raise ValueError("encoder supports n <= 62 only")
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen: set[tuple] = set()
    out = []
    for picks in itertools.product((0, 1), repeat=len(pairs)):
        edges = [e for e, take in zip(pairs, picks) if take]
        canon = min(
            tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
            for p in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Graph.from_edges(n, edges))
    return out
