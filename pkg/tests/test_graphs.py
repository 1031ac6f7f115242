import random

import pytest

from klcograph import (
    Graph,
    GraphFormatError,
    complement,
    disjoint_union,
    induced_subgraph,
    join,
    parse_edge_list,
    parse_graph6,
)
from klcograph.graphs import is_clique, is_independent_set

from helpers import complete_graph, encode_graph6, path_graph, random_graph


def test_from_edges_collapses_duplicates():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)


def test_edges_are_sorted_pairs():
    g = Graph.from_edges(4, [(2, 3), (0, 2), (1, 0)])
    assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]


def test_parse_edge_list_basic():
    g = parse_edge_list("0 1\n1 2\n")
    assert g.n == 3 and g.m == 2


def test_parse_edge_list_with_vertex_count_header():
    g = parse_edge_list("5\n0 1\n")
    assert g.n == 5 and g.m == 1


def test_parse_edge_list_comments_and_blanks():
    g = parse_edge_list("# triangle\n\n0 1\n1 2\n0 2\n")
    assert g.n == 3 and g.m == 3


@pytest.mark.parametrize(
    "text",
    ["0 1 2", "a b", "0 0", "1 -2", "3\n0 5"],
)
def test_parse_edge_list_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_parse_graph6_known_strings():
    k4 = parse_graph6("C~")
    assert k4.n == 4 and k4.m == 6
    k1 = parse_graph6("@")
    assert k1.n == 1 and k1.m == 0
    k3 = parse_graph6("Bw")
    assert k3.n == 3 and k3.m == 3


def test_parse_graph6_rejects_bad_bytes():
    with pytest.raises(GraphFormatError):
        parse_graph6("C\x01")
    with pytest.raises(GraphFormatError):
        parse_graph6("")


def test_graph6_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        g = random_graph(rng.randint(1, 20), rng.random(), rng)
        assert parse_graph6(encode_graph6(g)) == g


def test_complement_involution():
    rng = random.Random(1)
    for _ in range(20):
        g = random_graph(rng.randint(1, 12), 0.5, rng)
        assert complement(complement(g)) == g


def test_disjoint_union_and_join_counts():
    a, b = complete_graph(3), path_graph(4)
    u = disjoint_union(a, b)
    j = join(a, b)
    assert u.n == j.n == 7
    assert u.m == a.m + b.m
    assert j.m == a.m + b.m + a.n * b.n


def test_join_is_complement_of_union_of_complements():
    a, b = path_graph(3), complete_graph(2)
    assert join(a, b) == complement(disjoint_union(complement(a), complement(b)))


def test_induced_subgraph_relabels_and_keeps_labels():
    g = Graph.from_edges(5, [(0, 2), (2, 4), (1, 3)])
    s = induced_subgraph(g, {0, 2, 4})
    assert s.n == 3
    assert list(s.edges()) == [(0, 1), (1, 2)]
    assert [s.label(v) for v in range(3)] == ["0", "2", "4"]


def test_clique_and_independent_set_predicates():
    g = complete_graph(4)
    assert is_clique(g, {0, 1, 2, 3})
    assert not is_independent_set(g, {0, 1})
    assert is_independent_set(g, {2})
    assert is_independent_set(complement(g), range(4))
