import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grundy_spectral.errors import GraphFormatError
from grundy_spectral.graphs import (
    Graph,
    classify,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    degeneracy,
    degree_stats,
    enumerate_connected_graphs,
    erdos_renyi,
    is_connected,
    parse_edge_list,
    path_graph,
    star_graph,
    to_edge_list,
)


def test_parse_basic():
    g = parse_edge_list("n 4\n0 1\n1 2\n2 3\n")
    assert g.n == 4 and len(g.edges) == 3


def test_parse_infers_n_and_skips_comments():
    g = parse_edge_list("# a path\n0 1\n\n1 2\n")
    assert g.n == 3 and len(g.edges) == 2


@pytest.mark.parametrize(
    "text", ["0 0\n", "0 1\n0 1\n", "n 2\n0 5\n", "0 zebra\n", "1 2 3\n"]
)
def test_parse_rejects_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@given(small_graphs())
@settings(max_examples=100)
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


def test_constructors():
    assert len(complete_graph(5).edges) == 10
    assert len(path_graph(4).edges) == 3
    assert len(cycle_graph(5).edges) == 5
    assert len(complete_bipartite(2, 3).edges) == 6
    assert len(star_graph(4).edges) == 4


def test_degree_stats():
    assert degree_stats(star_graph(4)) == (4, 1)
    assert degree_stats(cycle_graph(5)) == (2, 2)
    with pytest.raises(GraphFormatError):
        degree_stats(Graph(0, []))


def test_degeneracy_examples():
    assert degeneracy(path_graph(7)) == 1
    assert degeneracy(complete_graph(5)) == 4
    assert degeneracy(cycle_graph(6)) == 2
    assert degeneracy(complete_bipartite(3, 3)) == 3


def test_connectivity_and_components():
    g = Graph(5, [(0, 1), (2, 3)])
    assert not is_connected(g)
    comps = connected_components(g)
    assert sorted(c.n for c in comps) == [1, 2, 2]
    assert is_connected(cycle_graph(4))


def test_classify_tags():
    assert classify(complete_graph(4)).is_complete
    assert classify(path_graph(5)).is_tree
    assert classify(cycle_graph(6)).is_bipartite
    assert not classify(cycle_graph(5)).is_bipartite


def test_erdos_renyi_deterministic():
    a = erdos_renyi(60, 0.1, 123)
    b = erdos_renyi(60, 0.1, 123)
    c = erdos_renyi(60, 0.1, 124)
    assert a == b
    assert a != c


def test_erdos_renyi_extremes():
    assert len(erdos_renyi(20, 0.0, 5).edges) == 0
    assert len(erdos_renyi(20, 1.0, 5).edges) == 190


def test_erdos_renyi_edge_count_plausible():
    n, p = 400, 0.05
    m = len(erdos_renyi(n, p, 9).edges)
    mean = p * n * (n - 1) / 2
    assert abs(m - mean) < 6 * math.sqrt(mean)


def test_connected_graph_counts():
    # labeled connected graphs on 1..5 vertices
    counts = [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 6)]
    assert counts == [1, 1, 4, 38, 728]


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 5)])
    with pytest.raises(GraphFormatError):
        Graph(2, [(0, 1), (1, 0)])
