import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from rlis.errors import DomainError, ParseError
from rlis.generators import complete, cycle, path, star
from rlis.graph import Graph, bits, classify_tree, induced_subgraph, parse_graph

from conftest import brute_is_tree, graphs


def test_pace_path():
    G = parse_graph("p tw 3 2\n1 2\n2 3\n", "pace-gr")
    assert G.n == 3 and G.m == 2
    assert G.has_edge(0, 1) and G.has_edge(1, 2) and not G.has_edge(0, 2)
    assert G.labels == (1, 2, 3)


def test_pace_comments_and_bytes():
    G = parse_graph(b"c hello\np tw 2 1\nc mid\n1 2\n", "pace-gr")
    assert G.m == 1


def test_edge_list_isolated():
    G = parse_graph("4 0\n", "edge-list")
    assert G.n == 4 and G.m == 0


def test_duplicate_edges_collapse():
    G = parse_graph("p tw 2 2\n1 2\n1 2\n", "pace-gr")
    assert G.m == 1


@pytest.mark.parametrize("text, line", [
    ("p tw 3 1\n1 4\n", 2),
    ("p tw 3 1\n2 2\n", 2),
    ("p xx 3 1\n1 2\n", 1),
    ("1 2\n", 1),
])
def test_pace_errors_name_line(text, line):
    with pytest.raises(ParseError, match=f"line {line}"):
        parse_graph(text, "pace-gr")


def test_graph_rejects_loops():
    with pytest.raises(DomainError):
        Graph(2, [(1, 1)])


def test_induced_examples():
    assert induced_subgraph(complete(3), [0, 2]).m == 1
    assert induced_subgraph(complete(3), []).n == 0
    for S in itertools.combinations(range(5), 4):
        H = induced_subgraph(cycle(5), S)
        shape = classify_tree(H)
        assert H.m == 3 and shape is not None and shape.leaf_count == 2


def test_induced_out_of_range():
    with pytest.raises(DomainError):
        induced_subgraph(path(3), [0, 5])


@pytest.mark.parametrize("G, leaves", [
    (star(3), 3), (Graph(1), 0), (path(2), 2), (path(5), 2),
])
def test_classify_trees(G, leaves):
    shape = classify_tree(G)
    assert shape is not None
    assert shape.leaf_count == leaves
    if G.n > 1:
        assert (shape.leaves | shape.internals) == G.all_mask


@pytest.mark.parametrize("G", [cycle(4), Graph(4, [(0, 1), (2, 3)]), Graph(0)])
def test_classify_non_trees(G):
    assert classify_tree(G) is None


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_induced_edges_exhaustive(G):
    for r in range(G.n + 1):
        for S in itertools.combinations(range(G.n), r):
            H = induced_subgraph(G, S)
            got = {(S[u], S[v]) for u, v in H.edges()}
            want = {(u, v) for u, v in G.edges() if u in S and v in S}
            assert got == want


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8, min_n=1))
def test_classify_matches_independent_checks(G):
    shape = classify_tree(G)
    assert (shape is not None) == brute_is_tree(G, range(G.n))
    ref = nx.Graph(list(G.edges()))
    ref.add_nodes_from(range(G.n))
    assert (shape is not None) == nx.is_tree(ref)
    if shape is not None:
        assert set(bits(shape.leaves)) == {v for v in range(G.n) if G.degree(v) == 1}
