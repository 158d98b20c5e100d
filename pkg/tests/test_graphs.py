from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linkbias import example35
from linkbias.graphs import (
    Graph,
    Infeasible,
    check_degree_sequence,
    degree_histogram,
    degree_sequence,
    is_graphical,
    l1_gap,
    realize,
)

from oracles import all_degree_sequences


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def test_graph_normalizes_pairs():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.sorted_edges() == [(0, 2), (1, 2)]
    assert g.has_edge(2, 0) and g.has_edge(0, 2)
    assert not g.has_edge(0, 1)


@pytest.mark.parametrize("edges", [{(1, 1)}, {(0, 3)}, {(-1, 0)}])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph(3, frozenset(edges))


def test_complete_graph_edge_count():
    assert len(Graph.complete(6)) == 15


def test_degree_sequence_examples():
    assert degree_sequence(Graph.empty(3)) == (0, 0, 0)
    assert degree_sequence(Graph.complete(4)) == (3, 3, 3, 3)


def test_degree_sequence_of_example_graph(example_graph):
    assert degree_sequence(example_graph) == example35.TARGET_DEGREES
    assert degree_histogram(degree_sequence(example_graph)) == [(1, 29), (2, 4), (3, 1), (4, 1)]


def test_l1_gap_examples():
    assert l1_gap((1, 2, 3), (1, 2, 3)) == 0
    assert l1_gap((1, 1, 0), (0, 0, 0)) == 2
    assert l1_gap((2, 2, 2, 2), (3, 3, 3, 3)) == 4
    with pytest.raises(ValueError):
        l1_gap((1,), (1, 2))


def test_check_degree_sequence():
    assert check_degree_sequence([0, 1, 1]) == (0, 1, 1)
    with pytest.raises(ValueError):
        check_degree_sequence([3, 0, 0])
    with pytest.raises(ValueError):
        check_degree_sequence([1, 1], n=3)


@pytest.mark.parametrize(
    "k, expected",
    [((1, 1, 1, 1), True), ((1, 1, 1), False), ((2, 2, 2), True), ((3, 3, 1, 1), False), ((), True)],
)
def test_is_graphical_examples(k, expected):
    assert is_graphical(k) is expected


def test_example_target_is_graphical(example_graph):
    # the table's own edge list realizes the target exactly
    assert degree_sequence(example_graph) == example35.TARGET_DEGREES
    assert is_graphical(example35.TARGET_DEGREES)


def test_realize_examples():
    assert realize((0, 0)) == Graph.empty(2)
    assert realize((2, 2, 2)) == Graph.complete(3)
    g = realize(example35.TARGET_DEGREES)
    assert degree_sequence(g) == example35.TARGET_DEGREES
    with pytest.raises(Infeasible):
        realize((1, 1, 1))


def test_realize_is_deterministic():
    k = (3, 2, 2, 2, 1, 1, 1)
    assert realize(k) == realize(list(k))


@pytest.mark.parametrize("n", range(1, 8))
def test_graphicality_matches_enumeration(n):
    """Erdős–Gallai and Havel–Hakimi agree with enumeration of every graph."""
    reachable = all_degree_sequences(n)
    for k in product(range(n), repeat=n):
        graphical = is_graphical(k)
        assert graphical == (k in reachable), k
        if graphical:
            assert degree_sequence(realize(k)) == k
        else:
            with pytest.raises(Infeasible):
                realize(k)


@given(graphs())
def test_l1_gap_self_is_zero(g):
    d = degree_sequence(g)
    assert l1_gap(d, d) == 0


@given(st.lists(st.integers(0, 9), min_size=1, max_size=10))
def test_odd_sum_is_never_graphical(k):
    if sum(k) % 2:
        assert not is_graphical(k)


@given(graphs(max_n=20))
def test_degree_sequence_of_any_graph_is_graphical(g):
    d = degree_sequence(g)
    assert is_graphical(d)
    assert degree_sequence(realize(d)) == d


@given(graphs())
def test_bitsets_match_adjacency(g):
    adj = g.adjacency()
    for i in range(g.n):
        assert g.neighbors(i) == frozenset(j for j in range(g.n) if adj[i, j])
    assert Graph.from_adjacency(adj) == g
