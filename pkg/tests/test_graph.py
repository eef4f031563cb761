import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from lcorbits.graph import (Graph, GraphError, bits, circulant, complement, cycle,
                            delete_vertex, disjoint_union, independence_number,
                            induced_subgraph, is_bipartite, is_connected,
                            is_independent, is_regular, lc, maximum_independent_set,
                            nested_clique, path, wheel)


@st.composite
def graphs(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


def brute_alpha(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if all(not (g.adj[v] & s) for v in bits(s)):
            best = max(best, s.bit_count())
    return best


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(33, (0,) * 33)


@given(graphs())
def test_lc_involution(g):
    for v in range(g.n):
        assert lc(lc(g, v), v) == g


@given(graphs(n_min=2))
def test_lc_touches_only_neighbourhood(g):
    for v in range(g.n):
        h = lc(g, v)
        nb = g.adj[v]
        assert h.n == g.n
        assert h.adj[v] == g.adj[v]
        for i, j in itertools.combinations(range(g.n), 2):
            inside = nb >> i & 1 and nb >> j & 1
            assert h.has_edge(i, j) == (g.has_edge(i, j) ^ bool(inside))


def test_lc_example_path():
    # LC at the middle of a path on three vertices closes the triangle.
    assert lc(path(3), 1) == Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(GraphError):
        lc(path(3), 3)


@settings(max_examples=300)
@given(graphs(n_max=8))
def test_independence_number_matches_subset_enumeration(g):
    assert independence_number(g) == brute_alpha(g)
    s = maximum_independent_set(g)
    assert len(s) == independence_number(g)
    assert is_independent(g, s)


def test_independence_number_exhaustive_n5():
    pairs = list(itertools.combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(5, [e for k, e in enumerate(pairs) if mask >> k & 1])
        assert independence_number(g) == brute_alpha(g)


def test_independence_known_values():
    assert independence_number(cycle(5)) == 2
    assert independence_number(path(7)) == 4
    assert independence_number(Graph.complete(6)) == 1
    assert independence_number(Graph.empty(4)) == 4
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng, 16, 0.3)
        assert independence_number(g) == len(maximum_independent_set(g))


@given(graphs(n_min=2))
def test_delete_vertex_compacts(g):
    h = delete_vertex(g, 0)
    assert h.n == g.n - 1
    for i, j in itertools.combinations(range(1, g.n), 2):
        assert h.has_edge(i - 1, j - 1) == g.has_edge(i, j)


def test_structural_predicates():
    assert is_connected(cycle(6)) and not is_connected(disjoint_union(path(2), path(2)))
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))
    assert complement(complement(wheel(6))) == wheel(6)
    assert induced_subgraph(cycle(5), [0, 1, 2]) == path(3)
    assert wheel(6).degree(0) == 5 and wheel(6).num_edges() == 10


def test_circulant_hexacode_member():
    g = circulant(6, {1, 3})
    assert is_regular(g) and g.degree(0) == 3
    with pytest.raises(GraphError):
        circulant(6, {4})


@pytest.mark.parametrize("sizes,n,deg", [([2, 3], 6, 3), ([3, 4], 12, 5), ([5, 4], 20, 7),
                                         ([2, 2, 2], 8, 3)])
def test_nested_clique_regular(sizes, n, deg):
    g = nested_clique(sizes)
    assert g.n == n
    assert is_regular(g) and g.degree(0) == deg
    assert is_connected(g)
