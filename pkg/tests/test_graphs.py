"""
Tests for graphs, hypergraphs, links and clique counting.
"""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turannical.core.cliques import (
    book_size,
    clique_count_at_vertex,
    count_cliques,
    enumerate_cliques,
    has_clique,
    max_book,
    vertex_clique_counts,
)
from turannical.core.graph import Graph, is_turan_graph
from turannical.core.hypergraph import UniformHypergraph, deg_i, link
from turannical.core.turan import turan_graph
from turannical.errors import ParameterError
from turannical.util.combinatorics import binomial

from strategies import graphs, hypergraphs


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def k33_with_inner_edge() -> Graph:
    cross = [(u, v) for u in range(3) for v in range(3, 6)]
    return Graph.from_edges(6, cross + [(0, 1)])


class TestGraph:
    """Test the graph type."""

    def test_from_edges_collapses_repeats(self):
        """Test that repeated and reversed edges count once."""
        graph = Graph.from_edges(4, [(0, 1), (1, 0), (0, 1), (2, 3)])
        assert graph.edge_count == 2
        assert graph.edges() == [(0, 1), (2, 3)]

    def test_self_loop_rejected(self):
        """Test that self-loops are parameter errors."""
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        """Test that vertices outside 0..n-1 are rejected."""
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(0, 3)])

    def test_asymmetric_rows_rejected(self):
        """Test that a one-sided adjacency row is invalid."""
        with pytest.raises(ParameterError):
            Graph(2, (0b10, 0))

    def test_complete_and_empty(self):
        """Test edge counts of K_n and the empty graph."""
        assert Graph.complete(6).edge_count == 15
        assert Graph.empty(6).edge_count == 0
        assert Graph.complete(0).edge_count == 0

    def test_edges_between_and_induced(self):
        """Test e(X, Y) and e(G[S]) on K_5."""
        graph = Graph.complete(5)
        assert graph.edges_between([0, 1], [2, 3, 4]) == 6
        assert graph.induced_edge_count([0, 1, 2]) == 3
        assert graph.degree_into(0, [1, 2]) == 2

    def test_edges_between_needs_disjoint_sets(self):
        """Test that overlapping sets are rejected."""
        with pytest.raises(ParameterError):
            Graph.complete(4).edges_between([0, 1], [1, 2])

    def test_with_and_without_edges(self):
        """Test editing copies and the subgraph relation."""
        graph = cycle(5)
        smaller = graph.without_edges([(0, 1), (2, 4)])
        assert smaller.edge_count == 4
        assert smaller.is_subgraph_of(graph)
        assert not graph.is_subgraph_of(smaller)
        assert smaller.with_edges([(0, 1)]).edge_count == 5

    @given(graphs())
    def test_adjacency_matrix_symmetric(self, graph):
        """Test that the adjacency matrix is symmetric with 2e ones."""
        matrix = graph.adjacency_matrix()
        assert np.array_equal(matrix, matrix.T)
        assert int(matrix.sum()) == 2 * graph.edge_count
        assert not matrix.diagonal().any()

    def test_is_turan_graph(self):
        """Test recognition of T_r(n) and of near misses."""
        assert is_turan_graph(turan_graph(3, 7), 3)
        assert is_turan_graph(turan_graph(4, 10), 4)
        assert not is_turan_graph(turan_graph(3, 7).with_edges([(0, 2)]), 3)
        assert not is_turan_graph(turan_graph(4, 6), 3)
        unbalanced = Graph.from_edges(5, [(0, v) for v in range(1, 5)])
        assert not is_turan_graph(unbalanced, 3)

    def test_is_turan_graph_small_n(self):
        """Test that K_n is T_r(n) when n < r."""
        assert is_turan_graph(Graph.complete(2), 3)
        assert is_turan_graph(Graph.complete(3), 5)


class TestUniformHypergraph:
    """Test the hypergraph type."""

    def test_from_edges_canonicalises(self):
        """Test that vertex order and repeats are normalised."""
        hypergraph = UniformHypergraph.from_edges(3, 5, [(2, 1, 0), (0, 1, 2), (4, 3, 0)])
        assert hypergraph.edges == ((0, 1, 2), (0, 3, 4))
        assert len(hypergraph) == 2

    def test_unsorted_edges_rejected(self):
        """Test that the raw constructor insists on canonical order."""
        with pytest.raises(ParameterError):
            UniformHypergraph(3, 5, ((0, 3, 4), (0, 1, 2)))
        with pytest.raises(ParameterError):
            UniformHypergraph(3, 5, ((1, 0, 2),))

    def test_wrong_size_rejected(self):
        """Test that an edge of the wrong size is rejected."""
        with pytest.raises(ParameterError):
            UniformHypergraph.from_edges(3, 5, [(0, 1)])

    def test_repeated_vertex_rejected(self):
        """Test that a hyperedge may not repeat a vertex."""
        with pytest.raises(ParameterError):
            UniformHypergraph.from_edges(3, 5, [(0, 0, 1)])

    def test_complete_edge_count(self):
        """Test that K^(r)_n has C(n, r) edges."""
        assert UniformHypergraph.complete(3, 7).edge_count == 35
        assert UniformHypergraph.complete(4, 6).edge_count == 15

    @given(hypergraphs())
    def test_pair_link_sizes(self, hypergraph):
        """Test the pair link matrix against pair_link_size and degrees."""
        counts = hypergraph.pair_link_sizes()
        for u, v in combinations(range(hypergraph.n), 2):
            assert counts[u, v] == counts[v, u] == hypergraph.pair_link_size(u, v)
        for v in range(hypergraph.n):
            assert counts[v, v] == len(hypergraph.edges_containing([v]))

    def test_edge_array_shape(self):
        """Test the numpy view of the edges."""
        assert UniformHypergraph.empty(3, 4).edge_array().shape == (0, 3)
        assert UniformHypergraph.complete(3, 4).edge_array().shape == (4, 3)


class TestCliques:
    """Test clique enumeration and counting."""

    def test_complete_graph(self):
        """Test that K_4 has four triangles."""
        cliques = enumerate_cliques(Graph.complete(4), 3)
        assert len(cliques) == 4
        assert list(cliques) == list(combinations(range(4), 3))

    def test_cycle_is_triangle_free(self):
        """Test that C_5 has no triangle."""
        assert len(enumerate_cliques(cycle(5), 3)) == 0
        assert not has_clique(cycle(5), 3)

    def test_turan_plus_inner_edge(self):
        """Test T_3(6) plus one edge inside a part."""
        graph = turan_graph(3, 6).with_edges([(0, 2)])
        assert len(enumerate_cliques(graph, 3)) == 3

    def test_order_out_of_range(self):
        """Test that r < 2 or r > n is a parameter error."""
        with pytest.raises(ParameterError):
            enumerate_cliques(Graph.complete(4), 5)
        with pytest.raises(ParameterError):
            enumerate_cliques(Graph.complete(4), 1)

    def test_count_at_vertex(self):
        """Test per-vertex clique counts."""
        assert clique_count_at_vertex(Graph.complete(5), 3, 2) == 6
        assert clique_count_at_vertex(cycle(5), 3, 0) == 0
        assert clique_count_at_vertex(k33_with_inner_edge(), 3, 0) == 3

    def test_book_sizes(self):
        """Test book sizes on K_4, K_{3,3}+e and a cycle."""
        assert book_size(Graph.complete(4), 3, (1, 3)) == 2
        assert book_size(k33_with_inner_edge(), 3, (0, 1)) == 3
        assert book_size(cycle(5), 3, (0, 1)) == 0

    def test_book_on_non_edge(self):
        """Test that a non-edge has no book."""
        with pytest.raises(ParameterError):
            book_size(cycle(5), 3, (0, 2))

    def test_max_book(self):
        """Test that the inner edge carries the largest book."""
        assert max_book(k33_with_inner_edge(), 3) == ((0, 1), 3)
        assert max_book(Graph.empty(4), 3) == (None, 0)

    @given(graphs(max_n=9), st.integers(3, 4))
    @settings(max_examples=60, deadline=None)
    def test_double_counting(self, graph, r):
        """Test the vertex and edge double-counting identities."""
        total = count_cliques(graph, r)
        assert sum(vertex_clique_counts(graph, r)) == r * total
        books = sum(book_size(graph, r, edge) for edge in graph.iter_edges())
        assert books == binomial(r, 2) * total

    @given(st.integers(3, 9), st.integers(2, 5))
    def test_complete_graph_counts(self, n, r):
        """Test that K_n has C(n, r) copies of K_r."""
        assert count_cliques(Graph.complete(n), r) == binomial(n, r)


class TestLink:
    """Test link hypergraphs."""

    def test_pair_link_of_complete(self):
        """Test that a pair link of K^(3)_n is every other singleton."""
        result = link(UniformHypergraph.complete(3, 6), [1, 4])
        assert result.r == 1
        assert result.edges == ((0,), (2,), (3,), (5,))

    def test_pair_link_direct(self):
        """Test the link of {1, 2} in {{1,2,3},{1,2,4}}."""
        hypergraph = UniformHypergraph.from_edges(3, 5, [(1, 2, 3), (1, 2, 4)])
        assert link(hypergraph, [1, 2]).edges == ((3,), (4,))

    def test_vertex_link_empty(self):
        """Test that a vertex outside every edge has an empty link."""
        hypergraph = UniformHypergraph.from_edges(3, 5, [(1, 2, 3)])
        result = link(hypergraph, [4])
        assert result.r == 2
        assert result.edge_count == 0

    def test_link_too_large(self):
        """Test that |X| >= r is rejected."""
        with pytest.raises(ParameterError):
            link(UniformHypergraph.complete(3, 5), [0, 1, 2])

    @given(hypergraphs(), st.data())
    def test_link_size_matches_containing_edges(self, hypergraph, data):
        """Test e(link(F, X)) = number of edges containing X."""
        size = data.draw(st.integers(1, 2))
        vertices = data.draw(
            st.sets(st.integers(0, hypergraph.n - 1), min_size=size, max_size=size)
        )
        assert link(hypergraph, vertices).edge_count == len(hypergraph.edges_containing(vertices))


class TestDegI:
    """Test the deg_i statistic."""

    def test_single_edge_inside(self):
        """Test that an edge {1,3} inside {1,2,3} counts for u=1, v=2."""
        hypergraph = UniformHypergraph.from_edges(3, 4, [(1, 2, 3)])
        graph = Graph.from_edges(4, [(1, 3)])
        assert deg_i(hypergraph, graph, 1, 2, 1) == 1

    def test_pair_itself_not_counted(self):
        """Test that uv is excluded from the spanned edges."""
        hypergraph = UniformHypergraph.from_edges(3, 4, [(1, 2, 3)])
        triangle = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3)])
        assert deg_i(hypergraph, triangle, 1, 2, 2) == 1
        assert deg_i(hypergraph, triangle, 1, 2, 3) == 0

    def test_equal_vertices(self):
        """Test that deg_i(u, u) is 0."""
        hypergraph = UniformHypergraph.complete(3, 5)
        assert deg_i(hypergraph, Graph.complete(5), 2, 2, 0) == 0

    @given(hypergraphs(n=6), graphs(n=6))
    @settings(max_examples=40, deadline=None)
    def test_monotone_in_i(self, hypergraph, graph):
        """Test that deg_i is non-increasing in i and deg_0 ignores G."""
        for u, v in combinations(range(6), 2):
            values = [deg_i(hypergraph, graph, u, v, i) for i in range(4)]
            assert values == sorted(values, reverse=True)
            assert values[0] == hypergraph.pair_link_size(u, v)
