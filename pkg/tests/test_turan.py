"""
Tests for Turán numbers, restricted extremal graphs and intersection
hypergraphs.
"""

from fractions import Fraction
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from turannical.core.cliques import clique_count_at_vertex, has_clique
from turannical.core.detection import detects
from turannical.core.graph import Graph
from turannical.core.turan import (
    density_bounds,
    intersection_hypergraph,
    predicted_exponent,
    theta_p,
    theta_q,
    turan_graph,
    turan_increment_identity_check,
    turan_number,
    turan_parts,
    turm,
    turm_graph,
)
from turannical.errors import ParameterError
from turannical.util.combinatorics import binomial


class TestTuranNumber:
    """Test t_r(n) and T_r(n)."""

    def test_known_values(self):
        """Test small Turán numbers."""
        assert turan_number(3, 5) == 6
        assert turan_number(4, 6) == 12
        assert turan_number(3, 2) == 1
        assert turan_number(3, 10) == 25

    def test_parts_are_residues(self):
        """Test the canonical part assignment."""
        assert turan_parts(3, 5) == ((0, 2, 4), (1, 3))
        assert turan_parts(4, 4) == ((0, 3), (1,), (2,))

    def test_r_below_three(self):
        """Test that r < 3 is a parameter error."""
        with pytest.raises(ParameterError):
            turan_number(2, 5)

    def test_graph_examples(self):
        """Test T_3(4), T_4(6) and T_3(7)."""
        assert turan_graph(3, 4).edge_count == 4
        k222 = turan_graph(4, 6)
        assert k222.edge_count == 12
        assert not has_clique(k222, 4)
        assert turan_graph(3, 7).edge_count == 12

    @given(st.integers(3, 6), st.integers(0, 40))
    def test_graph_is_clique_free(self, r, n):
        """Test that T_r(n) has t_r(n) edges and no K_r."""
        graph = turan_graph(r, n)
        assert graph.edge_count == turan_number(r, n)
        if n >= r:
            assert not has_clique(graph, r)

    @pytest.mark.parametrize("r, n", [(3, 5), (4, 6), (3, 0), (5, 13)])
    def test_increment_identities(self, r, n):
        """Test the single-vertex and r-vertex increment identities."""
        assert turan_increment_identity_check(r, n)

    @given(st.integers(3, 7), st.integers(0, 60))
    def test_increment_identities_hold_everywhere(self, r, n):
        """Test the increment identities over a range of parameters."""
        assert turan_increment_identity_check(r, n)


class TestRestrictedTuran:
    """Test turm and its extremal construction."""

    def test_formula_branches(self):
        """Test both branches of the formula."""
        assert turm(3, 10, 5) == turan_number(3, 10) == 25
        assert turm(3, 10, 2) == 31
        assert turm(3, 9, 0) == binomial(9, 2)

    def test_m_out_of_range(self):
        """Test that m > n is rejected."""
        with pytest.raises(ParameterError):
            turm(3, 4, 5)

    @given(st.integers(3, 6), st.integers(1, 8))
    def test_branches_agree_at_boundary(self, r, m):
        """Test that both branches agree at n = (r-1)m."""
        n = (r - 1) * m
        assert turan_number(r, n) == binomial(n, 2) - n * m + (r - 1) * binomial(m + 1, 2)

    def test_graph_examples(self):
        """Test turm_graph on the documented cases."""
        graph, restricted = turm_graph(3, 10, 2)
        assert graph.edge_count == 31
        assert restricted == (0, 1)
        assert all(clique_count_at_vertex(graph, 3, v) == 0 for v in restricted)

        graph, _ = turm_graph(3, 4, 2)
        assert graph == turan_graph(3, 4)

        graph, _ = turm_graph(3, 5, 2)
        assert graph.edge_count == 6

    def test_m_zero_gives_complete_graph(self):
        """Test the unrestricted limit."""
        graph, restricted = turm_graph(3, 6, 0)
        assert graph == Graph.complete(6)
        assert restricted == ()

    @pytest.mark.parametrize("r", [3, 4])
    def test_construction_agrees_with_formula(self, r):
        """Test turm_graph against turm and I(n, m) for n <= 12."""
        for n in range(1, 13):
            for m in range(1, n + 1):
                graph, _ = turm_graph(r, n, m)
                assert graph.edge_count == turm(r, n, m)
                if n >= r:
                    assert not detects(intersection_hypergraph(r, n, m), graph).detected


class TestIntersectionHypergraph:
    """Test I^(r)(n, m)."""

    def test_sizes(self):
        """Test edge counts of I(n, m)."""
        assert intersection_hypergraph(3, 4, 4).edge_count == 4
        assert intersection_hypergraph(3, 4, 0).edge_count == 0
        assert intersection_hypergraph(3, 5, 1).edge_count == 6

    @given(st.integers(3, 5), st.integers(3, 9), st.data())
    def test_every_edge_meets_m(self, r, n, data):
        """Test that exactly the r-sets meeting [m] are edges."""
        m = data.draw(st.integers(0, n))
        hypergraph = intersection_hypergraph(r, n, m)
        assert all(edge[0] < m for edge in hypergraph.edges)
        assert hypergraph.edge_count == binomial(n, r) - binomial(n - m, r)


class TestScales:
    """Test density bounds and threshold scales."""

    def test_density_bounds(self):
        """Test the exact rational thresholds."""
        bounds = density_bounds(3, 10, Fraction(1, 10))
        assert bounds.not_turannical_below == Fraction(720, 12)
        assert bounds.not_eps_turannical_at_most == Fraction(7, 10) * 100 / 12
        assert bounds.rules_out_exact(59)
        assert not bounds.rules_out_exact(60)
        assert bounds.rules_out_eps(5)
        assert not density_bounds(3, 10).rules_out_eps(0)

    def test_theta(self):
        """Test the joint scale and its dual."""
        assert theta_q(3, 10, 1.0) == pytest.approx(0.1)
        assert theta_q(4, 10, 0.5) == pytest.approx((10 * 0.5**2.5) ** -2)
        assert math.isinf(theta_q(3, 10, 0.0))
        assert theta_p(3, 10, 1.0) == pytest.approx(10 ** -0.5)
        assert math.isinf(theta_p(3, 10, 0.0))

    def test_predicted_exponent(self):
        """Test the predicted threshold exponents."""
        assert predicted_exponent(3, "eps") == -1
        assert predicted_exponent(5, "eps-for-g") == -3
        assert predicted_exponent(3, "exact") == 0
        assert predicted_exponent(4, "exact") == -1
        assert predicted_exponent(4, "exact-for-g") is None
        with pytest.raises(ParameterError):
            predicted_exponent(3, "approximate")
