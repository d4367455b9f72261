"""
Tests for the solver and filter property deciders.
"""

import pytest
from hypothesis import given, settings

from turannical.config.settings import PropertySpec
from turannical.core.graph import Graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.core.properties import FilterDecider, SolverDecider, get_decider
from turannical.core.turan import intersection_hypergraph
from turannical.core.witness import Verdict
from turannical.errors import ParameterError

from strategies import hypergraphs

EXACT = PropertySpec(kind="exact")
EPS = PropertySpec(kind="eps", eps=0.1)
EXACT_FOR_G = PropertySpec(kind="exact-for-g")
EPS_FOR_G = PropertySpec(kind="eps-for-g", eps=0.25)


class TestGetDecider:
    """Test decider creation."""

    def test_modes(self):
        """Test that each mode maps to its decider."""
        assert isinstance(get_decider(EXACT, "solver"), SolverDecider)
        assert isinstance(get_decider(EXACT, "filter"), FilterDecider)
        assert get_decider(EXACT).budget > 0

    def test_monotone_flag(self):
        """Test that only the solver allows the monotone scan shortcut."""
        assert get_decider(EXACT, "solver").monotone
        assert not get_decider(EXACT, "filter").monotone

    def test_unknown_mode(self):
        """Test that an unknown mode is rejected."""
        with pytest.raises(ParameterError):
            get_decider(EXACT, "oracle")

    @pytest.mark.parametrize("mode", ["solver", "filter"])
    def test_relative_needs_host(self, mode):
        """Test that relative properties need a host graph."""
        with pytest.raises(ParameterError):
            get_decider(EXACT_FOR_G, mode).decide(UniformHypergraph.complete(3, 4))


class TestSolverDecider:
    """Test exact decisions."""

    def test_absolute(self):
        """Test the exact and ε-properties."""
        decider = get_decider(EXACT)
        assert decider.decide(UniformHypergraph.complete(3, 5)) is Verdict.TRUE
        assert decider.decide(UniformHypergraph.empty(3, 5)) is Verdict.FALSE
        assert get_decider(EPS).decide(UniformHypergraph.complete(3, 5)) is Verdict.TRUE

    def test_relative(self):
        """Test the properties relative to a host graph."""
        host = Graph.complete(4)
        assert get_decider(EXACT_FOR_G).decide(UniformHypergraph.empty(3, 4), host) is Verdict.FALSE
        assert get_decider(EXACT_FOR_G).decide(UniformHypergraph.complete(3, 4), host) is Verdict.TRUE
        assert get_decider(EPS_FOR_G).decide(UniformHypergraph.empty(3, 5), Graph.complete(5)) is Verdict.FALSE


class TestFilterDecider:
    """Test necessary-condition filters."""

    def test_density_rule(self):
        """Test that too few hyperedges rule out the exact property."""
        assert get_decider(EXACT, "filter").decide(UniformHypergraph.empty(3, 5)) is Verdict.FALSE

    def test_sparse_witness_rule(self):
        """Test that a small pair link refutes I^(3)(7, 2)."""
        decider = get_decider(EXACT, "filter")
        assert decider.decide(intersection_hypergraph(3, 7, 2)) is Verdict.FALSE

    def test_passes_complete(self):
        """Test that K^(3)_5 passes every filter."""
        complete = UniformHypergraph.complete(3, 5)
        assert get_decider(EXACT, "filter").decide(complete) is Verdict.TRUE
        assert get_decider(EPS, "filter").decide(complete) is Verdict.TRUE

    def test_relative(self):
        """Test the deletion-witness filters against a host."""
        assert (
            get_decider(EXACT_FOR_G, "filter").decide(UniformHypergraph.empty(3, 4), Graph.complete(4))
            is Verdict.FALSE
        )
        assert (
            get_decider(EPS_FOR_G, "filter").decide(UniformHypergraph.empty(3, 5), Graph.complete(5))
            is Verdict.FALSE
        )
        assert (
            get_decider(EXACT_FOR_G, "filter").decide(
                UniformHypergraph.complete(3, 4), Graph.complete(4)
            )
            is Verdict.TRUE
        )

    @pytest.mark.parametrize("target", [EXACT, EPS])
    @given(hypergraphs(min_n=5, max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_false_is_sound(self, target, hypergraph):
        """Test that a filter FALSE is never contradicted by the solver."""
        if get_decider(target, "filter").decide(hypergraph) is Verdict.FALSE:
            assert get_decider(target, "solver").decide(hypergraph) is Verdict.FALSE
