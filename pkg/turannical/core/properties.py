"""
Property deciders for Turannical.

A decider answers one (ε-)Turánnical question for a sampled hypergraph
(and host graph, for the relative properties). Solver deciders run the
exact witness solver; filter deciders only apply certified necessary
conditions and answer FALSE when one fails, TRUE otherwise.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Optional

from turannical.config.constants import (
    DEFAULT_BUDGET,
    MODE_FILTER,
    MODE_SOLVER,
    PROPERTY_EPS,
    PROPERTY_EXACT,
    PROPERTY_EXACT_FOR_G,
)
from turannical.config.settings import PropertySpec
from turannical.core.graph import Graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.core.max_partition import max_partition_edges
from turannical.core.turan import density_bounds, turan_number
from turannical.core.witness import (
    Verdict,
    construct_deletion_witness,
    construct_sparse_witness,
    is_eps_turannical,
    is_eps_turannical_for,
    is_turannical,
    is_turannical_for,
)
from turannical.errors import ParameterError
from turannical.util.numeric import floor_fraction

logger = logging.getLogger(__name__)


class PropertyDecider(ABC):
    """Abstract base class for property deciders."""

    def __init__(self, target: PropertySpec, budget: int = DEFAULT_BUDGET):
        """
        Initialize decider.

        Args:
            target: Property to decide
            budget: Search node budget per decision
        """
        self.target = target
        self.budget = budget

    @property
    def monotone(self) -> bool:
        """True if a TRUE answer at F stays TRUE for every super-hypergraph of F."""
        return False

    def _check_host(self, graph: Optional[Graph]):
        if self.target.relative and graph is None:
            raise ParameterError(f"property '{self.target.kind}' needs a host graph")

    @abstractmethod
    def decide(self, hypergraph: UniformHypergraph, graph: Optional[Graph] = None) -> Verdict:
        """
        Decide the property.

        Args:
            hypergraph: Restriction hypergraph
            graph: Host graph for the relative properties

        Returns:
            Verdict
        """
        pass


class SolverDecider(PropertyDecider):
    """Exact decisions through the witness solver."""

    @property
    def monotone(self) -> bool:
        return True

    def decide(self, hypergraph: UniformHypergraph, graph: Optional[Graph] = None) -> Verdict:
        self._check_host(graph)
        kind = self.target.kind
        if kind == PROPERTY_EXACT:
            verdict, _ = is_turannical(hypergraph, self.budget)
        elif kind == PROPERTY_EPS:
            verdict, _ = is_eps_turannical(hypergraph, self.target.eps_fraction, self.budget)
        elif kind == PROPERTY_EXACT_FOR_G:
            verdict, _ = is_turannical_for(hypergraph, graph, self.budget)
        else:
            verdict, _ = is_eps_turannical_for(
                hypergraph, graph, self.target.eps_fraction, self.budget
            )
        return verdict


class FilterDecider(PropertyDecider):
    """
    Necessary-condition filters.

    FALSE is only returned with a certificate: a sparse-link witness, a
    deletion witness above the threshold, or a hyperedge count below the
    sparse-restriction bounds (n >= 5).
    """

    def decide(self, hypergraph: UniformHypergraph, graph: Optional[Graph] = None) -> Verdict:
        self._check_host(graph)
        kind = self.target.kind
        r, n = hypergraph.r, hypergraph.n
        eps = self.target.eps_fraction

        if kind == PROPERTY_EXACT:
            if n >= 5 and density_bounds(r, n).rules_out_exact(len(hypergraph)):
                return Verdict.FALSE
            return Verdict.FALSE if construct_sparse_witness(hypergraph) else Verdict.TRUE

        if kind == PROPERTY_EPS:
            if n >= 5 and 0 < eps <= Fraction(1, 2 * r):
                if density_bounds(r, n, eps).rules_out_eps(len(hypergraph)):
                    return Verdict.FALSE
            allowed = floor_fraction((1 + eps) * turan_number(r, n))
            witness = construct_deletion_witness(hypergraph)
            if witness.edge_count > allowed:
                return Verdict.FALSE
            sparse = construct_sparse_witness(hypergraph)
            return Verdict.FALSE if sparse and sparse.edge_count > allowed else Verdict.TRUE

        if kind == PROPERTY_EXACT_FOR_G:
            partition = max_partition_edges(graph, r - 1, budget=self.budget)
            witness = construct_deletion_witness(hypergraph, graph)
            if partition.optimal and witness.edge_count > partition.value:
                return Verdict.FALSE
            return Verdict.TRUE

        threshold = (1 + eps) * Fraction(r - 2, r - 1) * graph.edge_count
        witness = construct_deletion_witness(hypergraph, graph)
        return Verdict.FALSE if witness.edge_count > floor_fraction(threshold) else Verdict.TRUE


def get_decider(
    target: PropertySpec, mode: str = MODE_SOLVER, budget: int = DEFAULT_BUDGET
) -> PropertyDecider:
    """
    Create a decider for a property and decision mode.

    Args:
        target: Property to decide
        mode: "solver" or "filter"
        budget: Search node budget

    Returns:
        PropertyDecider instance

    Raises:
        ParameterError: If the mode is unknown
    """
    if mode == MODE_SOLVER:
        return SolverDecider(target, budget)
    if mode == MODE_FILTER:
        return FilterDecider(target, budget)
    raise ParameterError(f"unknown decision mode '{mode}'")
