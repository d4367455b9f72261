"""
Exhaustive oracle for Turannical.

Enumerates every subgraph of a host graph (K_n by default) as a uint32
bitmask over the host's edges and finds the largest ones no hyperedge
detects. The work is fully vectorised with numpy; it is only meant for
hosts with at most EXHAUSTIVE_MAX_PAIRS edges and serves as the reference
the search engines are tested against.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from turannical.config.constants import EXHAUSTIVE_MAX_PAIRS
from turannical.core.graph import Edge, Graph, is_turan_graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.core.turan import intersection_hypergraph
from turannical.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExhaustiveResult:
    """
    Maximum undetected subgraphs found by full enumeration.

    Attributes:
        max_edges: Largest undetected edge count
        optimum_count: Number of undetected subgraphs with that many edges
        optima: The first optimal subgraphs in mask order (at most the
            requested limit)
    """

    max_edges: int
    optimum_count: int
    optima: Tuple[Graph, ...]


class ExhaustiveOracle:
    """
    Vectorised enumeration of all subgraphs of a host graph.

    Subgraph masks and their edge counts are cached per universe size.
    """

    def __init__(self):
        self._masks: Dict[int, np.ndarray] = {}
        self._sizes: Dict[int, np.ndarray] = {}

    def _enumeration(self, pairs: int) -> Tuple[np.ndarray, np.ndarray]:
        if pairs > EXHAUSTIVE_MAX_PAIRS:
            raise ParameterError(
                f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_PAIRS} host edges, "
                f"got {pairs}"
            )
        if pairs not in self._masks:
            masks = np.arange(1 << pairs, dtype=np.uint32)
            self._masks[pairs] = masks
            self._sizes[pairs] = np.bitwise_count(masks).astype(np.int64)
        return self._masks[pairs], self._sizes[pairs]

    def undetected_mask(
        self, hypergraph: UniformHypergraph, universe: Sequence[Edge]
    ) -> np.ndarray:
        """
        Boolean array over all subgraph masks: True where no hyperedge fires.

        Args:
            hypergraph: Restriction hypergraph
            universe: Host edges; bit i of a mask is universe[i]
        """
        masks, _ = self._enumeration(len(universe))
        index = {pair: i for i, pair in enumerate(universe)}
        alive = np.ones(masks.shape, dtype=bool)
        for edge in hypergraph.edges:
            internal = [(edge[a], edge[b]) for a in range(len(edge)) for b in range(a + 1, len(edge))]
            if any(pair not in index for pair in internal):
                continue  # can never induce K_r inside this host
            required = np.uint32(sum(1 << index[pair] for pair in internal))
            alive &= (masks & required) != required
        return alive

    def max_undetected(
        self,
        hypergraph: UniformHypergraph,
        host: Optional[Graph] = None,
        limit: int = 64,
    ) -> ExhaustiveResult:
        """
        Largest subgraphs of the host that the hypergraph does not detect.

        Args:
            hypergraph: Restriction hypergraph F
            host: Host graph (K_n when omitted)
            limit: Maximum number of optimal graphs returned

        Returns:
            ExhaustiveResult
        """
        n = hypergraph.n
        host = host if host is not None else Graph.complete(n)
        if host.n != n:
            raise ParameterError(f"hypergraph has {n} vertices but host has {host.n}")
        universe = host.edges()
        alive = self.undetected_mask(hypergraph, universe)
        masks, sizes = self._enumeration(len(universe))
        counts = np.where(alive, sizes, -1)
        best = int(counts.max())
        winners = np.flatnonzero(counts == best)
        optima = tuple(
            Graph.from_edges(n, (universe[i] for i in range(len(universe)) if (int(mask) >> i) & 1))
            for mask in masks[winners[:limit]]
        )
        logger.debug("exhaustive: %d undetected optima with %d edges", len(winners), best)
        return ExhaustiveResult(max_edges=best, optimum_count=int(len(winners)), optima=optima)

    def restricted_turan(self, r: int, n: int, m: int, limit: int = 64) -> ExhaustiveResult:
        """Largest graphs on n vertices with no K_r meeting {0, ..., m-1}."""
        return self.max_undetected(intersection_hypergraph(r, n, m), limit=limit)


def optima_are_turan(result: ExhaustiveResult, r: int) -> bool:
    """True if every reported optimal graph is isomorphic to T_r(n)."""
    return all(is_turan_graph(graph, r) for graph in result.optima)


# Global oracle instance
_oracle = None


def get_oracle() -> ExhaustiveOracle:
    """Get or create the global exhaustive oracle instance."""
    global _oracle
    if _oracle is None:
        _oracle = ExhaustiveOracle()
    return _oracle


def exhaustive_max_undetected(
    hypergraph: UniformHypergraph, host: Optional[Graph] = None, limit: int = 64
) -> ExhaustiveResult:
    """Module-level shortcut to ExhaustiveOracle.max_undetected."""
    return get_oracle().max_undetected(hypergraph, host=host, limit=limit)
