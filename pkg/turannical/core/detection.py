"""
Detection module for Turannical.

A restriction hypergraph F detects a graph G when some hyperedge of F
induces a complete graph K_r in G.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from turannical.core.graph import Graph
from turannical.core.hypergraph import HyperEdge, UniformHypergraph
from turannical.errors import ParameterError, UndefinedRatioError
from turannical.util.bitset import mask_of


@dataclass(frozen=True)
class DetectionResult:
    """
    Outcome of a detection query.

    Attributes:
        detected: True if some hyperedge induces K_r
        witness_hyperedge: Lexicographically first firing hyperedge
        detected_count: Number of firing hyperedges, when it was requested
    """

    detected: bool
    witness_hyperedge: Optional[HyperEdge] = None
    detected_count: Optional[int] = None


def _check_pair(hypergraph: UniformHypergraph, graph: Graph):
    if hypergraph.r < 3:
        raise ParameterError(f"detection needs r >= 3, got r={hypergraph.r}")
    if hypergraph.n != graph.n:
        raise ParameterError(
            f"hypergraph has {hypergraph.n} vertices but graph has {graph.n}"
        )


def induces_clique(rows: Tuple[int, ...], vertices: Iterable[int]) -> bool:
    """
    True if the vertices are pairwise adjacent.

    Args:
        rows: Adjacency bitsets
        vertices: Vertex set (a hyperedge)
    """
    vertices = tuple(vertices)
    mask = mask_of(vertices)
    return all((rows[v] | (1 << v)) & mask == mask for v in vertices)


def detects(hypergraph: UniformHypergraph, graph: Graph, count: bool = False) -> DetectionResult:
    """
    Decide whether F detects G.

    Hyperedges are tested in sorted order; without `count` the scan stops
    at the first firing hyperedge.

    Args:
        hypergraph: Restriction hypergraph F (r >= 3)
        graph: Graph G on the same vertex set
        count: Also count every firing hyperedge

    Returns:
        DetectionResult

    Raises:
        ParameterError: If the vertex counts differ
    """
    _check_pair(hypergraph, graph)
    rows = graph.rows
    witness = None
    fired = 0
    for edge in hypergraph.edges:
        if induces_clique(rows, edge):
            if witness is None:
                witness = edge
                if not count:
                    break
            fired += 1
    return DetectionResult(
        detected=witness is not None,
        witness_hyperedge=witness,
        detected_count=fired if count else None,
    )


def detected_clique_count(hypergraph: UniformHypergraph, graph: Graph) -> int:
    """Number of hyperedges of F that induce K_r in G."""
    _check_pair(hypergraph, graph)
    rows = graph.rows
    return sum(1 for edge in hypergraph.edges if induces_clique(rows, edge))


def denseness_ratio(hypergraph: UniformHypergraph, graph: Graph) -> Fraction:
    """
    Fraction of hyperedges of F that induce K_r in G.

    Raises:
        UndefinedRatioError: If F has no hyperedges
    """
    _check_pair(hypergraph, graph)
    if not hypergraph.edges:
        raise UndefinedRatioError("denseness ratio is undefined for an empty hypergraph")
    return Fraction(detected_clique_count(hypergraph, graph), len(hypergraph.edges))
