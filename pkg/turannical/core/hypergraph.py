"""
Uniform hypergraph module for Turannical.

An r-uniform restriction hypergraph on vertices 0..n-1. Edges are stored as
sorted tuples in lexicographic order, without duplicates.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Tuple

import numpy as np

from turannical.core.graph import Graph
from turannical.errors import ParameterError
from turannical.util.bitset import above, iterate_bits, mask_of, popcount

HyperEdge = Tuple[int, ...]


def _canonical_edge(edge: Iterable[int], r: int, n: int) -> HyperEdge:
    vertices = tuple(sorted(edge))
    if len(vertices) != r:
        raise ParameterError(f"hyperedge {list(vertices)} does not have {r} vertices")
    if len(set(vertices)) != r:
        raise ParameterError(f"hyperedge {list(vertices)} repeats a vertex")
    if vertices and not (0 <= vertices[0] and vertices[-1] < n):
        raise ParameterError(f"hyperedge {list(vertices)} has a vertex outside 0..{n - 1}")
    return vertices


@dataclass(frozen=True)
class UniformHypergraph:
    """
    r-uniform hypergraph.

    Links of restriction hypergraphs may be 1-uniform, so r >= 1 is
    accepted here; detection itself needs r >= 3.

    Attributes:
        r: Uniformity
        n: Vertex count
        edges: Sorted, duplicate-free tuple of sorted r-tuples
    """

    r: int
    n: int
    edges: Tuple[HyperEdge, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ParameterError(f"uniformity must be at least 1, got {self.r}")
        if self.n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {self.n}")
        previous = None
        for edge in self.edges:
            if _canonical_edge(edge, self.r, self.n) != edge:
                raise ParameterError(f"hyperedge {list(edge)} is not sorted")
            if previous is not None and edge <= previous:
                raise ParameterError(
                    f"hyperedges must be sorted and distinct; {list(edge)} follows {list(previous)}"
                )
            previous = edge

    @classmethod
    def from_edges(cls, r: int, n: int, edges: Iterable[Iterable[int]]) -> "UniformHypergraph":
        """
        Build a hypergraph from any edge collection.

        Vertices inside an edge may come in any order and repeated edges
        collapse into one.

        Raises:
            ParameterError: If an edge has the wrong size, repeats a vertex
                or leaves the vertex range
        """
        canonical = {_canonical_edge(edge, r, n) for edge in edges}
        return cls(r, n, tuple(sorted(canonical)))

    @classmethod
    def complete(cls, r: int, n: int) -> "UniformHypergraph":
        """K^(r)_n: every r-subset is a hyperedge."""
        return cls(r, n, tuple(combinations(range(n), r)))

    @classmethod
    def empty(cls, r: int, n: int) -> "UniformHypergraph":
        return cls(r, n, ())

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> FrozenSet[HyperEdge]:
        return frozenset(self.edges)

    def edges_containing(self, vertices: Iterable[int]) -> List[HyperEdge]:
        """Hyperedges that contain every vertex of the given set."""
        required = set(vertices)
        return [edge for edge in self.edges if required.issubset(edge)]

    def pair_link_size(self, u: int, v: int) -> int:
        """e(link(u, v)): hyperedges through both u and v."""
        return sum(1 for edge in self.edges if u in edge and v in edge)

    def pair_link_sizes(self) -> np.ndarray:
        """
        (n, n) matrix of pair link sizes.

        Entry [u, v] counts hyperedges containing u and v; the diagonal
        holds vertex degrees.
        """
        counts = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges and self.r >= 2:
            array = self.edge_array()
            for a, b in combinations(range(self.r), 2):
                np.add.at(counts, (array[:, a], array[:, b]), 1)
            counts = counts + counts.T
        if self.edges:
            np.add.at(counts, (self.edge_array().ravel(),) * 2, 1)
        return counts

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "UniformHypergraph":
        """Copy with extra hyperedges."""
        return UniformHypergraph.from_edges(self.r, self.n, list(self.edges) + list(edges))

    def edge_array(self) -> np.ndarray:
        """Hyperedges as an (E, r) int64 array."""
        if not self.edges:
            return np.zeros((0, self.r), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64)


def link(hypergraph: UniformHypergraph, vertices: Iterable[int]) -> UniformHypergraph:
    """
    Link hypergraph of a vertex set.

    Args:
        hypergraph: r-uniform hypergraph F
        vertices: Set X with |X| < r

    Returns:
        (r-|X|)-uniform hypergraph {Y : Y ∪ X ∈ E(F)}

    Raises:
        ParameterError: If |X| >= r or X leaves the vertex range
    """
    removed = set(vertices)
    if len(removed) >= hypergraph.r:
        raise ParameterError(
            f"link needs fewer than r={hypergraph.r} vertices, got {len(removed)}"
        )
    for v in removed:
        if not 0 <= v < hypergraph.n:
            raise ParameterError(f"vertex {v} is outside 0..{hypergraph.n - 1}")
    edges = [
        tuple(w for w in edge if w not in removed)
        for edge in hypergraph.edges
        if removed.issubset(edge)
    ]
    return UniformHypergraph.from_edges(hypergraph.r - len(removed), hypergraph.n, edges)


def deg_i(hypergraph: UniformHypergraph, graph: Graph, u: int, v: int, i: int) -> int:
    """
    Number of hyperedges through u and v spanning at least i graph edges.

    The pair {u, v} itself is never counted among the spanned edges, and
    the value is 0 when u == v.

    Args:
        hypergraph: Restriction hypergraph F
        graph: Graph G on the same vertex set
        u: First vertex
        v: Second vertex
        i: Minimum number of spanned G-edges (>= 0)

    Returns:
        deg_i(u, v, G)
    """
    if i < 0:
        raise ParameterError(f"i must be non-negative, got {i}")
    if hypergraph.n != graph.n:
        raise ParameterError(
            f"hypergraph has {hypergraph.n} vertices but graph has {graph.n}"
        )
    if u == v:
        return 0
    own = 1 if graph.has_edge(u, v) else 0
    count = 0
    for edge in hypergraph.edges:
        if u not in edge or v not in edge:
            continue
        mask = mask_of(edge)
        spanned = sum(popcount(graph.rows[w] & mask & above(w)) for w in iterate_bits(mask))
        if spanned - own >= i:
            count += 1
    return count
