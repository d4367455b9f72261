"""
Graph module for Turannical.

Simple undirected graphs on vertices 0..n-1 with one adjacency bitset per
vertex. Graphs are immutable; editing methods return new graphs.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from turannical.errors import ParameterError
from turannical.util.bitset import above, full_mask, iterate_bits, mask_of, popcount

Edge = Tuple[int, int]


def _normalise_edge(u: int, v: int, n: int) -> Edge:
    if u == v:
        raise ParameterError(f"self-loop ({u}, {v}) is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise ParameterError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    Attributes:
        n: Vertex count
        rows: Adjacency bitset of every vertex
    """

    n: int
    rows: Tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise ParameterError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        universe = full_mask(self.n)
        total = 0
        for v, row in enumerate(self.rows):
            if row & ~universe or (row >> v) & 1:
                raise ParameterError(f"adjacency row of vertex {v} is invalid")
            for w in iterate_bits(row):
                if not (self.rows[w] >> v) & 1:
                    raise ParameterError(f"adjacency is not symmetric at ({v}, {w})")
            total += popcount(row)
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """
        Build a graph from an edge list.

        Repeated edges collapse into one.

        Args:
            n: Vertex count
            edges: Pairs (u, v)

        Returns:
            The graph

        Raises:
            ParameterError: On self-loops or out-of-range vertices
        """
        rows = [0] * n
        for edge in edges:
            u, v = _normalise_edge(*edge, n)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        """K_n."""
        universe = full_mask(n)
        return cls(n, tuple(universe ^ (1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph on n vertices."""
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        """True if {u, v} is an edge."""
        return u != v and bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> int:
        """Neighbourhood of v as a bitset."""
        return self.rows[v]

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degree_into(self, v: int, vertices: Iterable[int]) -> int:
        """Number of neighbours of v inside a vertex set."""
        return popcount(self.rows[v] & mask_of(vertices))

    def iter_edges(self) -> Iterator[Edge]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in iterate_bits(row & above(u)):
                yield (u, v)

    def edges(self) -> List[Edge]:
        return list(self.iter_edges())

    def edges_between(self, first: Iterable[int], second: Iterable[int]) -> int:
        """
        e(X, Y): number of edges with one end in X and the other in Y.

        The sets must be disjoint.
        """
        first_mask, second_mask = mask_of(first), mask_of(second)
        if first_mask & second_mask:
            raise ParameterError("edges_between needs disjoint vertex sets")
        return sum(popcount(self.rows[v] & second_mask) for v in iterate_bits(first_mask))

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        """Number of edges of G[S]."""
        mask = mask_of(vertices)
        return sum(popcount(self.rows[v] & mask) for v in iterate_bits(mask)) // 2

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Graph":
        """Copy with extra edges added."""
        rows = list(self.rows)
        for edge in edges:
            u, v = _normalise_edge(*edge, self.n)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edges(self, edges: Iterable[Iterable[int]]) -> "Graph":
        """Copy with edges removed (missing edges are ignored)."""
        rows = list(self.rows)
        for edge in edges:
            u, v = _normalise_edge(*edge, self.n)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def is_subgraph_of(self, other: "Graph") -> bool:
        """True if every edge of this graph is an edge of `other`."""
        if self.n != other.n:
            return False
        return all(row & ~host == 0 for row, host in zip(self.rows, other.rows))

    def adjacency_matrix(self) -> np.ndarray:
        """Symmetric boolean (n, n) adjacency matrix."""
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.iter_edges():
            matrix[u, v] = matrix[v, u] = True
        return matrix


def is_turan_graph(graph: Graph, r: int) -> bool:
    """
    Decide whether a graph is isomorphic to the Turán graph T_r(n).

    T_r(n) is characterised by non-adjacency being an equivalence relation
    with min(n, r-1) classes whose sizes differ by at most one.

    Args:
        graph: Graph to test
        r: Clique order (>= 3)

    Returns:
        True if the graph is a balanced complete (r-1)-partite graph
    """
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")
    n = graph.n
    universe = full_mask(n)
    classes = []
    seen = 0
    for v in range(n):
        if (seen >> v) & 1:
            continue
        cls = universe & ~graph.rows[v]
        # every member must see exactly the complement of the class
        for w in iterate_bits(cls):
            if universe & ~graph.rows[w] != cls:
                return False
        classes.append(popcount(cls))
        seen |= cls
    if len(classes) != min(n, r - 1):
        return False
    return not classes or max(classes) - min(classes) <= 1
