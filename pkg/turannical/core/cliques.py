"""
Clique enumeration and counting for Turannical.

Cliques of a fixed order r are grown by intersecting candidate bitsets;
only vertices larger than the last one chosen stay candidates, so each
clique is produced once and in lexicographic order.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from turannical.core.graph import Edge, Graph
from turannical.errors import ParameterError
from turannical.util.bitset import full_mask, popcount

Clique = Tuple[int, ...]


@dataclass(frozen=True)
class CliqueSet:
    """
    All copies of K_r in a reference graph.

    Attributes:
        r: Clique order
        members: Sorted r-tuples, lexicographic order
    """

    r: int
    members: Tuple[Clique, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Clique]:
        return iter(self.members)


def _grow(rows: Tuple[int, ...], prefix: Clique, candidates: int, need: int, out: List[Clique]):
    if need == 0:
        out.append(prefix)
        return
    while candidates and popcount(candidates) >= need:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        _grow(rows, prefix + (v,), candidates & rows[v], need - 1, out)


def count_cliques_within(rows: Tuple[int, ...], candidates: int, need: int) -> int:
    """
    Number of `need`-cliques inside a candidate bitset.

    Args:
        rows: Adjacency bitsets
        candidates: Vertex set to search
        need: Clique order (>= 0)

    Returns:
        Clique count (1 for need == 0)
    """
    if need == 0:
        return 1
    if need == 1:
        return popcount(candidates)
    if need == 2:
        total = 0
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            total += popcount(rest & rows[v])
        return total
    total = 0
    while candidates and popcount(candidates) >= need:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        total += count_cliques_within(rows, candidates & rows[v], need - 1)
    return total


def _check_order(graph: Graph, r: int):
    if r < 2:
        raise ParameterError(f"clique order must be at least 2, got {r}")


def enumerate_cliques(graph: Graph, r: int) -> CliqueSet:
    """
    List every r-subset inducing K_r.

    Args:
        graph: Graph G
        r: Clique order, 2 <= r <= n

    Returns:
        CliqueSet in lexicographic order

    Raises:
        ParameterError: If r is out of range
    """
    _check_order(graph, r)
    if r > graph.n:
        raise ParameterError(f"clique order {r} exceeds the vertex count {graph.n}")
    out: List[Clique] = []
    _grow(graph.rows, (), full_mask(graph.n), r, out)
    return CliqueSet(r, tuple(out))


def count_cliques(graph: Graph, r: int) -> int:
    """Number of copies of K_r (0 when r > n)."""
    _check_order(graph, r)
    return count_cliques_within(graph.rows, full_mask(graph.n), r)


def clique_count_at_vertex(graph: Graph, r: int, v: int) -> int:
    """
    Number of copies of K_r containing a vertex.

    Args:
        graph: Graph G
        r: Clique order (>= 2)
        v: Vertex

    Returns:
        Count of K_r copies through v
    """
    _check_order(graph, r)
    if not 0 <= v < graph.n:
        raise ParameterError(f"vertex {v} is outside 0..{graph.n - 1}")
    return count_cliques_within(graph.rows, graph.rows[v], r - 1)


def book_size(graph: Graph, r: int, edge: Edge) -> int:
    """
    Size of the book on an edge: copies of K_r containing both endpoints.

    Raises:
        ParameterError: If the pair is not an edge of the graph
    """
    _check_order(graph, r)
    u, v = edge
    if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
        raise ParameterError(f"({u}, {v}) is not an edge of the graph")
    return count_cliques_within(graph.rows, graph.rows[u] & graph.rows[v], r - 2)


def max_book(graph: Graph, r: int) -> Tuple[Optional[Edge], int]:
    """
    Edge with the largest book.

    Returns:
        (edge, size) for the lexicographically first maximiser, or
        (None, 0) for an edgeless graph
    """
    _check_order(graph, r)
    best_edge: Optional[Edge] = None
    best = -1
    for u, v in graph.iter_edges():
        size = count_cliques_within(graph.rows, graph.rows[u] & graph.rows[v], r - 2)
        if size > best:
            best_edge, best = (u, v), size
    return best_edge, max(best, 0)


def vertex_clique_counts(graph: Graph, r: int) -> List[int]:
    """clique_count_at_vertex for every vertex."""
    return [clique_count_at_vertex(graph, r, v) for v in range(graph.n)]


def has_clique(graph: Graph, r: int) -> bool:
    """True if G contains any K_r."""
    _check_order(graph, r)
    return _first_clique(graph.rows, full_mask(graph.n), r)


def _first_clique(rows: Tuple[int, ...], candidates: int, need: int) -> bool:
    if need == 0:
        return True
    while candidates and popcount(candidates) >= need:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        if _first_clique(rows, candidates & rows[v], need - 1):
            return True
    return False
