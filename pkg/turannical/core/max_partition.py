"""
Maximum k-partition (max k-cut) for Turannical.

Exact branch-and-bound for small graphs, deterministic local search above
EXACT_PARTITION_MAX_N vertices.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from turannical.config.constants import DEFAULT_BUDGET, EXACT_PARTITION_MAX_N
from turannical.core.graph import Graph
from turannical.errors import ParameterError
from turannical.util.bitset import mask_of, members, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionResult:
    """
    Best k-partition found.

    Attributes:
        value: Number of edges crossing the partition
        parts: k vertex tuples (some may be empty)
        optimal: True if value is proven maximum
        nodes: Branch-and-bound nodes explored (0 for local search)
    """

    value: int
    parts: Tuple[Tuple[int, ...], ...]
    optimal: bool
    nodes: int = 0

    def assignment(self, n: int) -> List[int]:
        """Part index of every vertex."""
        labels = [0] * n
        for index, part in enumerate(self.parts):
            for v in part:
                labels[v] = index
        return labels


def crossing_edges(graph: Graph, labels: Sequence[int]) -> int:
    """Edges whose endpoints carry different labels."""
    return sum(1 for u, v in graph.iter_edges() if labels[u] != labels[v])


def _parts_from_labels(labels: Sequence[int], k: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(v for v, label in enumerate(labels) if label == part) for part in range(k))


def _improve(graph: Graph, labels: List[int], k: int) -> List[int]:
    """Single-vertex moves while some move increases the cut."""
    n = graph.n
    masks = [mask_of(v for v in range(n) if labels[v] == part) for part in range(k)]
    improved = True
    while improved:
        improved = False
        for v in range(n):
            row = graph.rows[v]
            here = labels[v]
            inside = popcount(row & masks[here])
            best_part, best_inside = here, inside
            for part in range(k):
                if part == here:
                    continue
                there = popcount(row & masks[part])
                if there < best_inside:
                    best_part, best_inside = part, there
            if best_part != here:
                masks[here] &= ~(1 << v)
                masks[best_part] |= 1 << v
                labels[v] = best_part
                improved = True
    return labels


def _greedy_labels(graph: Graph, k: int) -> List[int]:
    labels = [0] * graph.n
    masks = [0] * k
    for v in range(graph.n):
        row = graph.rows[v]
        part = min(range(k), key=lambda j: (popcount(row & masks[j]), j))
        labels[v] = part
        masks[part] |= 1 << v
    return labels


def local_search_partition(graph: Graph, k: int) -> PartitionResult:
    """
    Deterministic local search for max k-cut.

    Starts from the v mod k labelling and from a greedy labelling, improves
    both by single-vertex moves and keeps the better.
    """
    starts = [[v % k for v in range(graph.n)], _greedy_labels(graph, k)]
    best_labels: Optional[List[int]] = None
    best_value = -1
    for start in starts:
        labels = _improve(graph, list(start), k)
        value = crossing_edges(graph, labels)
        if value > best_value:
            best_labels, best_value = labels, value
    return PartitionResult(
        value=best_value,
        parts=_parts_from_labels(best_labels, k),
        optimal=best_value == graph.edge_count,
    )


class _BudgetExhausted(Exception):
    pass


class PartitionSearch:
    """
    Branch-and-bound over vertex-to-part assignments.

    Vertices are assigned in decreasing degree order; a vertex may only open
    the first unused part, which removes part relabelling symmetry. The
    bound adds, for every unassigned vertex, its edges to assigned vertices
    minus the fewest it must keep inside one part, plus every edge among
    unassigned vertices.
    """

    def __init__(self, graph: Graph, k: int, budget: int, incumbent: PartitionResult):
        self.graph = graph
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
        self.best_value = incumbent.value
        self.best_labels = incumbent.assignment(graph.n)

    def _bound(self, masks: List[int], unassigned: int) -> int:
        rows = self.graph.rows
        extra = 0
        inner = 0
        for v in members(unassigned):
            row = rows[v]
            to_parts = [popcount(row & mask) for mask in masks]
            extra += sum(to_parts) - min(to_parts)
            inner += popcount(row & unassigned)
        return extra + inner // 2

    def _search(self, depth: int, masks: List[int], used: int, value: int, unassigned: int):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if depth == len(self.order):
            if value > self.best_value:
                self.best_value = value
                labels = [0] * self.graph.n
                for part, mask in enumerate(masks):
                    for v in members(mask):
                        labels[v] = part
                self.best_labels = labels
            return
        if value + self._bound(masks, unassigned) <= self.best_value:
            return
        v = self.order[depth]
        row = self.graph.rows[v]
        rest = unassigned & ~(1 << v)
        assigned_neighbours = sum(popcount(row & mask) for mask in masks)
        for part in range(min(used + 1, self.k)):
            gain = assigned_neighbours - popcount(row & masks[part])
            masks[part] |= 1 << v
            self._search(depth + 1, masks, max(used, part + 1), value + gain, rest)
            masks[part] &= ~(1 << v)

    def run(self) -> PartitionResult:
        exhausted = False
        try:
            self._search(0, [0] * self.k, 0, 0, (1 << self.graph.n) - 1)
        except _BudgetExhausted:
            exhausted = True
            logger.debug("partition budget of %d nodes exhausted", self.budget)
        return PartitionResult(
            value=self.best_value,
            parts=_parts_from_labels(self.best_labels, self.k),
            optimal=not exhausted or self.best_value == self.graph.edge_count,
            nodes=self.nodes,
        )


def max_partition_edges(
    graph: Graph, k: int, budget: int = DEFAULT_BUDGET
) -> PartitionResult:
    """
    Maximum number of edges crossing a k-partition.

    Args:
        graph: Graph G
        k: Number of parts (>= 2)
        budget: Node budget of the exact search

    Returns:
        PartitionResult; exact for n <= EXACT_PARTITION_MAX_N unless the
        budget runs out, local search otherwise

    Raises:
        ParameterError: If k < 2
    """
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    incumbent = local_search_partition(graph, k)
    if incumbent.optimal or graph.n > EXACT_PARTITION_MAX_N:
        return incumbent
    return PartitionSearch(graph, k, budget, incumbent).run()
