"""
Minimum hitting set (transversal) engine for Turannical.

A graph H on the universe pairs is undetected by a restriction hypergraph
exactly when every relevant hyperedge misses at least one of its internal
pairs in H. Deleting a minimum transversal of the hyperedge pair-sets
therefore leaves a maximum undetected graph.

Pairs are addressed by their index in the instance universe and pair sets
are Python int bitsets over those indices.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from turannical.config.constants import DEFAULT_BUDGET
from turannical.core.graph import Edge
from turannical.errors import ParameterError
from turannical.util.bitset import full_mask, iterate_bits, mask_of, members, popcount

logger = logging.getLogger(__name__)

INFEASIBLE = math.inf


@dataclass(frozen=True)
class HittingSetInstance:
    """
    Hitting set instance over vertex pairs.

    Attributes:
        universe: Candidate deletions, as vertex pairs
        constraints: One pair-index bitset per relevant hyperedge
    """

    universe: Tuple[Edge, ...]
    constraints: Tuple[int, ...]

    def __post_init__(self):
        limit = full_mask(len(self.universe))
        if len(set(self.constraints)) != len(self.constraints):
            raise ParameterError("hitting set constraints must be distinct")
        for index, constraint in enumerate(self.constraints):
            if constraint == 0:
                raise ParameterError(f"constraint {index} is empty")
            if constraint & ~limit:
                raise ParameterError(f"constraint {index} leaves the universe")

    @classmethod
    def from_sets(
        cls, universe: Sequence[Edge], constraints: Iterable[Iterable[int]]
    ) -> "HittingSetInstance":
        """Build an instance from index sets, dropping repeated constraints."""
        seen: Dict[int, None] = {}
        for constraint in constraints:
            seen.setdefault(mask_of(constraint), None)
        return cls(tuple(universe), tuple(seen))

    @property
    def size(self) -> int:
        """Number of universe pairs."""
        return len(self.universe)

    def constraint_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(iterate_bits(c)) for c in self.constraints]

    def is_transversal(self, chosen: int) -> bool:
        """True if the pair bitset meets every constraint."""
        return all(c & chosen for c in self.constraints)

    def pairs(self, chosen: int) -> List[Edge]:
        """Vertex pairs of a pair-index bitset."""
        return [self.universe[i] for i in iterate_bits(chosen)]


@dataclass(frozen=True)
class TransversalResult:
    """
    Result of a transversal search.

    Attributes:
        size: Size of the best transversal found
        lower_bound: Certified lower bound on the minimum
        transversal: Universe indices of the best transversal
        optimal: True when size == lower_bound
        nodes: Search nodes explored
        exhausted: True when the node budget ran out
    """

    size: int
    lower_bound: int
    transversal: Tuple[int, ...]
    optimal: bool
    nodes: int
    exhausted: bool

    @property
    def mask(self) -> int:
        return mask_of(self.transversal)


class _BudgetExhausted(Exception):
    """Raised inside the search when the node budget is spent."""


def packing_bound(constraints: Sequence[int], kept: int = 0) -> float:
    """
    Greedy packing of pairwise-disjoint constraints.

    Each packed constraint needs its own deletion. Constraints with fewer
    free pairs are packed first. Returns infinity if some constraint has
    no free pair left.
    """
    free_sets = []
    for c in constraints:
        free = c & ~kept
        if not free:
            return INFEASIBLE
        free_sets.append(free)
    free_sets.sort(key=lambda f: (popcount(f), f))
    used = 0
    packed = 0
    for free in free_sets:
        if not free & used:
            used |= free
            packed += 1
    return packed


def fractional_bound(constraints: Sequence[int], kept: int = 0) -> float:
    """
    Larger of the degree bound and a greedy fractional packing.

    The degree bound is ceil(|C| / max pair degree). The fractional packing
    gives each constraint the weight min over its free pairs of
    capacity / remaining degree, which keeps every pair's load at most 1.
    """
    if not constraints:
        return 0
    degree: Dict[int, int] = {}
    free_sets = []
    for c in constraints:
        free = c & ~kept
        if not free:
            return INFEASIBLE
        free_sets.append(free)
        for p in iterate_bits(free):
            degree[p] = degree.get(p, 0) + 1
    degree_bound = math.ceil(len(free_sets) / max(degree.values()))

    free_sets.sort(key=lambda f: (popcount(f), f))
    capacity = {p: 1.0 for p in degree}
    remaining = dict(degree)
    total = 0.0
    for free in free_sets:
        pairs = members(free)
        weight = min(capacity[p] / remaining[p] for p in pairs)
        total += weight
        for p in pairs:
            capacity[p] -= weight
            remaining[p] -= 1
    return max(degree_bound, math.ceil(total - 1e-9))


def lower_bound(constraints: Sequence[int], kept: int = 0) -> float:
    """Best admissible bound on the deletions still needed."""
    packed = packing_bound(constraints, kept)
    if packed == INFEASIBLE:
        return INFEASIBLE
    return max(packed, fractional_bound(constraints, kept))


def lexicographic_greedy(instance: HittingSetInstance) -> int:
    """Delete the lowest pair of every constraint that is still unhit."""
    chosen = 0
    for c in instance.constraints:
        if not c & chosen:
            low = c & -c
            chosen |= low
    return chosen


def degree_greedy(instance: HittingSetInstance) -> int:
    """Repeatedly delete the pair hitting most unhit constraints (lowest index on ties)."""
    chosen = 0
    unhit = list(instance.constraints)
    while unhit:
        degree: Dict[int, int] = {}
        for c in unhit:
            for p in iterate_bits(c):
                degree[p] = degree.get(p, 0) + 1
        best = min(degree, key=lambda p: (-degree[p], p))
        chosen |= 1 << best
        unhit = [c for c in unhit if not (c >> best) & 1]
    return chosen


class TransversalSearch:
    """
    Branch-and-bound minimum transversal search.

    The search branches on the unhit constraint with the fewest free pairs
    (lowest index on ties). Its free pairs are tried in increasing order
    and each tried pair is kept (never deleted) in the later branches, so
    no transversal is visited twice.
    """

    def __init__(
        self,
        instance: HittingSetInstance,
        budget: int = DEFAULT_BUDGET,
        target: Optional[int] = None,
        hints: Iterable[int] = (),
    ):
        """
        Initialize the search.

        Args:
            instance: Hitting set instance
            budget: Maximum number of search nodes
            target: Stop as soon as a transversal of at most this size is
                found; the search then only proves or refutes that bound
            hints: Candidate transversals (pair-index bitsets) used as
                starting incumbents when valid
        """
        if budget < 1:
            raise ParameterError(f"budget must be positive, got {budget}")
        self.instance = instance
        self.budget = budget
        self.target = target
        self.nodes = 0
        self.best = full_mask(instance.size)
        self.best_size = instance.size + 1
        candidates = [lexicographic_greedy(instance), degree_greedy(instance)]
        candidates.extend(hints)
        for candidate in candidates:
            if instance.is_transversal(candidate) and popcount(candidate) < self.best_size:
                self.best, self.best_size = candidate, popcount(candidate)

    def _cap(self) -> int:
        if self.target is None:
            return self.best_size
        return min(self.best_size, self.target + 1)

    def _done(self) -> bool:
        return self.target is not None and self.best_size <= self.target

    def _search(self, chosen: int, count: int, kept: int, unhit: List[int]):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if not unhit:
            if count < self.best_size:
                self.best, self.best_size = chosen, count
                logger.debug("incumbent %d after %d nodes", count, self.nodes)
            return
        if count + lower_bound(unhit, kept) >= self._cap():
            return
        branch = min(range(len(unhit)), key=lambda k: popcount(unhit[k] & ~kept))
        free = unhit[branch] & ~kept
        for p in iterate_bits(free):
            rest = [c for c in unhit if not (c >> p) & 1]
            self._search(chosen | (1 << p), count + 1, kept, rest)
            if self._done() or count + 1 >= self._cap():
                return
            kept |= 1 << p

    def run(self) -> TransversalResult:
        """
        Run the search.

        Returns:
            TransversalResult; on budget exhaustion the best incumbent with
            the root lower bound and exhausted=True
        """
        constraints = list(self.instance.constraints)
        root_bound = int(lower_bound(constraints)) if constraints else 0
        exhausted = False
        if not self._done() and root_bound < self._cap():
            try:
                self._search(0, 0, 0, constraints)
            except _BudgetExhausted:
                exhausted = True
                logger.debug("budget of %d nodes exhausted", self.budget)

        if exhausted:
            bound = root_bound
        elif self._done():
            bound = root_bound
        else:
            # the search refuted every transversal below the cap
            bound = max(root_bound, self._cap())
        bound = min(bound, self.best_size)
        logger.debug(
            "transversal search: best=%d bound=%d nodes=%d", self.best_size, bound, self.nodes
        )
        return TransversalResult(
            size=self.best_size,
            lower_bound=bound,
            transversal=members(self.best),
            optimal=bound == self.best_size,
            nodes=self.nodes,
            exhausted=exhausted,
        )


def min_transversal(
    instance: HittingSetInstance,
    budget: int = DEFAULT_BUDGET,
    target: Optional[int] = None,
    hints: Iterable[int] = (),
) -> TransversalResult:
    """
    Minimum transversal of a hitting set instance.

    Args:
        instance: Hitting set instance
        budget: Node budget; exhaustion is reported, never raised
        target: Optional early-exit size (see TransversalSearch)
        hints: Optional starting transversals

    Returns:
        TransversalResult
    """
    return TransversalSearch(instance, budget=budget, target=target, hints=hints).run()
