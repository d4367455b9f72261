"""
Random ensembles for Turannical.

R^(r)(n, p) includes each r-subset independently with probability p and
G(n, q) each pair with probability q. Every draw comes from the Philox
stream of one (master seed, trial) pair; r-subsets are indexed in
lexicographic order.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Literal, Optional

import numpy as np

from turannical.config.constants import SEED_BITS, SPARSE_SAMPLING_THRESHOLD
from turannical.core.graph import Graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.errors import ParameterError
from turannical.util.combinatorics import binomial, checked_int64, unrank_combination
from turannical.util.rng import STREAM_GRAPH, STREAM_HYPERGRAPH, trial_generator

logger = logging.getLogger(__name__)

EnsembleKind = Literal["hypergraph", "graph", "joint"]


def _check_probability(value: float, name: str):
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {value}")


@lru_cache(maxsize=32)
def combination_array(n: int, r: int) -> np.ndarray:
    """All r-subsets of range(n) in lexicographic order as an (N, r) array."""
    checked_int64(binomial(n, r), f"C({n},{r})")
    if binomial(n, r) == 0:
        return np.zeros((0, r), dtype=np.int64)
    return np.fromiter(
        (v for combo in combinations(range(n), r) for v in combo),
        dtype=np.int64,
        count=binomial(n, r) * r,
    ).reshape(-1, r)


def _sample_indices(total: int, probability: float, rng: np.random.Generator) -> np.ndarray:
    """Indices in [0, total) kept independently with the given probability."""
    if probability <= 0.0 or total == 0:
        return np.zeros(0, dtype=np.int64)
    if probability >= 1.0:
        return np.arange(total, dtype=np.int64)
    if probability < SPARSE_SAMPLING_THRESHOLD:
        # geometric gaps between kept indices
        kept = []
        index = -1
        while True:
            index += int(rng.geometric(probability))
            if index >= total:
                break
            kept.append(index)
        return np.asarray(kept, dtype=np.int64)
    return np.flatnonzero(rng.random(total) < probability)


def sample_hypergraph(r: int, n: int, p: float, seed: int, trial: int = 0) -> UniformHypergraph:
    """
    Draw R^(r)(n, p).

    Args:
        r: Uniformity
        n: Vertex count
        p: Hyperedge probability
        seed: 64-bit master seed
        trial: Trial index

    Returns:
        UniformHypergraph; identical inputs give identical output
    """
    _check_probability(p, "p")
    total = checked_int64(binomial(n, r), f"C({n},{r})")
    rng = trial_generator(seed, trial, STREAM_HYPERGRAPH)
    indices = _sample_indices(total, p, rng)
    if p < SPARSE_SAMPLING_THRESHOLD:
        edges = tuple(unrank_combination(int(i), n, r) for i in indices)
    else:
        edges = tuple(tuple(int(v) for v in row) for row in combination_array(n, r)[indices])
    return UniformHypergraph(r, n, edges)


def sample_graph(n: int, q: float, seed: int, trial: int = 0) -> Graph:
    """Draw G(n, q) from the graph stream of (seed, trial)."""
    _check_probability(q, "q")
    total = binomial(n, 2)
    rng = trial_generator(seed, trial, STREAM_GRAPH)
    indices = _sample_indices(total, q, rng)
    pairs = combination_array(n, 2)[indices] if len(indices) else ()
    return Graph.from_edges(n, (tuple(int(v) for v in pair) for pair in pairs))


@dataclass(frozen=True)
class EnsembleSpec:
    """
    Random ensemble parameters.

    Attributes:
        kind: "hypergraph", "graph" or "joint"
        r: Uniformity
        n: Vertex count
        p: Hyperedge probability (hypergraph and joint kinds)
        q: Edge probability (graph and joint kinds)
        master_seed: 64-bit seed
    """

    kind: EnsembleKind
    r: int
    n: int
    p: Optional[float] = None
    q: Optional[float] = None
    master_seed: int = 0

    def __post_init__(self):
        if self.kind not in ("hypergraph", "graph", "joint"):
            raise ParameterError(f"unknown ensemble kind '{self.kind}'")
        if self.r < 3:
            raise ParameterError(f"r must be at least 3, got {self.r}")
        if self.n < 1:
            raise ParameterError(f"n must be positive, got {self.n}")
        if not 0 <= self.master_seed < 2**SEED_BITS:
            raise ParameterError(f"seed {self.master_seed} is not a 64-bit unsigned integer")
        if self.kind in ("hypergraph", "joint"):
            if self.p is None:
                raise ParameterError(f"{self.kind} ensembles need p")
            _check_probability(self.p, "p")
        if self.kind in ("graph", "joint"):
            if self.q is None:
                raise ParameterError(f"{self.kind} ensembles need q")
            _check_probability(self.q, "q")


@dataclass(frozen=True)
class CoupledSample:
    """
    One uniform per r-subset and per pair, shared by every grid point.

    The hypergraph at p is {X : U_X < p} and the graph at q is
    {e : U_e < q}, so samples at p1 <= p2 are nested.
    """

    r: int
    n: int
    hyperedge_uniforms: np.ndarray
    pair_uniforms: Optional[np.ndarray]

    @classmethod
    def draw(
        cls, r: int, n: int, seed: int, trial: int, with_graph: bool = False
    ) -> "CoupledSample":
        """Draw the uniforms of one trial."""
        total = checked_int64(binomial(n, r), f"C({n},{r})")
        hyper = trial_generator(seed, trial, STREAM_HYPERGRAPH).random(total)
        pairs = None
        if with_graph:
            pairs = trial_generator(seed, trial, STREAM_GRAPH).random(binomial(n, 2))
        return cls(r, n, hyper, pairs)

    def hypergraph_at(self, p: float) -> UniformHypergraph:
        _check_probability(p, "p")
        rows = combination_array(self.n, self.r)[self.hyperedge_uniforms < p]
        return UniformHypergraph(self.r, self.n, tuple(tuple(int(v) for v in row) for row in rows))

    def graph_at(self, q: float) -> Graph:
        if self.pair_uniforms is None:
            raise ParameterError("this coupled sample was drawn without a graph stream")
        _check_probability(q, "q")
        pairs = combination_array(self.n, 2)[self.pair_uniforms < q]
        return Graph.from_edges(self.n, (tuple(int(v) for v in pair) for pair in pairs))
