"""
Degree statistics for Turannical.

deg_i(u, v, G) counts hyperedges through u and v spanning at least i
edges of G other than uv. μ_i(F, q) is the expectation of
Σ_{u≠v} deg_i(u, v, G)² over G = G(n, q), summed over ordered pairs.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Optional

import numpy as np
from scipy import stats

from turannical.config.constants import CONFIDENCE_LEVEL
from turannical.core.ensembles import sample_graph
from turannical.core.graph import Graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.errors import ParameterError
from turannical.util.combinatorics import binomial, checked_int64
from turannical.util.stats import mean_interval

logger = logging.getLogger(__name__)


def _check_order(hypergraph: UniformHypergraph, i: int):
    top = binomial(hypergraph.r, 2) - 1
    if not 1 <= i <= top:
        raise ParameterError(f"i must lie in [1, {top}] for r={hypergraph.r}, got {i}")


def deg_i_matrix(hypergraph: UniformHypergraph, graph: Graph, i: int) -> np.ndarray:
    """
    Upper-triangular (n, n) matrix of deg_i(u, v, G) for u < v.

    Args:
        hypergraph: Restriction hypergraph F
        graph: Graph G on the same vertices
        i: Minimum number of spanned edges

    Returns:
        int64 matrix; entry [u, v] with u < v is deg_i(u, v, G)
    """
    if hypergraph.n != graph.n:
        raise ParameterError(f"hypergraph has {hypergraph.n} vertices but graph has {graph.n}")
    n = hypergraph.n
    checked_int64(n * n * binomial(max(n - 2, 0), hypergraph.r - 2), "deg_i accumulator")
    degrees = np.zeros((n, n), dtype=np.int64)
    if not hypergraph.edges:
        return degrees
    edges = hypergraph.edge_array()
    adjacency = graph.adjacency_matrix()
    slots = list(combinations(range(hypergraph.r), 2))
    present = np.stack([adjacency[edges[:, a], edges[:, b]] for a, b in slots], axis=1)
    spanned = present.sum(axis=1)
    for column, (a, b) in enumerate(slots):
        counted = (spanned - present[:, column]) >= i
        np.add.at(degrees, (edges[counted, a], edges[counted, b]), 1)
    return degrees


def sum_deg_i_squared(hypergraph: UniformHypergraph, graph: Graph, i: int) -> int:
    """Σ over ordered pairs u ≠ v of deg_i(u, v, G)²."""
    degrees = deg_i_matrix(hypergraph, graph, i)
    checked_int64(2 * int(degrees.max(initial=0)) ** 2 * graph.n**2, "sum of deg_i squares")
    return int(2 * np.sum(degrees * degrees))


@dataclass(frozen=True)
class MuEstimate:
    """
    Monte Carlo estimate of μ_i(F, q).

    Attributes:
        mean: Sample mean of Σ deg_i²
        ci_lo: Lower end of the t interval
        ci_hi: Upper end of the t interval
        trials: Number of samples
    """

    mean: float
    ci_lo: float
    ci_hi: float
    trials: int


def mu_i_estimate(
    hypergraph: UniformHypergraph,
    q: float,
    i: int,
    trials: int,
    seed: int,
    level: float = CONFIDENCE_LEVEL,
) -> MuEstimate:
    """
    Estimate μ_i(F, q) from seeded G(n, q) samples.

    Trial t uses the graph stream of (seed, t).

    Args:
        hypergraph: Restriction hypergraph F
        q: Edge probability
        i: 1 <= i <= C(r,2) - 1
        trials: Number of samples
        seed: 64-bit master seed
        level: Confidence level

    Returns:
        MuEstimate
    """
    _check_order(hypergraph, i)
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"q must lie in [0, 1], got {q}")
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    samples = [
        sum_deg_i_squared(hypergraph, sample_graph(hypergraph.n, q, seed, trial), i)
        for trial in range(trials)
    ]
    mean, low, high = mean_interval(samples, level)
    logger.debug("mu_%d estimate over %d trials: %g", i, trials, mean)
    return MuEstimate(mean=mean, ci_lo=low, ci_hi=high, trials=trials)


def pair_intersection_counts(hypergraph: UniformHypergraph) -> Dict[int, int]:
    """
    Ordered pairs of hyperedges meeting in exactly j vertices, j = 2..r.

    The count for j = r is the number of hyperedges (each paired with
    itself).
    """
    r = hypergraph.r
    counts = {j: 0 for j in range(2, r + 1)}
    if not hypergraph.edges:
        return counts
    incidence = np.zeros((len(hypergraph.edges), hypergraph.n), dtype=np.int64)
    rows = np.repeat(np.arange(len(hypergraph.edges)), r)
    incidence[rows, hypergraph.edge_array().ravel()] = 1
    overlaps = np.bincount((incidence @ incidence.T).ravel(), minlength=r + 1)
    for j in range(2, r + 1):
        counts[j] = int(overlaps[j])
    return counts


def _tail(trials: int, q: float, at_least: int) -> float:
    """P(Bin(trials, q) >= at_least)."""
    if at_least <= 0:
        return 1.0
    return float(stats.binom.sf(at_least - 1, trials, q))


def mu_i_exact(hypergraph: UniformHypergraph, q: float, i: int) -> float:
    """
    Exact μ_i(F, q).

    Two hyperedges through u and v that share j vertices share C(j,2)-1
    pairs besides uv and own C(r,2)-C(j,2) pairs each, so both count
    towards deg_i(u, v) with probability
    Σ_k P(Bin(C(j,2)-1, q) = k) · P(Bin(C(r,2)-C(j,2), q) >= i-k)².
    Each such ordered pair of hyperedges contributes j(j-1) ordered
    vertex pairs.
    """
    _check_order(hypergraph, i)
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"q must lie in [0, 1], got {q}")
    r = hypergraph.r
    pairs = binomial(r, 2)
    total = 0.0
    for j, count in pair_intersection_counts(hypergraph).items():
        if not count:
            continue
        shared = binomial(j, 2) - 1
        private = pairs - binomial(j, 2)
        joint = sum(
            float(stats.binom.pmf(k, shared, q)) * _tail(private, q, i - k) ** 2
            for k in range(shared + 1)
        )
        total += count * j * (j - 1) * joint
    return total


@dataclass(frozen=True)
class BoundednessReport:
    """
    μ_i against K q^{2i} e(F)² / n².

    Attributes:
        estimate: Monte Carlo estimate
        exact: Exact μ_i
        bound: K q^{2i} e(F)² / n²
        holds: Upper CI end is within the bound
        exact_holds: Exact value is within the bound
    """

    estimate: MuEstimate
    exact: float
    bound: float
    holds: bool
    exact_holds: bool


def boundedness_check(
    hypergraph: UniformHypergraph,
    q: float,
    constant: float,
    i: int = 1,
    trials: int = 100,
    seed: int = 0,
    level: Optional[float] = None,
) -> BoundednessReport:
    """
    Compare μ_i(F, q) with K q^{2i} e(F)² / n².

    Args:
        hypergraph: Restriction hypergraph F
        q: Edge probability
        constant: K
        i: Statistic order
        trials: Monte Carlo samples
        seed: 64-bit master seed
        level: Confidence level (default CONFIDENCE_LEVEL)

    Returns:
        BoundednessReport
    """
    if constant < 0:
        raise ParameterError(f"K must be non-negative, got {constant}")
    estimate = mu_i_estimate(
        hypergraph, q, i, trials, seed, level if level is not None else CONFIDENCE_LEVEL
    )
    exact = mu_i_exact(hypergraph, q, i)
    n = hypergraph.n
    bound = constant * q ** (2 * i) * len(hypergraph.edges) ** 2 / (n * n) if n else 0.0
    return BoundednessReport(
        estimate=estimate,
        exact=exact,
        bound=bound,
        holds=estimate.ci_hi <= bound,
        exact_holds=exact <= bound,
    )
