"""
Extremal numbers and constructions for Turannical.

Turán numbers, the canonical Turán graph (vertex v in part v mod (r-1)),
the restricted extremal function turm(r, n, m) with its extremal graph,
and intersection restriction hypergraphs.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple

from turannical.config.constants import (
    PROPERTY_EPS,
    PROPERTY_EPS_FOR_G,
    PROPERTY_EXACT,
    PROPERTY_KINDS,
)
from turannical.core.cliques import clique_count_at_vertex
from turannical.core.graph import Graph
from turannical.core.hypergraph import UniformHypergraph
from turannical.errors import ConstructionError, ParameterError
from turannical.util.combinatorics import binomial
from turannical.util.numeric import Number, as_fraction

logger = logging.getLogger(__name__)


def _check_r(r: int):
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")


def _check_n(n: int):
    if n < 0:
        raise ParameterError(f"n must be non-negative, got {n}")


def _check_m(n: int, m: int):
    if not 0 <= m <= n:
        raise ParameterError(f"m must satisfy 0 <= m <= n={n}, got {m}")


def turan_parts(r: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Canonical parts of T_r(n).

    Args:
        r: Clique order (>= 3)
        n: Vertex count

    Returns:
        r-1 tuples; part i holds the vertices congruent to i mod (r-1)
    """
    _check_r(r)
    _check_n(n)
    return tuple(tuple(range(i, n, r - 1)) for i in range(r - 1))


def turan_number(r: int, n: int) -> int:
    """
    t_r(n), the edge count of the balanced complete (r-1)-partite graph.

    Examples:
        >>> turan_number(3, 5)
        6
    """
    _check_r(r)
    _check_n(n)
    inside = sum(binomial(len(part), 2) for part in turan_parts(r, n))
    return binomial(n, 2) - inside


def turan_graph(r: int, n: int) -> Graph:
    """Canonical T_r(n): u ~ v iff u and v differ mod (r-1)."""
    _check_r(r)
    _check_n(n)
    k = r - 1
    rows = []
    for v in range(n):
        same = 0
        for w in range(v % k, n, k):
            same |= 1 << w
        rows.append(((1 << n) - 1) & ~same)
    return Graph(n, tuple(rows))


def turan_increment_identity_check(r: int, n: int) -> bool:
    """
    Check the two Turán increment identities at (r, n).

    t_r(n+1) - t_r(n) = n - floor(n/(r-1)) and
    t_r(n+r) - t_r(n) = (r-1)n + C(r,2) - floor((n+r-1)/(r-1)).
    """
    _check_r(r)
    _check_n(n)
    base = turan_number(r, n)
    single = turan_number(r, n + 1) - base == n - n // (r - 1)
    block = turan_number(r, n + r) - base == (
        (r - 1) * n + binomial(r, 2) - (n + r - 1) // (r - 1)
    )
    return single and block


def turm(r: int, n: int, m: int) -> int:
    """
    Maximum edge count of an n-vertex graph in which no K_r meets a fixed m-set.

    Args:
        r: Clique order (>= 3)
        n: Vertex count
        m: Size of the restricted set, 0 <= m <= n

    Returns:
        t_r(n) if n <= (r-1)m, else C(n,2) - nm + (r-1)C(m+1,2)
    """
    _check_r(r)
    _check_m(n, m)
    if n <= (r - 1) * m:
        return turan_number(r, n)
    return binomial(n, 2) - n * m + (r - 1) * binomial(m + 1, 2)


def turm_graph(r: int, n: int, m: int) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Extremal graph for turm(r, n, m) with its restricted set M.

    For n <= (r-1)m this is T_r(n). Otherwise the first (r-1)m vertices
    form T_r((r-1)m) and the remaining vertices are joined to each other
    and to every core vertex outside M. M is always {0, ..., m-1}, which
    meets every part of the core as evenly as possible.

    Returns:
        (graph, M)

    Raises:
        ConstructionError: If the built graph has a K_r through M or the
            wrong edge count
    """
    _check_r(r)
    _check_m(n, m)
    if m == 0:
        return Graph.complete(n), ()
    restricted = tuple(range(m))
    if n <= (r - 1) * m:
        graph = turan_graph(r, n)
    else:
        core = (r - 1) * m
        core_graph = turan_graph(r, core)
        full = (1 << n) - 1
        restricted_mask = (1 << m) - 1
        rows = list(core_graph.rows) + [0] * (n - core)
        for v in range(core, n):
            row = full & ~restricted_mask & ~(1 << v)
            rows[v] = row
            for w in range(m, n):
                if w != v:
                    rows[w] |= 1 << v
        graph = Graph(n, tuple(rows))

    expected = turm(r, n, m)
    if graph.edge_count != expected:
        raise ConstructionError(
            f"turm_graph({r}, {n}, {m}) has {graph.edge_count} edges, expected {expected}"
        )
    for v in restricted:
        if clique_count_at_vertex(graph, r, v):
            raise ConstructionError(f"turm_graph({r}, {n}, {m}) has a K_{r} through vertex {v}")
    logger.debug("turm_graph(%d, %d, %d): %d edges", r, n, m, expected)
    return graph, restricted


def intersection_hypergraph(r: int, n: int, m: int) -> UniformHypergraph:
    """I^(r)(n, m): every r-subset meeting {0, ..., m-1}."""
    _check_r(r)
    _check_m(n, m)
    edges = tuple(edge for edge in combinations(range(n), r) if edge[0] < m)
    return UniformHypergraph(r, n, edges)


@dataclass(frozen=True)
class DensityBounds:
    """
    Hyperedge counts below which a restriction hypergraph cannot succeed.

    Attributes:
        not_turannical_below: fewer hyperedges than this rules out the
            exact property
        not_eps_turannical_at_most: at most this many hyperedges rules out
            the ε-property (None when ε is not given)
    """

    not_turannical_below: Fraction
    not_eps_turannical_at_most: Optional[Fraction]

    def rules_out_exact(self, edge_count: int) -> bool:
        return edge_count < self.not_turannical_below

    def rules_out_eps(self, edge_count: int) -> bool:
        if self.not_eps_turannical_at_most is None:
            return False
        return edge_count <= self.not_eps_turannical_at_most


def density_bounds(r: int, n: int, eps: Optional[Number] = None) -> DensityBounds:
    """
    Edge-count bounds for sparse restriction hypergraphs.

    A hypergraph with fewer than n(n-1)(n-2)/(r(r-1)^2(r-2)) hyperedges is
    not Turánnical; one with at most (1-rε)n^2/(4r) hyperedges is not
    ε-Turánnical.

    Args:
        r: Uniformity (>= 3)
        n: Vertex count
        eps: Optional ε >= 0

    Returns:
        DensityBounds with exact rational thresholds
    """
    _check_r(r)
    _check_n(n)
    exact = Fraction(n * (n - 1) * (n - 2), r * (r - 1) ** 2 * (r - 2))
    eps_bound = None
    if eps is not None:
        value = as_fraction(eps)
        if value < 0:
            raise ParameterError(f"eps must be non-negative, got {eps}")
        eps_bound = (1 - r * value) * n * n / (4 * r)
    return DensityBounds(exact, eps_bound)


def theta_q(r: int, n: int, q: float) -> float:
    """Joint threshold scale (n q^{(r+1)/2})^{2-r}; infinite at q = 0."""
    _check_r(r)
    if not 0.0 <= q <= 1.0:
        raise ParameterError(f"q must be a probability, got {q}")
    base = n * q ** ((r + 1) / 2)
    if base == 0:
        return math.inf
    return base ** (2 - r)


def theta_p(r: int, n: int, p: float) -> float:
    """Dual scale (n p^{1/(r-2)})^{-2/(r+1)}; infinite at p = 0."""
    _check_r(r)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must be a probability, got {p}")
    base = n * p ** (1 / (r - 2))
    if base == 0:
        return math.inf
    return base ** (-2 / (r + 1))


def predicted_exponent(r: int, kind: str) -> Optional[int]:
    """
    Exponent a in the threshold p* ~ n^a.

    Returns:
        2-r for the ε-properties, 3-r for the exact property (0 at r = 3,
        where the threshold is the constant 1/2), None for exact-for-g
    """
    _check_r(r)
    if kind not in PROPERTY_KINDS:
        raise ParameterError(f"unknown property kind '{kind}'")
    if kind in (PROPERTY_EPS, PROPERTY_EPS_FOR_G):
        return 2 - r
    if kind == PROPERTY_EXACT:
        return 3 - r
    return None
