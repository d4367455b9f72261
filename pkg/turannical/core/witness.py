"""
Witness solver for Turannical.

Decides whether a restriction hypergraph is (ε-)Turánnical, absolutely or
for a host graph G, by reducing "largest undetected subgraph" to a minimum
hitting set. Certified constructions are tried before any search, and
every decision carries an undetected witness graph.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from turannical.config.constants import DEFAULT_BUDGET
from turannical.core.detection import detects, induces_clique
from turannical.core.graph import Graph
from turannical.core.hitting_set import HittingSetInstance, lower_bound, min_transversal
from turannical.core.hypergraph import UniformHypergraph
from turannical.core.max_partition import local_search_partition, max_partition_edges
from turannical.core.turan import turan_graph, turan_number, turan_parts
from turannical.errors import ConstructionError, ParameterError
from turannical.util.bitset import full_mask, mask_of
from turannical.util.combinatorics import binomial
from turannical.util.numeric import Number, as_fraction, floor_fraction

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    """Tri-state decision outcome."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class WitnessReport:
    """
    Largest undetected graph found and the decision drawn from it.

    Attributes:
        max_undetected_edges: Edge count of the witness (the optimum when
            optimal is True)
        upper_bound: Certified upper bound on the optimum
        witness: A graph the hypergraph does not detect
        optimal: True when the witness is proven largest
        transversal_size: Host edges removed to obtain the witness
        baseline: Threshold the decision compares against, if any
        baseline_kind: "turan", "eps-turan", "max-partition",
            "eps-partition" or "none"
        verdict: Decision outcome, None for plain optimisation
        vacuous: True when no host subgraph can exceed the baseline
        method: How the witness was obtained
        nodes: Search nodes spent
    """

    max_undetected_edges: int
    upper_bound: int
    witness: Graph
    optimal: bool
    transversal_size: int
    baseline: Optional[Fraction] = None
    baseline_kind: str = "none"
    verdict: Optional[Verdict] = None
    vacuous: bool = False
    method: str = "search"
    nodes: int = 0


def _check_hypergraph(hypergraph: UniformHypergraph, host: Optional[Graph]):
    if hypergraph.r < 3:
        raise ParameterError(f"restriction hypergraphs need r >= 3, got r={hypergraph.r}")
    if host is not None and host.n != hypergraph.n:
        raise ParameterError(
            f"hypergraph has {hypergraph.n} vertices but graph has {host.n}"
        )


def build_instance(
    hypergraph: UniformHypergraph, host: Optional[Graph] = None
) -> HittingSetInstance:
    """
    Reduce "largest undetected subgraph of the host" to a hitting set.

    The universe is the host's edge set (all pairs when host is None).
    Each hyperedge that induces K_r in the host contributes the set of its
    internal pairs.

    Args:
        hypergraph: Restriction hypergraph F
        host: Host graph G, or None for K_n

    Returns:
        HittingSetInstance whose minimum transversal τ gives
        max undetected edges = |universe| - τ
    """
    _check_hypergraph(hypergraph, host)
    host = host if host is not None else Graph.complete(hypergraph.n)
    universe = host.edges()
    index = {pair: i for i, pair in enumerate(universe)}
    constraints: Dict[int, None] = {}
    for edge in hypergraph.edges:
        if not induces_clique(host.rows, edge):
            continue
        mask = 0
        for a in range(len(edge)):
            for b in range(a + 1, len(edge)):
                mask |= 1 << index[(edge[a], edge[b])]
        constraints.setdefault(mask, None)
    return HittingSetInstance(tuple(universe), tuple(constraints))


def _graph_without(instance: HittingSetInstance, n: int, chosen: int) -> Graph:
    kept = full_mask(instance.size) & ~chosen
    return Graph.from_edges(n, instance.pairs(kept))


def _transversal_of(instance: HittingSetInstance, graph: Graph) -> int:
    """Universe pairs missing from a subgraph of the host."""
    return mask_of(i for i, (u, v) in enumerate(instance.universe) if not graph.has_edge(u, v))


def _is_complete(hypergraph: UniformHypergraph) -> bool:
    return len(hypergraph.edges) == binomial(hypergraph.n, hypergraph.r)


def _hints(
    hypergraph: UniformHypergraph, host: Optional[Graph], instance: HittingSetInstance
) -> List[int]:
    """Starting transversals from K_r-free subgraphs and the deletion witness."""
    r = hypergraph.r
    if host is None:
        free_graph = turan_graph(r, hypergraph.n)
    else:
        labels = local_search_partition(host, r - 1).assignment(host.n)
        free_graph = Graph.from_edges(
            host.n, ((u, v) for u, v in host.iter_edges() if labels[u] != labels[v])
        )
    deletion = construct_deletion_witness(hypergraph, host)
    return [_transversal_of(instance, free_graph), _transversal_of(instance, deletion)]


def max_undetected_edges(
    hypergraph: UniformHypergraph,
    host: Optional[Graph] = None,
    budget: int = DEFAULT_BUDGET,
) -> WitnessReport:
    """
    Largest graph (subgraph of the host) that the hypergraph does not detect.

    Args:
        hypergraph: Restriction hypergraph F (r >= 3)
        host: Optional host graph G; K_n when omitted
        budget: Search node budget

    Returns:
        WitnessReport; optimal=False with a certified upper bound when the
        budget runs out
    """
    _check_hypergraph(hypergraph, host)
    r, n = hypergraph.r, hypergraph.n
    baseline = Fraction(turan_number(r, n)) if host is None else None
    baseline_kind = "turan" if host is None else "none"
    if host is None and _is_complete(hypergraph):
        # Turán's theorem: the complete hypergraph leaves exactly T_r(n) undetected
        witness = turan_graph(r, n)
        return WitnessReport(
            max_undetected_edges=witness.edge_count,
            upper_bound=witness.edge_count,
            witness=witness,
            optimal=True,
            transversal_size=binomial(n, 2) - witness.edge_count,
            baseline=baseline,
            baseline_kind=baseline_kind,
            method="turan-theorem",
        )
    instance = build_instance(hypergraph, host)
    result = min_transversal(instance, budget=budget, hints=_hints(hypergraph, host, instance))
    witness = _graph_without(instance, n, result.mask)
    return WitnessReport(
        max_undetected_edges=instance.size - result.size,
        upper_bound=instance.size - result.lower_bound,
        witness=witness,
        optimal=result.optimal,
        transversal_size=result.size,
        baseline=baseline,
        baseline_kind=baseline_kind,
        nodes=result.nodes,
    )


def _decide(
    hypergraph: UniformHypergraph,
    host: Optional[Graph],
    threshold: Fraction,
    baseline_kind: str,
    budget: int,
    constructions: List[Tuple[str, Graph]],
) -> WitnessReport:
    """
    Decide whether every undetected subgraph of the host has at most
    `threshold` edges.
    """
    n = hypergraph.n
    host_graph = host if host is not None else Graph.complete(n)
    universe_size = host_graph.edge_count
    allowed = floor_fraction(threshold)

    if allowed >= universe_size:
        logger.warning(
            "threshold %s is at least the %d host edges; the property holds vacuously",
            threshold,
            universe_size,
        )
        witness = constructions[0][1] if constructions else host_graph
        return WitnessReport(
            max_undetected_edges=witness.edge_count,
            upper_bound=universe_size,
            witness=witness,
            optimal=witness.edge_count == universe_size,
            transversal_size=universe_size - witness.edge_count,
            baseline=threshold,
            baseline_kind=baseline_kind,
            verdict=Verdict.TRUE,
            vacuous=True,
            method="vacuous",
        )

    instance = build_instance(hypergraph, host)
    root_bound = int(lower_bound(list(instance.constraints))) if instance.constraints else 0
    upper = universe_size - root_bound

    for method, graph in constructions:
        if graph.edge_count > allowed:
            logger.debug("%s certifies an undetected graph with %d edges", method, graph.edge_count)
            return WitnessReport(
                max_undetected_edges=graph.edge_count,
                upper_bound=upper,
                witness=graph,
                optimal=graph.edge_count == upper,
                transversal_size=universe_size - graph.edge_count,
                baseline=threshold,
                baseline_kind=baseline_kind,
                verdict=Verdict.FALSE,
                method=method,
            )

    # an undetected graph above the threshold exists iff τ <= target
    target = universe_size - allowed - 1
    hints = _hints(hypergraph, host, instance)
    result = min_transversal(instance, budget=budget, target=target, hints=hints)
    if result.size <= target:
        verdict = Verdict.FALSE
    elif result.lower_bound > target:
        verdict = Verdict.TRUE
    else:
        verdict = Verdict.UNKNOWN
        logger.warning("search budget of %d nodes exhausted before a decision", budget)
    return WitnessReport(
        max_undetected_edges=universe_size - result.size,
        upper_bound=universe_size - result.lower_bound,
        witness=_graph_without(instance, n, result.mask),
        optimal=result.optimal,
        transversal_size=result.size,
        baseline=threshold,
        baseline_kind=baseline_kind,
        verdict=verdict,
        nodes=result.nodes,
    )


def _absolute_constructions(hypergraph: UniformHypergraph) -> List[Tuple[str, Graph]]:
    constructions = []
    sparse = construct_sparse_witness(hypergraph)
    if sparse is not None:
        constructions.append(("sparse-witness", sparse))
    constructions.append(("deletion-witness", construct_deletion_witness(hypergraph)))
    return constructions


def _turan_theorem_report(hypergraph: UniformHypergraph, threshold: Fraction, kind: str):
    witness = turan_graph(hypergraph.r, hypergraph.n)
    return WitnessReport(
        max_undetected_edges=witness.edge_count,
        upper_bound=witness.edge_count,
        witness=witness,
        optimal=True,
        transversal_size=binomial(hypergraph.n, 2) - witness.edge_count,
        baseline=threshold,
        baseline_kind=kind,
        verdict=Verdict.TRUE,
        method="turan-theorem",
    )


def is_turannical(
    hypergraph: UniformHypergraph, budget: int = DEFAULT_BUDGET
) -> Tuple[Verdict, WitnessReport]:
    """
    Decide whether F detects every graph with more than t_r(n) edges.

    Returns:
        (verdict, report); a FALSE verdict carries a witness with more
        than t_r(n) edges
    """
    _check_hypergraph(hypergraph, None)
    threshold = Fraction(turan_number(hypergraph.r, hypergraph.n))
    if _is_complete(hypergraph):
        report = _turan_theorem_report(hypergraph, threshold, "turan")
    else:
        report = _decide(
            hypergraph, None, threshold, "turan", budget, _absolute_constructions(hypergraph)
        )
    return report.verdict, report


def is_eps_turannical(
    hypergraph: UniformHypergraph, eps: Number, budget: int = DEFAULT_BUDGET
) -> Tuple[Verdict, WitnessReport]:
    """
    Decide whether F detects every graph with more than (1+ε)t_r(n) edges.

    The threshold is compared as an exact rational.
    """
    _check_hypergraph(hypergraph, None)
    eps_value = as_fraction(eps)
    if eps_value < 0:
        raise ParameterError(f"eps must be non-negative, got {eps}")
    threshold = (1 + eps_value) * turan_number(hypergraph.r, hypergraph.n)
    if _is_complete(hypergraph):
        report = _turan_theorem_report(hypergraph, threshold, "eps-turan")
        if floor_fraction(threshold) >= binomial(hypergraph.n, 2):
            report = replace(report, vacuous=True)
    else:
        report = _decide(
            hypergraph,
            None,
            threshold,
            "eps-turan",
            budget,
            _absolute_constructions(hypergraph),
        )
    return report.verdict, report


def is_turannical_for(
    hypergraph: UniformHypergraph, graph: Graph, budget: int = DEFAULT_BUDGET
) -> Tuple[Verdict, WitnessReport]:
    """
    Decide whether F detects every subgraph of G with more edges than G's
    maximum (r-1)-partition.

    When the max-partition value is not proven optimal a FALSE outcome is
    downgraded to UNKNOWN.
    """
    _check_hypergraph(hypergraph, graph)
    partition = max_partition_edges(graph, hypergraph.r - 1, budget=budget)
    threshold = Fraction(partition.value)
    constructions = [("deletion-witness", construct_deletion_witness(hypergraph, graph))]
    report = _decide(hypergraph, graph, threshold, "max-partition", budget, constructions)
    if report.verdict is Verdict.FALSE and not partition.optimal:
        report = replace(report, verdict=Verdict.UNKNOWN)
    return report.verdict, report


def is_eps_turannical_for(
    hypergraph: UniformHypergraph, graph: Graph, eps: Number, budget: int = DEFAULT_BUDGET
) -> Tuple[Verdict, WitnessReport]:
    """
    Decide whether F detects every subgraph of G with more than
    (1+ε)(r-2)/(r-1)·e(G) edges.

    When (1+ε)(r-2)/(r-1) >= 1 no subgraph qualifies and the answer is a
    vacuous TRUE.
    """
    _check_hypergraph(hypergraph, graph)
    eps_value = as_fraction(eps)
    if eps_value < 0:
        raise ParameterError(f"eps must be non-negative, got {eps}")
    r = hypergraph.r
    factor = (1 + eps_value) * Fraction(r - 2, r - 1)
    threshold = factor * graph.edge_count
    if factor >= 1:
        logger.warning("(1+eps)(r-2)/(r-1) = %s >= 1; the premise is never met", factor)
    constructions = [("deletion-witness", construct_deletion_witness(hypergraph, graph))]
    report = _decide(hypergraph, graph, threshold, "eps-partition", budget, constructions)
    if factor >= 1:
        report = replace(report, vacuous=True)
    return report.verdict, report


def construct_deletion_witness(
    hypergraph: UniformHypergraph, host: Optional[Graph] = None
) -> Graph:
    """
    Greedy undetected subgraph of the host.

    Start from the host (K_n when omitted) and, for each hyperedge in
    order that still induces K_r, delete its smallest internal pair. The
    result has at least e(host) - |E(F)| edges.
    """
    _check_hypergraph(hypergraph, host)
    graph = host if host is not None else Graph.complete(hypergraph.n)
    rows = list(graph.rows)
    for edge in hypergraph.edges:
        if induces_clique(rows, edge):
            u, v = edge[0], edge[1]
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
    return Graph(graph.n, tuple(rows))


def _small_link(r: int, n: int, link_size: int) -> bool:
    if r == 3:
        return Fraction(link_size) < Fraction(n, 2) - 1
    return (r - 2) * link_size * (r - 1) <= n


def _place_classes(
    n: int, sizes: List[int], anchored: List[int], satellite: List[int], same_class: bool
) -> Optional[List[int]]:
    """
    Labels of a Turán graph with the anchored vertices in one class.

    The satellite vertices join the anchored class when same_class is True
    and fill another class otherwise.
    """
    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    labels: List[Optional[int]] = [None] * n
    if same_class:
        home = order[0]
        if sizes[home] < len(anchored) + len(satellite):
            return None
        for v in anchored + satellite:
            labels[v] = home
        capacity = {i: sizes[i] for i in range(len(sizes))}
        capacity[home] -= len(anchored) + len(satellite)
    else:
        if len(order) < 2:
            return None
        away = order[0]
        home = next((i for i in order[1:] if sizes[i] >= len(anchored)), None)
        if home is None or sizes[away] < len(satellite):
            return None
        for v in anchored:
            labels[v] = home
        for v in satellite:
            labels[v] = away
        capacity = {i: sizes[i] for i in range(len(sizes))}
        capacity[home] -= len(anchored)
        capacity[away] -= len(satellite)
    for v in range(n):
        if labels[v] is None:
            part = next(i for i in order if capacity[i] > 0)
            labels[v] = part
            capacity[part] -= 1
    return labels


def construct_sparse_witness(hypergraph: UniformHypergraph) -> Optional[Graph]:
    """
    Undetected graph with t_r(n)+1 edges from a pair with a small link.

    Looks for the first pair u < v whose link is small (r = 3:
    e(link(u,v)) < n/2 - 1; r > 3: (r-2)e(link(u,v)) <= n/(r-1)). The
    vertices L covered by the link are placed in the class of u and v for
    r = 3 and in a different class for r > 3; the Turán graph on those
    classes plus the edge uv is undetected.

    Returns:
        The witness graph, or None when no pair qualifies or no placement
        of L fits the class sizes of T_r(n)

    Raises:
        ConstructionError: If a built graph fails verification
    """
    _check_hypergraph(hypergraph, None)
    r, n = hypergraph.r, hypergraph.n
    sizes = [len(part) for part in turan_parts(r, n)]
    target = turan_number(r, n) + 1
    link_sizes = hypergraph.pair_link_sizes()
    for u in range(n):
        for v in range(u + 1, n):
            if not _small_link(r, n, int(link_sizes[u, v])):
                continue
            covered = sorted(
                {w for edge in hypergraph.edges_containing((u, v)) for w in edge} - {u, v}
            )
            labels = _place_classes(n, sizes, [u, v], covered, same_class=(r == 3))
            if labels is None:
                continue
            graph = Graph.from_edges(
                n,
                [(a, b) for a in range(n) for b in range(a + 1, n) if labels[a] != labels[b]]
                + [(u, v)],
            )
            if graph.edge_count != target or detects(hypergraph, graph).detected:
                raise ConstructionError(
                    f"sparse witness for pair ({u}, {v}) failed verification"
                )
            logger.debug("sparse witness from pair (%d, %d), |L| = %d", u, v, len(covered))
            return graph
    return None
