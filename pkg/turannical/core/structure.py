"""
Structure analysis for Turannical.

Tools for graphs with at least t_r(n) edges: ε-close (r-1)-partitions,
the vertex-heavy / neighbourhood-pair / close-partition classification,
the book dichotomy, and clique counting checks on close partitions.

Thresholds are compared as exact rationals. The constant δ is always
supplied by the caller.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from turannical.config.constants import DEFAULT_BUDGET
from turannical.core.cliques import count_cliques, max_book, vertex_clique_counts
from turannical.core.graph import Edge, Graph
from turannical.core.max_partition import max_partition_edges
from turannical.core.turan import turan_number
from turannical.errors import ParameterError
from turannical.util.bitset import full_mask, iterate_bits, mask_of, members, popcount
from turannical.util.numeric import Number, as_fraction

logger = logging.getLogger(__name__)

Parts = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PartitionViolation:
    """
    One failed condition of an ε-close partition.

    Attributes:
        condition: "exceptional-size", "part-size", "exceptional-degree"
            or "crossing-degree"
        vertex: Offending vertex, if the condition is per vertex
        part: Offending part index (0 is the exceptional set)
        measured: Measured value
        required: Bound it violates
    """

    condition: str
    vertex: Optional[int]
    part: Optional[int]
    measured: Fraction
    required: Fraction


@dataclass(frozen=True)
class ClosePartition:
    """
    Partition V_0, V_1, ..., V_{r-1} of the vertex set.

    Attributes:
        parts: V_0 first, then the r-1 classes
        eps: The ε it was checked against
        noncrossing_edges: ℓ, edges inside some class V_i (i >= 1)
        crossing_nonedges: k, non-edges between different classes
    """

    parts: Parts
    eps: Fraction
    noncrossing_edges: int
    crossing_nonedges: int

    @property
    def exceptional(self) -> Tuple[int, ...]:
        return self.parts[0]

    @property
    def classes(self) -> Parts:
        return self.parts[1:]

    @classmethod
    def from_parts(cls, graph: Graph, parts: Sequence[Sequence[int]], eps: Number) -> "ClosePartition":
        """Wrap parts with their profile; does not check the ε conditions."""
        canonical = _canonical_parts(graph, parts)
        noncrossing, crossing = partition_profile(graph, canonical)
        return cls(canonical, as_fraction(eps), noncrossing, crossing)


def _canonical_parts(graph: Graph, parts: Sequence[Sequence[int]]) -> Parts:
    if len(parts) < 3:
        raise ParameterError(
            f"expected V_0 and at least two classes, got {len(parts)} parts"
        )
    seen = 0
    canonical = []
    for index, part in enumerate(parts):
        vertices = tuple(sorted(part))
        for v in vertices:
            if not 0 <= v < graph.n:
                raise ParameterError(f"vertex {v} in part {index} is outside 0..{graph.n - 1}")
            if (seen >> v) & 1:
                raise ParameterError(f"vertex {v} appears in more than one part")
            seen |= 1 << v
        canonical.append(vertices)
    if seen != full_mask(graph.n):
        missing = members(full_mask(graph.n) & ~seen)
        raise ParameterError(f"parts do not cover vertices {list(missing)}")
    return tuple(canonical)


def partition_profile(graph: Graph, parts: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """
    Non-crossing edges ℓ and crossing non-edges k of a partition.

    Args:
        graph: Graph G
        parts: V_0 followed by the classes; V_0 takes part in neither count

    Returns:
        (ℓ, k)
    """
    classes = [mask_of(part) for part in parts[1:]]
    noncrossing = 0
    crossing_edges = 0
    crossing_pairs = 0
    for i, first in enumerate(classes):
        for v in iterate_bits(first):
            noncrossing += popcount(graph.rows[v] & first)
        for second in classes[i + 1 :]:
            crossing_pairs += popcount(first) * popcount(second)
            crossing_edges += sum(
                popcount(graph.rows[v] & second) for v in iterate_bits(first)
            )
    return noncrossing // 2, crossing_pairs - crossing_edges


def check_close_partition(
    graph: Graph, parts: Sequence[Sequence[int]], eps: Number
) -> Tuple[bool, List[PartitionViolation]]:
    """
    Check the conditions of an ε-close (r-1)-partition.

    With r-1 = len(parts) - 1 classes:
    |V_0| <= ε²n; |V_i| >= (1-ε)n/(r-1); every v in V_0 has
    deg(v) <= (1-ε²)(r-2)n/(r-1); every v in V_i has deg(v, V_j) >=
    (1-ε)|V_j| for j != i.

    Args:
        graph: Graph G
        parts: V_0 followed by the classes
        eps: ε

    Returns:
        (holds, violations)

    Raises:
        ParameterError: If the parts do not partition the vertex set
    """
    canonical = _canonical_parts(graph, parts)
    e = as_fraction(eps)
    n = graph.n
    k = len(canonical) - 1
    violations: List[PartitionViolation] = []

    exceptional = canonical[0]
    if len(exceptional) > e * e * n:
        violations.append(
            PartitionViolation("exceptional-size", None, 0, Fraction(len(exceptional)), e * e * n)
        )
    size_bound = (1 - e) * Fraction(n, k)
    for index, part in enumerate(canonical[1:], start=1):
        if len(part) < size_bound:
            violations.append(
                PartitionViolation("part-size", None, index, Fraction(len(part)), size_bound)
            )
    degree_bound = (1 - e * e) * Fraction((k - 1) * n, k)
    for v in exceptional:
        if graph.degree(v) > degree_bound:
            violations.append(
                PartitionViolation("exceptional-degree", v, 0, Fraction(graph.degree(v)), degree_bound)
            )
    masks = [mask_of(part) for part in canonical]
    for i in range(1, k + 1):
        for v in canonical[i]:
            for j in range(1, k + 1):
                if j == i:
                    continue
                measured = popcount(graph.rows[v] & masks[j])
                required = (1 - e) * len(canonical[j])
                if measured < required:
                    violations.append(
                        PartitionViolation("crossing-degree", v, j, Fraction(measured), required)
                    )
    return not violations, violations


@dataclass(frozen=True)
class PartitionDerivation:
    """
    Intermediate sets of derive_partition.

    Attributes:
        base: Max-cut base partition U_1, ..., U_{r-1}
        candidates: Sets V_1, ..., V_{r-1} from the degree rule (may overlap)
        overlapping: Vertices in more than one candidate set
        partition: The validated ClosePartition, or None
        violations: Why validation failed
    """

    base: Parts
    candidates: Parts
    overlapping: Tuple[int, ...]
    partition: Optional[ClosePartition]
    violations: Tuple[PartitionViolation, ...] = ()


def derive_partition_details(
    graph: Graph, r: int, eps: Number, budget: int = DEFAULT_BUDGET
) -> PartitionDerivation:
    """
    Derive a candidate ε-close partition from a maximum (r-1)-cut.

    V_i collects the vertices v with deg(v, V(G) \\ U_i) >=
    ((r-2)/(r-1) - ε/(4r))n; V_0 is everything else.
    """
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")
    e = as_fraction(eps)
    n = graph.n
    base = max_partition_edges(graph, r - 1, budget=budget)
    base_masks = [mask_of(part) for part in base.parts]
    universe = full_mask(n)
    threshold = (Fraction(r - 2, r - 1) - e / (4 * r)) * n
    candidate_masks = []
    for mask in base_masks:
        outside = universe & ~mask
        candidate_masks.append(
            mask_of(v for v in range(n) if popcount(graph.rows[v] & outside) >= threshold)
        )
    covered = 0
    overlap = 0
    for mask in candidate_masks:
        overlap |= covered & mask
        covered |= mask
    candidates = tuple(members(mask) for mask in candidate_masks)
    if overlap:
        logger.debug("vertices %s satisfy the degree rule for two classes", members(overlap))
        return PartitionDerivation(base.parts, candidates, members(overlap), None)

    parts = (members(universe & ~covered),) + candidates
    holds, violations = check_close_partition(graph, parts, e)
    partition = ClosePartition.from_parts(graph, parts, e) if holds else None
    return PartitionDerivation(base.parts, candidates, (), partition, tuple(violations))


def derive_partition(
    graph: Graph, r: int, eps: Number, budget: int = DEFAULT_BUDGET
) -> Optional[ClosePartition]:
    """
    ε-close (r-1)-partition obtained from a maximum cut, if it validates.

    Returns:
        ClosePartition, or None when the degree rule puts a vertex in two
        classes or the result fails check_close_partition
    """
    return derive_partition_details(graph, r, eps, budget).partition


class StructureCase(str, Enum):
    """Cases reported by classify and book_dichotomy."""

    VERTEX_HEAVY = "vertex-heavy"
    BIG_BOOK = "big-book"
    NEIGHBORHOOD_PAIR = "neighborhood-pair"
    CLOSE_PARTITION = "close-partition"
    NONE = "none"


@dataclass(frozen=True)
class NeighborhoodPair:
    """Disjoint X, Y inside the neighbourhood of u with e(X, Y) measured."""

    u: int
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    edges_between: int

    @property
    def density(self) -> Fraction:
        size = len(self.x) * len(self.y)
        return Fraction(self.edges_between, size) if size else Fraction(0)


@dataclass(frozen=True)
class StructureVerdict:
    """
    Classification outcome with the measured quantities.

    Attributes:
        case: First applicable case
        premise_ok: Whether the edge-count premise held
        heavy_vertex: Vertex in the most copies of K_r
        max_vertex_cliques: Its number of K_r copies
        book_edge: Edge with the largest book
        max_book: Size of that book
        threshold: The bound the reported case was tested against
        pair: Neighbourhood pair (r = 3 only)
        partition: Close partition, when found
        notes: Human-readable remarks
    """

    case: StructureCase
    premise_ok: bool
    heavy_vertex: Optional[int]
    max_vertex_cliques: int
    book_edge: Optional[Edge]
    max_book: int
    threshold: Optional[Fraction] = None
    pair: Optional[NeighborhoodPair] = None
    partition: Optional[ClosePartition] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)


def _neighborhood_pair(
    graph: Graph, derivation: PartitionDerivation, eps: Fraction
) -> Optional[NeighborhoodPair]:
    """Search the r = 3 neighbourhood pairs built from the derivation sets."""
    n = graph.n
    first, second = (mask_of(c) for c in derivation.candidates)
    covered = first | second
    heavy_exceptional = [
        v
        for v in range(n)
        if not (covered >> v) & 1 and graph.degree(v) > (1 - eps * eps) * Fraction(n, 2)
    ]
    size_bound = eps * n * n / 288
    for u in list(derivation.overlapping) + heavy_exceptional:
        x_mask = graph.rows[u] & first
        y_mask = graph.rows[u] & second & ~x_mask
        x, y = members(x_mask), members(y_mask)
        if len(x) * len(y) < size_bound or not x or not y:
            continue
        between = graph.edges_between(x, y)
        if between >= (1 - 4 * eps) * len(x) * len(y):
            return NeighborhoodPair(u, x, y, between)
    return None


def classify(
    graph: Graph, r: int, eps: Number, delta: Number, budget: int = DEFAULT_BUDGET
) -> StructureVerdict:
    """
    Classify a graph with at least t_r(n) edges.

    Cases are tried in order: a vertex in at least δn^{r-1} copies of K_r;
    for r = 3 a vertex u with disjoint X, Y ⊆ Γ(u), |X||Y| >= εn²/288 and
    e(X, Y) >= (1-4ε)|X||Y|; an ε-close (r-1)-partition; otherwise NONE.

    Args:
        graph: Graph G
        r: Clique order (>= 3)
        eps: ε
        delta: δ > 0
        budget: Node budget of the max-cut search

    Returns:
        StructureVerdict
    """
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")
    e, d = as_fraction(eps), as_fraction(delta)
    if d <= 0:
        raise ParameterError(f"delta must be positive, got {delta}")
    n = graph.n
    notes = []
    premise_ok = graph.edge_count >= turan_number(r, n)
    if not premise_ok:
        logger.warning(
            "graph has %d < t_%d(%d) = %d edges; classification premise fails",
            graph.edge_count, r, n, turan_number(r, n),
        )
        notes.append("e(G) < t_r(n)")

    counts = vertex_clique_counts(graph, r) if n else []
    heavy = max(range(n), key=lambda v: (counts[v], -v)) if n else None
    heavy_count = counts[heavy] if n else 0
    book_edge, book = max_book(graph, r)
    measured = dict(
        premise_ok=premise_ok,
        heavy_vertex=heavy,
        max_vertex_cliques=heavy_count,
        book_edge=book_edge,
        max_book=book,
    )

    vertex_bound = d * n ** (r - 1)
    if n and heavy_count >= vertex_bound:
        return StructureVerdict(
            StructureCase.VERTEX_HEAVY, threshold=vertex_bound, notes=tuple(notes), **measured
        )

    derivation = derive_partition_details(graph, r, e, budget)
    if r == 3:
        pair = _neighborhood_pair(graph, derivation, e)
        if pair is not None:
            return StructureVerdict(
                StructureCase.NEIGHBORHOOD_PAIR,
                threshold=e * n * n / 288,
                pair=pair,
                notes=tuple(notes),
                **measured,
            )
    if derivation.partition is not None:
        return StructureVerdict(
            StructureCase.CLOSE_PARTITION,
            partition=derivation.partition,
            notes=tuple(notes),
            **measured,
        )
    if derivation.overlapping:
        notes.append(f"degree rule overlap at vertices {list(derivation.overlapping)}")
    notes.extend(
        f"{v.condition} fails (vertex {v.vertex}, part {v.part})" for v in derivation.violations[:5]
    )
    return StructureVerdict(StructureCase.NONE, notes=tuple(notes), **measured)


def book_dichotomy(graph: Graph, r: int, eps_tilde: Number) -> StructureVerdict:
    """
    Compare the largest book with (1-ε̃)(n/(r-1))^{r-2}.

    Args:
        graph: Graph G with e(G) > t_r(n)
        r: Clique order (>= 3)
        eps_tilde: ε̃ >= 0

    Returns:
        StructureVerdict with case BIG_BOOK or NONE and the measured
        vertex clique count and book size

    Raises:
        ParameterError: If e(G) <= t_r(n)
    """
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")
    n = graph.n
    t = turan_number(r, n)
    if graph.edge_count <= t:
        raise ParameterError(
            f"book dichotomy needs e(G) > t_{r}({n}) = {t}, got {graph.edge_count} edges"
        )
    e = as_fraction(eps_tilde)
    counts = vertex_clique_counts(graph, r)
    heavy = max(range(n), key=lambda v: (counts[v], -v))
    book_edge, book = max_book(graph, r)
    threshold = (1 - e) * Fraction(n, r - 1) ** (r - 2)
    case = StructureCase.BIG_BOOK if book >= threshold else StructureCase.NONE
    return StructureVerdict(
        case,
        premise_ok=True,
        heavy_vertex=heavy,
        max_vertex_cliques=counts[heavy],
        book_edge=book_edge,
        max_book=book,
        threshold=threshold,
    )


@dataclass(frozen=True)
class CountingReport:
    """
    Counting checks on a close partition.

    Attributes:
        noncrossing_edges: ℓ
        crossing_nonedges: k
        exceptional_size: |V_0|
        clique_count: Copies of K_r in G
        excess_ok: ℓ >= |V_0| + k + 1
        clique_bound: ℓ (n/(2r-2))^{r-2}
        clique_ok: clique_count >= clique_bound
        caveats: Premises that do not hold
    """

    noncrossing_edges: int
    crossing_nonedges: int
    exceptional_size: int
    clique_count: int
    excess_ok: bool
    clique_bound: Fraction
    clique_ok: bool
    caveats: Tuple[str, ...]

    @property
    def caveat(self) -> bool:
        return bool(self.caveats)


def counting_checks(graph: Graph, partition: ClosePartition, r: int) -> CountingReport:
    """
    Check ℓ >= |V_0| + k + 1 and #K_r >= ℓ(n/(2r-2))^{r-2}.

    Premises (e(G) > t_r(n), the partition being ε-close with ε < 1/(2r),
    n >= 2r³/ε²) are reported as caveats; the checks are computed either way.
    """
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")
    n = graph.n
    caveats = []
    if graph.edge_count <= turan_number(r, n):
        caveats.append("e(G) <= t_r(n)")
    eps = partition.eps
    if not eps < Fraction(1, 2 * r):
        caveats.append("eps >= 1/(2r)")
    if eps <= 0 or n < 2 * r**3 / (eps * eps):
        caveats.append("n < 2r^3/eps^2")
    holds, _ = check_close_partition(graph, partition.parts, eps)
    if not holds:
        caveats.append("partition is not eps-close")
    if caveats:
        logger.info("counting checks run with caveats: %s", ", ".join(caveats))

    noncrossing, crossing = partition_profile(graph, partition.parts)
    cliques = count_cliques(graph, r)
    bound = noncrossing * Fraction(n, 2 * r - 2) ** (r - 2)
    return CountingReport(
        noncrossing_edges=noncrossing,
        crossing_nonedges=crossing,
        exceptional_size=len(partition.exceptional),
        clique_count=cliques,
        excess_ok=noncrossing >= len(partition.exceptional) + crossing + 1,
        clique_bound=bound,
        clique_ok=cliques >= bound,
        caveats=tuple(caveats),
    )
