"""Core engines for Turannical."""

from .graph import Graph, is_turan_graph
from .hypergraph import UniformHypergraph, link, deg_i
from .cliques import enumerate_cliques, count_cliques, book_size, max_book
from .turan import (
    turan_number,
    turan_graph,
    turm,
    turm_graph,
    intersection_hypergraph,
    density_bounds,
    theta_q,
    theta_p,
)
from .detection import DetectionResult, detects, denseness_ratio
from .hitting_set import HittingSetInstance, TransversalResult, min_transversal
from .max_partition import PartitionResult, max_partition_edges
from .exhaustive import ExhaustiveOracle, get_oracle, exhaustive_max_undetected
from .witness import (
    Verdict,
    WitnessReport,
    max_undetected_edges,
    is_turannical,
    is_eps_turannical,
    is_turannical_for,
    is_eps_turannical_for,
    construct_deletion_witness,
    construct_sparse_witness,
)
from .structure import (
    ClosePartition,
    StructureCase,
    StructureVerdict,
    check_close_partition,
    derive_partition,
    classify,
    book_dichotomy,
    counting_checks,
)
from .ensembles import EnsembleSpec, CoupledSample, sample_hypergraph, sample_graph
from .degree_stats import mu_i_estimate, mu_i_exact, boundedness_check
from .properties import PropertyDecider, SolverDecider, FilterDecider, get_decider
from .threshold import (
    CurvePoint,
    ThresholdCurve,
    estimate_success,
    threshold_scan,
    run_scan,
    crossing_point,
    sharpness_probe,
    scaling_report,
    joint_scan,
)

__all__ = [
    "Graph",
    "is_turan_graph",
    "UniformHypergraph",
    "link",
    "deg_i",
    "enumerate_cliques",
    "count_cliques",
    "book_size",
    "max_book",
    "turan_number",
    "turan_graph",
    "turm",
    "turm_graph",
    "intersection_hypergraph",
    "density_bounds",
    "theta_q",
    "theta_p",
    "DetectionResult",
    "detects",
    "denseness_ratio",
    "HittingSetInstance",
    "TransversalResult",
    "min_transversal",
    "PartitionResult",
    "max_partition_edges",
    "ExhaustiveOracle",
    "get_oracle",
    "exhaustive_max_undetected",
    "Verdict",
    "WitnessReport",
    "max_undetected_edges",
    "is_turannical",
    "is_eps_turannical",
    "is_turannical_for",
    "is_eps_turannical_for",
    "construct_deletion_witness",
    "construct_sparse_witness",
    "ClosePartition",
    "StructureCase",
    "StructureVerdict",
    "check_close_partition",
    "derive_partition",
    "classify",
    "book_dichotomy",
    "counting_checks",
    "EnsembleSpec",
    "CoupledSample",
    "sample_hypergraph",
    "sample_graph",
    "mu_i_estimate",
    "mu_i_exact",
    "boundedness_check",
    "PropertyDecider",
    "SolverDecider",
    "FilterDecider",
    "get_decider",
    "CurvePoint",
    "ThresholdCurve",
    "estimate_success",
    "threshold_scan",
    "run_scan",
    "crossing_point",
    "sharpness_probe",
    "scaling_report",
    "joint_scan",
]
