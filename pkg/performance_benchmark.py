#!/usr/bin/env python
"""
Performance benchmark for Turannical.

Times the witness solver, the exhaustive oracle and a small threshold scan
against the wall-clock targets of the acceptance runs.
"""

import sys
import time
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from turannical.config import PropertySpec
from turannical.core import (
    detects,
    exhaustive_max_undetected,
    intersection_hypergraph,
    max_undetected_edges,
    sample_hypergraph,
    threshold_scan,
    turm,
    turm_graph,
)


def benchmark_constructions():
    """turm_graph for r in {3, 4}, n <= 12 (target: 10 s)."""
    start_time = time.perf_counter()
    for r in (3, 4):
        for n in range(1, 13):
            for m in range(1, n + 1):
                graph, _ = turm_graph(r, n, m)
                assert graph.edge_count == turm(r, n, m)
                assert not detects(intersection_hypergraph(r, n, m), graph).detected
    return time.perf_counter() - start_time, 10.0


def benchmark_solver():
    """max_undetected_edges on I^(3)(10, 2) (target: 60 s)."""
    start_time = time.perf_counter()
    report = max_undetected_edges(intersection_hypergraph(3, 10, 2))
    elapsed = time.perf_counter() - start_time
    print(f"  I^(3)(10, 2): {report.max_undetected_edges} edges, {report.nodes} nodes")
    return elapsed, 60.0


def benchmark_oracle():
    """Solver against enumeration on 50 hypergraphs with n = 6 (target: 200 s)."""
    start_time = time.perf_counter()
    mismatches = 0
    for trial in range(50):
        hypergraph = sample_hypergraph(3, 6, 0.5, seed=2024, trial=trial)
        exact = exhaustive_max_undetected(hypergraph).max_edges
        if max_undetected_edges(hypergraph).max_undetected_edges != exact:
            mismatches += 1
    print(f"  Mismatches: {mismatches}")
    return time.perf_counter() - start_time, 200.0


def benchmark_scan():
    """Exact-property scan, n = 8, 100 trials, 5 grid points (target: 60 s)."""
    start_time = time.perf_counter()
    curves = threshold_scan(
        3, 8, [0.1, 0.3, 0.5, 0.7, 0.9], PropertySpec(kind="exact"), trials=100, seed=1
    )
    print(f"  Estimates: {[round(e, 3) for e in curves[0].estimates()]}")
    return time.perf_counter() - start_time, 60.0


def run_benchmarks():
    """Run every benchmark and report whether the targets were met."""
    print("=" * 70)
    print("TURANNICAL PERFORMANCE BENCHMARK")
    print("=" * 70)

    all_met = True
    for benchmark in (benchmark_constructions, benchmark_solver, benchmark_oracle, benchmark_scan):
        print(f"\n{benchmark.__doc__}")
        elapsed, target = benchmark()
        met = elapsed <= target
        all_met = all_met and met
        print(f"  Time: {elapsed:.3f}s  Target Met: {'YES' if met else 'NO'}")

    print()
    print("PERFORMANCE SUMMARY:")
    print("-" * 30)
    print(f"All targets met: {'YES' if all_met else 'NO'}")
    return all_met


if __name__ == "__main__":
    success = run_benchmarks()
    sys.exit(0 if success else 1)
