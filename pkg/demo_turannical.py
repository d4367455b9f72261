#!/usr/bin/env python
"""
Demonstration of restriction hypergraphs for Turannical.

Walks through the main questions on a few hand-picked hypergraphs: which
graphs they detect, how large an undetected graph can be, and whether the
hypergraph is (ε-)Turánnical.
"""

import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from turannical.core import (
    Graph,
    UniformHypergraph,
    construct_deletion_witness,
    construct_sparse_witness,
    detects,
    intersection_hypergraph,
    is_eps_turannical,
    is_turannical,
    is_turannical_for,
    turan_graph,
    turan_number,
)


def demo_hypergraph(name, hypergraph):
    """Decide both absolute properties for one hypergraph and show the witness."""
    r, n = hypergraph.r, hypergraph.n
    print(f"{name}: r={r}, n={n}, {len(hypergraph)} hyperedges")
    print("-" * 40)
    print(f"  t_{r}({n}) = {turan_number(r, n)}")

    verdict, report = is_turannical(hypergraph)
    print(f"  Turánnical: {verdict.value} (method: {report.method})")
    print(f"  Largest undetected graph: {report.max_undetected_edges} edges")
    if report.witness is not None:
        print(f"     Witness edges: {report.witness.edges()}")

    eps = Fraction(1, 20)
    verdict, report = is_eps_turannical(hypergraph, eps)
    print(f"  {eps}-Turánnical: {verdict.value} (threshold {float(report.baseline):.2f})")

    sparse = construct_sparse_witness(hypergraph)
    deletion = construct_deletion_witness(hypergraph)
    print(f"  Sparse witness: {sparse.edge_count if sparse else 'none'} edges")
    print(f"  Deletion witness: {deletion.edge_count} edges")
    print()


def demo_turannical():
    """Run the demonstration."""
    print("TURANNICAL DEMONSTRATION")
    print("=" * 60)
    print()

    graph = turan_graph(3, 6).with_edges([(0, 2)])
    hypergraph = UniformHypergraph.from_edges(3, 6, [(0, 1, 2), (3, 4, 5)])
    result = detects(hypergraph, graph)
    print("Detection")
    print("-" * 40)
    print(f"  G = T_3(6) + edge (0, 2), F = {{012, 345}}")
    print(f"  Detected: {result.detected} via {result.witness_hyperedge}")
    print()

    examples = [
        ("Complete K^(3)_6", UniformHypergraph.complete(3, 6)),
        ("Intersection I^(3)(7, 2)", intersection_hypergraph(3, 7, 2)),
        ("Intersection I^(3)(6, 3)", intersection_hypergraph(3, 6, 3)),
        ("Empty hypergraph", UniformHypergraph.empty(3, 6)),
    ]
    for name, example in examples:
        demo_hypergraph(name, example)

    print("Relative host")
    print("-" * 40)
    host = Graph.complete(5)
    relative = [
        ("K^(3)_5", UniformHypergraph.complete(3, 5)),
        ("empty", UniformHypergraph.empty(3, 5)),
    ]
    for name, example in relative:
        verdict, report = is_turannical_for(example, host)
        print(
            f"  {name} on K_5: {verdict.value}, threshold {report.baseline}, "
            f"largest undetected {report.max_undetected_edges}"
        )
    print()

    print("DEMONSTRATION COMPLETE!")


if __name__ == "__main__":
    demo_turannical()
