#!/usr/bin/env python
"""
End-to-end run of the turannical command line.

Exercises the complete workflow through `turannical.main.main`:
1. Write a restriction hypergraph and a host graph as JSON
2. Compute Turán numbers
3. Decide the absolute and relative properties
4. Build a certified witness
5. Run a small threshold scan and verify its manifest
"""

import io
import json
import sys
import tempfile
from contextlib import redirect_stdout
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from turannical.core import Graph, UniformHypergraph, intersection_hypergraph
from turannical.core.manifest import manifest_path, read_manifest, verify_manifest
from turannical.core.serialization import dump_graph, dump_hypergraph, parse_curves_csv
from turannical.main import main


def run(argv):
    """Run one command and return (exit code, captured stdout)."""
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(argv)
    return code, buffer.getvalue()


def test_numbers():
    """t_3(5) and τ_3(10, 2)."""
    print("\n" + "=" * 70)
    print("TEST 1: TURÁN NUMBERS")
    print("=" * 70)

    code, out = run(["turan", "--r", "3", "--n", "5"])
    print(f"  t_3(5) = {out.strip()} (exit {code})")
    if code != 0 or out != "6\n":
        print("  FAIL: expected 6")
        return False

    code, out = run(["turm", "--r", "3", "--n", "10", "--m", "2"])
    print(f"  τ_3(10, 2) = {out.strip()} (exit {code})")
    if code != 0 or out.strip() != "31":
        print("  FAIL: expected 31")
        return False

    print("  PASS")
    return True


def test_decisions(tmpdir):
    """Absolute, ε and relative decisions for I^(3)(7, 2) and K^(3)_5."""
    print("\n" + "=" * 70)
    print("TEST 2: DECISIONS")
    print("=" * 70)

    f_path = tmpdir / "intersection.json"
    f_path.write_text(dump_hypergraph(intersection_hypergraph(3, 7, 2)))
    out = tmpdir / "decide.json"

    print("\n[1/3] Absolute property of I^(3)(7, 2)...")
    code = main(["decide", "--hypergraph", str(f_path), "--out", str(out)])
    report = json.loads(out.read_text())
    print(f"  verdict={report['verdict']} max_undetected={report['max_undetected_edges']}")
    if code != 0 or report["verdict"] != "false" or report["max_undetected_edges"] != 13:
        print("  FAIL: expected false with a 13-edge witness")
        return False

    print("\n[2/3] ε = 1/20 property of K^(3)_7...")
    complete_path = tmpdir / "complete.json"
    complete_path.write_text(dump_hypergraph(UniformHypergraph.complete(3, 7)))
    code = main(["decide", "--hypergraph", str(complete_path), "--eps", "1/20", "--out", str(out)])
    report = json.loads(out.read_text())
    print(f"  verdict={report['verdict']} baseline={report['baseline']}")
    if code != 0 or report["verdict"] != "true" or report["baseline"] != "63/5":
        print("  FAIL: expected true against 63/5")
        return False

    print("\n[3/3] Relative property of K^(3)_5 on K_5...")
    host_path = tmpdir / "host.json"
    host_path.write_text(dump_graph(Graph.complete(5)))
    small_path = tmpdir / "small.json"
    small_path.write_text(dump_hypergraph(UniformHypergraph.complete(3, 5)))
    code = main([
        "decide", "--hypergraph", str(small_path), "--graph", str(host_path), "--out", str(out),
    ])
    report = json.loads(out.read_text())
    print(f"  verdict={report['verdict']}")
    if code != 0 or report["verdict"] != "true":
        print("  FAIL: expected true")
        return False

    print("  PASS")
    return True


def test_witness(tmpdir):
    """Sparse construction for the empty hypergraph on six vertices."""
    print("\n" + "=" * 70)
    print("TEST 3: WITNESS CONSTRUCTION")
    print("=" * 70)

    f_path = tmpdir / "empty.json"
    f_path.write_text(dump_hypergraph(UniformHypergraph.empty(3, 6)))
    out = tmpdir / "witness.json"
    code = main(["witness", "--hypergraph", str(f_path), "--kind", "sparse", "--out", str(out)])
    report = json.loads(out.read_text())
    print(f"  found={report['found']} edges={report['edge_count']}")
    if code != 0 or not report["found"] or report["edge_count"] != 10:
        print("  FAIL: expected a 10-edge sparse witness")
        return False

    print("  PASS")
    return True


def test_scan(tmpdir):
    """Tiny exact-property scan with CSV, report and manifest."""
    print("\n" + "=" * 70)
    print("TEST 4: THRESHOLD SCAN")
    print("=" * 70)

    config = tmpdir / "scan.json"
    config.write_text(json.dumps({
        "r": 3,
        "n_list": [5, 6],
        "property": {"kind": "exact"},
        "grid": {"p": [0.0, 0.5, 1.0]},
        "trials": 8,
        "seed": 2024,
    }))
    csv_path, report_path = tmpdir / "curves.csv", tmpdir / "report.json"

    code = main([
        "scan", "--config", str(config), "--threads", "1",
        "--out", str(csv_path), "--report", str(report_path),
    ])
    if code != 0:
        print(f"  FAIL: scan exited with {code}")
        return False

    curves = parse_curves_csv(csv_path.read_text(), r=3)
    for curve in curves:
        print(f"  n={curve.n}: estimates {[round(e, 3) for e in curve.estimates()]}")
    if [curve.estimates()[0] for curve in curves] != [0.0, 0.0]:
        print("  FAIL: the empty hypergraph must never be Turánnical")
        return False
    if [curve.estimates()[-1] for curve in curves] != [1.0, 1.0]:
        print("  FAIL: the complete hypergraph must always be Turánnical")
        return False

    manifest = read_manifest(manifest_path(csv_path))
    verified = verify_manifest(manifest, {"csv": csv_path, "report": report_path})
    print(f"  Manifest seed={manifest.seed} verified={verified}")
    if not verified:
        print("  FAIL: manifest digests do not match")
        return False

    print("  PASS")
    return True


def run_all():
    """Run every stage in a scratch directory."""
    print("=" * 70)
    print("TURANNICAL FULL FLOW")
    print("=" * 70)

    with tempfile.TemporaryDirectory() as name:
        tmpdir = Path(name)
        results = [
            test_numbers(),
            test_decisions(tmpdir),
            test_witness(tmpdir),
            test_scan(tmpdir),
        ]

    print("\n" + "=" * 70)
    passed = sum(results)
    print(f"RESULT: {passed}/{len(results)} stages passed")
    print("=" * 70)
    return all(results)


if __name__ == "__main__":
    success = run_all()
    sys.exit(0 if success else 1)
