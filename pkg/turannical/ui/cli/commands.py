"""
Subcommand handlers for the turannical command.

Each handler takes the parsed namespace and returns a process exit code.
Outputs go to --out or stdout; diagnostics go to the log.
"""

import logging
import sys
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Dict, Optional

from turannical.config.constants import EXIT_OK, EXIT_UNKNOWN
from turannical.core.detection import detects
from turannical.core.degree_stats import boundedness_check
from turannical.core.manifest import build_manifest, write_manifest
from turannical.core.serialization import (
    dump_curves_csv,
    dump_graph,
    load_graph,
    load_hypergraph,
    parse_scan_config,
    render_report,
)
from turannical.core.structure import classify, counting_checks
from turannical.core.threshold import (
    crossing_point,
    run_scan,
    scaling_report,
    sharpness_from_curve,
)
from turannical.core.turan import turan_number, turm, turm_graph
from turannical.core.witness import (
    Verdict,
    construct_deletion_witness,
    construct_sparse_witness,
    is_eps_turannical,
    is_eps_turannical_for,
    is_turannical,
    is_turannical_for,
)
from turannical.util.numeric import as_fraction

logger = logging.getLogger(__name__)


def _emit(text: str, out: Optional[str] = None):
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info("Wrote %s", out)


def turan_command(args) -> int:
    _emit(f"{turan_number(args.r, args.n)}\n")
    return EXIT_OK


def turm_command(args) -> int:
    value = turm(args.r, args.n, args.m)
    if args.emit_graph:
        graph, _ = turm_graph(args.r, args.n, args.m)
        _emit(dump_graph(graph), args.emit_graph)
    _emit(f"{value}\n")
    return EXIT_OK


def detect_command(args) -> int:
    result = detects(load_hypergraph(args.hypergraph), load_graph(args.graph), count=args.count)
    _emit(render_report(result), args.out)
    return EXIT_OK


def decide_command(args) -> int:
    hypergraph = load_hypergraph(args.hypergraph)
    host = load_graph(args.graph) if args.graph else None
    eps = as_fraction(args.eps) if args.eps is not None else None

    if host is None and eps is None:
        verdict, report = is_turannical(hypergraph, args.budget)
    elif host is None:
        verdict, report = is_eps_turannical(hypergraph, eps, args.budget)
    elif eps is None:
        verdict, report = is_turannical_for(hypergraph, host, args.budget)
    else:
        verdict, report = is_eps_turannical_for(hypergraph, host, eps, args.budget)

    _emit(render_report(report), args.out)
    if verdict is Verdict.UNKNOWN:
        logger.warning("Budget of %d nodes exhausted before a decision", args.budget)
        return EXIT_UNKNOWN
    return EXIT_OK


def classify_command(args) -> int:
    graph = load_graph(args.graph)
    eps = as_fraction(args.eps)
    verdict = classify(graph, args.r, eps, as_fraction(args.delta), args.budget)
    if not args.counting:
        _emit(render_report(verdict), args.out)
        return EXIT_OK
    counting = None
    if verdict.partition is not None:
        counting = counting_checks(graph, verdict.partition, args.r)
    else:
        logger.warning("No ε-close partition was derived; counting checks skipped")
    _emit(render_report({"classification": verdict, "counting": counting}), args.out)
    return EXIT_OK


def mubound_command(args) -> int:
    report = boundedness_check(
        load_hypergraph(args.hypergraph),
        args.q,
        args.constant,
        i=args.i,
        trials=args.trials,
        seed=args.seed,
    )
    _emit(render_report(report), args.out)
    return EXIT_OK


def scan_command(args) -> int:
    config = parse_scan_config(Path(args.config).read_bytes())
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.mode is not None:
        overrides["mode"] = args.mode
    if overrides:
        config = config.model_copy(update=overrides)

    started = datetime.now(timezone.utc)
    clock = time.perf_counter()
    curves = run_scan(config, threads=args.threads)
    wall_time = time.perf_counter() - clock
    _emit(dump_curves_csv(curves), args.out)

    if args.report:
        sharpness = [sharpness_from_curve(curve) for curve in curves]
        report = {
            "crossings": [
                {"n": curve.n, "q": curve.q, "p_star": crossing_point(curve)} for curve in curves
            ],
            "scaling": scaling_report(curves, config.r, config.target.kind),
            "sharpness": sharpness,
        }
        _emit(render_report(report), args.report)

    if args.out:
        outputs = {"csv": args.out}
        if args.report:
            outputs["report"] = args.report
        manifest = build_manifest(
            command="scan",
            config=config.model_dump(mode="json", by_alias=True),
            seed=config.seed,
            started=started,
            wall_time=wall_time,
            outputs=outputs,
        )
        write_manifest(manifest, args.out)
    else:
        logger.info("CSV went to stdout; no manifest written")
    return EXIT_OK


def witness_command(args) -> int:
    hypergraph = load_hypergraph(args.hypergraph)
    if args.kind == "sparse":
        if args.graph:
            logger.warning("--graph is ignored for sparse witnesses")
        graph = construct_sparse_witness(hypergraph)
        if graph is None:
            logger.warning("No pair with a small link admits the construction")
    else:
        host = load_graph(args.graph) if args.graph else None
        graph = construct_deletion_witness(hypergraph, host)
    report = {
        "kind": args.kind,
        "found": graph is not None,
        "edge_count": graph.edge_count if graph is not None else None,
        "graph": graph,
    }
    _emit(render_report(report), args.out)
    return EXIT_OK


COMMANDS: Dict[str, Callable] = {
    "turan": turan_command,
    "turm": turm_command,
    "detect": detect_command,
    "decide": decide_command,
    "classify": classify_command,
    "mubound": mubound_command,
    "scan": scan_command,
    "witness": witness_command,
}


def run_command(args) -> int:
    """Dispatch a parsed namespace to its handler."""
    return COMMANDS[args.command](args)
