"""
Argument parser for the turannical command.

One subcommand per operation; flags that several subcommands share are
added by small helpers.
"""

import argparse

from turannical import __version__
from turannical.config.constants import DECISION_MODES, DEFAULT_BUDGET, SEED_BITS


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**SEED_BITS:
        raise argparse.ArgumentTypeError(f"seed {text} is not a 64-bit unsigned integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_out(parser: argparse.ArgumentParser):
    parser.add_argument("--out", help="Output file (default: stdout)")


def _add_budget(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--budget",
        type=_positive,
        default=DEFAULT_BUDGET,
        help=f"Search node budget (default: {DEFAULT_BUDGET})",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Build the top-level parser.

    Returns:
        ArgumentParser whose parsed namespace carries `command`
    """
    parser = argparse.ArgumentParser(
        prog="turannical",
        description="Restriction hypergraphs that detect every dense graph.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level for stderr diagnostics",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    turan = sub.add_parser("turan", help="Turán number t_r(n)")
    turan.add_argument("--r", type=int, required=True)
    turan.add_argument("--n", type=int, required=True)

    turm = sub.add_parser("turm", help="Restricted Turán number τ_r(n, m)")
    turm.add_argument("--r", type=int, required=True)
    turm.add_argument("--n", type=int, required=True)
    turm.add_argument("--m", type=int, required=True)
    turm.add_argument("--emit-graph", metavar="PATH", help="Write the extremal graph JSON")

    detect = sub.add_parser("detect", help="Does F detect G?")
    detect.add_argument("--hypergraph", required=True, metavar="F.json")
    detect.add_argument("--graph", required=True, metavar="G.json")
    detect.add_argument("--count", action="store_true", help="Count every detecting hyperedge")
    _add_out(detect)

    decide = sub.add_parser("decide", help="Decide the (ε-)Turánnical property")
    decide.add_argument("--hypergraph", required=True, metavar="F.json")
    decide.add_argument("--graph", metavar="G.json", help="Host graph (relative property)")
    decide.add_argument("--eps", help="Slack ε (decimal or num/den)")
    _add_budget(decide)
    _add_out(decide)

    classify = sub.add_parser("classify", help="Structural case of a dense graph")
    classify.add_argument("--graph", required=True, metavar="G.json")
    classify.add_argument("--r", type=int, required=True)
    classify.add_argument("--eps", required=True)
    classify.add_argument("--delta", required=True)
    classify.add_argument(
        "--counting", action="store_true", help="Also run the counting checks on the partition"
    )
    _add_budget(classify)
    _add_out(classify)

    mubound = sub.add_parser("mubound", help="Estimate μ_i(F, q) and compare with K")
    mubound.add_argument("--hypergraph", required=True, metavar="F.json")
    mubound.add_argument("--q", type=float, required=True)
    mubound.add_argument("--i", type=int, default=1)
    mubound.add_argument("--trials", type=_positive, required=True)
    mubound.add_argument("--seed", type=_seed, required=True)
    mubound.add_argument("--K", dest="constant", type=float, required=True)
    _add_out(mubound)

    scan = sub.add_parser("scan", help="Monte Carlo threshold scan")
    scan.add_argument("--config", required=True, metavar="scan.json")
    scan.add_argument("--seed", type=_seed, help="Override the configured master seed")
    scan.add_argument("--mode", choices=DECISION_MODES, help="Override the decision mode")
    scan.add_argument("--threads", type=_positive, help="Worker processes (default: all cores)")
    scan.add_argument(
        "--report", metavar="PATH", help="Write crossing, scaling and sharpness JSON"
    )
    _add_out(scan)

    witness = sub.add_parser("witness", help="Certified undetected graph for F")
    witness.add_argument("--hypergraph", required=True, metavar="F.json")
    witness.add_argument("--graph", metavar="G.json", help="Host graph (deletion kind only)")
    witness.add_argument("--kind", choices=["sparse", "deletion"], default="deletion")
    _add_out(witness)

    return parser
