"""
Monte Carlo threshold experiments for Turannical.

Every trial draws one coupled sample (a uniform per r-subset and per pair)
and decides the property at every grid point on that sample, so curves
are monotone per trial and a trial's outcome depends only on
(master seed, trial index). Trials run in a process pool and are merged
in trial order, which makes the output independent of the worker count.
"""

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError
from scipy import stats as scipy_stats

from turannical.config.constants import (
    DEFAULT_BUDGET,
    MODE_SOLVER,
    PROPERTY_EPS_FOR_G,
    PROPERTY_EXACT,
    SHARPNESS_HIGH,
    SHARPNESS_LOW,
)
from turannical.config.settings import GridSpec, PropertySpec, ScanConfig
from turannical.core.ensembles import CoupledSample, EnsembleSpec
from turannical.core.properties import get_decider
from turannical.core.turan import predicted_exponent, theta_q
from turannical.core.witness import Verdict
from turannical.errors import ParameterError
from turannical.util.stats import wilson_interval

logger = logging.getLogger(__name__)

_TRUE, _FALSE, _UNKNOWN = 1, 0, -1


@dataclass(frozen=True)
class CurvePoint:
    """
    Success estimate at one grid point.

    Attributes:
        n: Vertex count
        p: Hyperedge probability
        q: Edge probability of the host graph (relative properties)
        property: Property label
        mode: Decision mode
        trials: Trials run
        successes: Trials where the property holds
        unknowns: Trials the solver could not decide
        estimate: successes / decided trials (NaN when none were decided)
        ci_lo: Wilson interval lower end
        ci_hi: Wilson interval upper end
    """

    n: int
    p: float
    q: Optional[float]
    property: str
    mode: str
    trials: int
    successes: int
    unknowns: int
    estimate: float
    ci_lo: float
    ci_hi: float

    @property
    def decided(self) -> int:
        return self.trials - self.unknowns

    @property
    def usable(self) -> bool:
        """False when every trial came back unknown."""
        return self.decided > 0


def make_point(
    n: int,
    p: float,
    q: Optional[float],
    label: str,
    mode: str,
    trials: int,
    successes: int,
    unknowns: int,
) -> CurvePoint:
    """Build a CurvePoint with its estimate and Wilson interval."""
    decided = trials - unknowns
    if decided <= 0:
        logger.warning("n=%d p=%g: every trial is unknown; point is unusable", n, p)
    estimate = successes / decided if decided > 0 else math.nan
    low, high = wilson_interval(successes, decided)
    return CurvePoint(n, p, q, label, mode, trials, successes, unknowns, estimate, low, high)


@dataclass(frozen=True)
class ThresholdCurve:
    """
    Success estimates along the p axis.

    Attributes:
        r: Uniformity
        n: Vertex count
        q: Host edge probability, fixed along the curve (None for the
            absolute properties)
        property: Property label
        mode: Decision mode
        points: Points sorted by p
        axis: The varying probability ("p")
    """

    r: int
    n: int
    q: Optional[float]
    property: str
    mode: str
    points: Tuple[CurvePoint, ...]
    axis: str = "p"

    def probabilities(self) -> List[float]:
        return [point.p for point in self.points]

    def estimates(self) -> List[float]:
        return [point.estimate for point in self.points]


@dataclass(frozen=True)
class _TrialTask:
    r: int
    n: int
    p_grid: Tuple[float, ...]
    q_grid: Optional[Tuple[float, ...]]
    target: PropertySpec
    mode: str
    budget: int
    seed: int


def _run_trial(task: _TrialTask, trial: int) -> Tuple[Tuple[int, ...], ...]:
    """Outcomes of one trial, one row per q value and one entry per p value."""
    sample = CoupledSample.draw(
        task.r, task.n, task.seed, trial, with_graph=task.q_grid is not None
    )
    decider = get_decider(task.target, task.mode, task.budget)
    rows = []
    for q in task.q_grid if task.q_grid is not None else (None,):
        graph = sample.graph_at(q) if q is not None else None
        outcomes = []
        holds = False
        for p in task.p_grid:
            if holds and decider.monotone:
                # a super-hypergraph of a Turánnical one is Turánnical
                outcomes.append(_TRUE)
                continue
            verdict = decider.decide(sample.hypergraph_at(p), graph)
            holds = verdict is Verdict.TRUE
            outcomes.append(
                _TRUE if holds else _UNKNOWN if verdict is Verdict.UNKNOWN else _FALSE
            )
        rows.append(tuple(outcomes))
    return tuple(rows)


def _map_trials(task: _TrialTask, trials: int, threads: Optional[int]) -> List:
    workers = threads if threads is not None else (os.cpu_count() or 1)
    if workers < 1:
        raise ParameterError(f"threads must be positive, got {threads}")
    run = partial(_run_trial, task)
    if workers == 1 or trials == 1:
        return [run(trial) for trial in range(trials)]
    workers = min(workers, trials)
    chunk = max(1, trials // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run, range(trials), chunksize=chunk))


def _grid(p_grid: Sequence[float], q_grid: Optional[Sequence[float]]) -> GridSpec:
    try:
        return GridSpec(p=list(p_grid), q=list(q_grid) if q_grid is not None else None)
    except ValidationError as e:
        raise ParameterError(f"invalid probability grid: {e.errors()[0]['msg']}")


def threshold_scan(
    r: int,
    n: int,
    p_grid: Sequence[float],
    target: PropertySpec,
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    mode: str = MODE_SOLVER,
    q_grid: Optional[Sequence[float]] = None,
    threads: Optional[int] = None,
) -> List[ThresholdCurve]:
    """
    Estimate the success probability over a p grid.

    Args:
        r: Uniformity
        n: Vertex count
        p_grid: Strictly increasing hyperedge probabilities
        target: Property to decide
        trials: Trials per grid point
        seed: 64-bit master seed
        budget: Search node budget per decision
        mode: "solver" or "filter"
        q_grid: Host edge probabilities (relative properties only)
        threads: Worker processes (default: all cores)

    Returns:
        One ThresholdCurve per q value (a single curve when q_grid is None)
    """
    grid = _grid(p_grid, q_grid)
    if target.relative != (grid.q is not None):
        raise ParameterError(
            f"property '{target.kind}' {'needs' if target.relative else 'takes no'} a q grid"
        )
    if trials < 1:
        raise ParameterError(f"trials must be positive, got {trials}")
    EnsembleSpec("joint" if target.relative else "hypergraph", r, n, grid.p[0],
                 grid.q[0] if grid.q else None, seed)
    get_decider(target, mode, budget)

    task = _TrialTask(
        r, n, tuple(grid.p), tuple(grid.q) if grid.q else None, target, mode, budget, seed
    )
    outcomes = np.asarray(_map_trials(task, trials, threads), dtype=np.int8)
    successes = (outcomes == _TRUE).sum(axis=0)
    unknowns = (outcomes == _UNKNOWN).sum(axis=0)

    curves = []
    for row, q in enumerate(grid.q if grid.q else [None]):
        points = tuple(
            make_point(
                n, p, q, target.label, mode, trials, int(successes[row, col]), int(unknowns[row, col])
            )
            for col, p in enumerate(grid.p)
        )
        for point in points:
            logger.info(
                "n=%d p=%g q=%s: %d/%d successes, %d unknown",
                n, point.p, q, point.successes, point.decided, point.unknowns,
            )
        curves.append(ThresholdCurve(r, n, q, target.label, mode, points))
    return curves


def run_scan(config: ScanConfig, threads: Optional[int] = None) -> List[ThresholdCurve]:
    """All curves of a scan configuration, ordered by n then q."""
    curves = []
    for n in config.ns:
        curves.extend(
            threshold_scan(
                config.r,
                n,
                config.grid.p,
                config.target,
                config.trials,
                config.seed,
                budget=config.budget,
                mode=config.mode,
                q_grid=config.grid.q,
                threads=threads,
            )
        )
    return curves


def estimate_success(
    spec: EnsembleSpec,
    target: PropertySpec,
    trials: int,
    budget: int = DEFAULT_BUDGET,
    mode: str = MODE_SOLVER,
    threads: Optional[int] = None,
) -> CurvePoint:
    """
    Fraction of trials in which the property holds at one ensemble point.

    Relative properties need a joint ensemble (p and q).
    """
    if target.relative and spec.kind != "joint":
        raise ParameterError(f"property '{target.kind}' needs a joint ensemble")
    if not target.relative and spec.kind != "hypergraph":
        raise ParameterError(f"property '{target.kind}' needs a hypergraph ensemble")
    curves = threshold_scan(
        spec.r,
        spec.n,
        [spec.p],
        target,
        trials,
        spec.master_seed,
        budget=budget,
        mode=mode,
        q_grid=[spec.q] if target.relative else None,
        threads=threads,
    )
    return curves[0].points[0]


def crossing_point(curve: ThresholdCurve, level: float = 0.5) -> Optional[float]:
    """
    Grid probability where the estimate crosses `level`.

    The crossing must be bracketed by a point whose interval lies wholly
    below the level and a later point whose interval lies wholly above it;
    inside the bracket the first upward crossing is linearly interpolated.

    Returns:
        Interpolated p*, or None when no bracket exists
    """
    points = [point for point in curve.points if point.usable]
    above = next((k for k, point in enumerate(points) if point.ci_lo > level), None)
    if above is None:
        return None
    below = next(
        (k for k in range(above - 1, -1, -1) if points[k].ci_hi < level), None
    )
    if below is None:
        return None
    for k in range(below, above):
        left, right = points[k], points[k + 1]
        if left.estimate < level <= right.estimate:
            if right.estimate == level:
                return right.p
            fraction = (level - left.estimate) / (right.estimate - left.estimate)
            return left.p + fraction * (right.p - left.p)
    return None


@dataclass(frozen=True)
class SharpnessReport:
    """
    Width of the rise from SHARPNESS_LOW to SHARPNESS_HIGH.

    Attributes:
        n: Vertex count
        p_lo: Smallest grid p with estimate >= SHARPNESS_LOW
        p_hi: Smallest grid p with estimate >= SHARPNESS_HIGH
        width: p_hi - p_lo, None when degenerate
        degenerate: No grid point below SHARPNESS_LOW or none reaching
            SHARPNESS_HIGH
        lo_point: Curve point at p_lo
        hi_point: Curve point at p_hi
    """

    n: int
    p_lo: Optional[float]
    p_hi: Optional[float]
    width: Optional[float]
    degenerate: bool
    lo_point: Optional[CurvePoint] = None
    hi_point: Optional[CurvePoint] = None


def sharpness_from_curve(curve: ThresholdCurve) -> SharpnessReport:
    """Read the threshold width off a curve."""
    points = [point for point in curve.points if point.usable]
    lo = next((point for point in points if point.estimate >= SHARPNESS_LOW), None)
    hi = next((point for point in points if point.estimate >= SHARPNESS_HIGH), None)
    starts_low = any(point.estimate < SHARPNESS_LOW for point in points)
    if lo is None or hi is None or not starts_low:
        return SharpnessReport(
            curve.n, lo.p if lo else None, hi.p if hi else None, None, True, lo, hi
        )
    return SharpnessReport(curve.n, lo.p, hi.p, hi.p - lo.p, False, lo, hi)


def sharpness_probe(
    r: int,
    n: int,
    p_grid: Sequence[float],
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    threads: Optional[int] = None,
) -> SharpnessReport:
    """Threshold width of the exact property in solver mode."""
    curve = threshold_scan(
        r, n, p_grid, PropertySpec(kind=PROPERTY_EXACT), trials, seed,
        budget=budget, mode=MODE_SOLVER, threads=threads,
    )[0]
    report = sharpness_from_curve(curve)
    if report.degenerate:
        logger.warning("n=%d: threshold width is undefined on this grid", n)
    return report


@dataclass(frozen=True)
class ScalingRow:
    """Crossing point of one curve with its joint scale."""

    n: int
    q: Optional[float]
    crossing: Optional[float]
    theta: Optional[float] = None
    ratio: Optional[float] = None


@dataclass(frozen=True)
class ScalingReport:
    """
    Crossing points and the fitted exponent of p* ~ n^a.

    Attributes:
        r: Uniformity
        property: Property kind
        rows: One row per curve
        fitted_exponent: Least-squares slope of log p* on log n (None with
            fewer than two usable n values)
        intercept: Intercept of that fit
        predicted_exponent: Exponent expected from the theory
    """

    r: int
    property: str
    rows: Tuple[ScalingRow, ...]
    fitted_exponent: Optional[float]
    intercept: Optional[float]
    predicted_exponent: Optional[int]


def scaling_report(curves: Sequence[ThresholdCurve], r: int, kind: str) -> ScalingReport:
    """
    Crossing points per curve and a log-log fit across n.

    The fit uses curves without a host (or all with one shared q) whose
    crossing point is defined. Relative curves also report ϑ_q(n) and
    p*(q)/ϑ_q(n).
    """
    rows = []
    for curve in curves:
        crossing = crossing_point(curve)
        theta = ratio = None
        if curve.q is not None:
            theta = theta_q(r, curve.n, curve.q)
            if crossing is not None and math.isfinite(theta):
                ratio = crossing / theta
        rows.append(ScalingRow(curve.n, curve.q, crossing, theta, ratio))

    usable = [row for row in rows if row.crossing is not None and row.crossing > 0]
    slope = intercept = None
    if len({row.q for row in usable}) == 1 and len({row.n for row in usable}) >= 2:
        fit = scipy_stats.linregress(
            np.log([row.n for row in usable]), np.log([row.crossing for row in usable])
        )
        slope, intercept = float(fit.slope), float(fit.intercept)
    return ScalingReport(
        r=r,
        property=kind,
        rows=tuple(rows),
        fitted_exponent=slope,
        intercept=intercept,
        predicted_exponent=predicted_exponent(r, kind),
    )


def joint_scan(
    r: int,
    eps: float,
    n: int,
    p_grid: Sequence[float],
    q_grid: Sequence[float],
    trials: int,
    seed: int,
    budget: int = DEFAULT_BUDGET,
    mode: str = MODE_SOLVER,
    threads: Optional[int] = None,
) -> Tuple[List[ThresholdCurve], ScalingReport]:
    """
    Scan P(R^(r)(n,p) is ε-Turánnical for G(n,q)) over a p × q grid.

    Raises:
        ParameterError: If ε >= 1/(r-2), where the premise
            (1+ε)(r-2)/(r-1)·e(G) < e(G) is never met
    """
    try:
        target = PropertySpec(kind=PROPERTY_EPS_FOR_G, eps=eps)
    except ValidationError as e:
        raise ParameterError(f"invalid eps: {e.errors()[0]['msg']}")
    if r < 3:
        raise ParameterError(f"r must be at least 3, got {r}")
    if target.eps_fraction * (r - 2) >= 1:
        raise ParameterError(
            f"eps={eps} is not below 1/(r-2) = 1/{r - 2}: no subgraph of G can have more "
            "than (1+eps)(r-2)/(r-1) e(G) edges, so every hypergraph is vacuously "
            "eps-Turannical for G"
        )
    curves = threshold_scan(
        r, n, p_grid, target, trials, seed,
        budget=budget, mode=mode, q_grid=q_grid, threads=threads,
    )
    return curves, scaling_report(curves, r, PROPERTY_EPS_FOR_G)
