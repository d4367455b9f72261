"""
Tests for threshold scans, crossing points, sharpness and scaling.
"""

import math

import pytest

from turannical.config.settings import PropertySpec, ScanConfig
from turannical.core.ensembles import EnsembleSpec
from turannical.core.serialization import dump_curves_csv
from turannical.core.threshold import (
    ThresholdCurve,
    crossing_point,
    estimate_success,
    joint_scan,
    make_point,
    run_scan,
    scaling_report,
    sharpness_from_curve,
    sharpness_probe,
    threshold_scan,
)
from turannical.errors import ParameterError

EXACT = PropertySpec(kind="exact")


def synthetic_curve(n, grid, successes, trials=100, unknowns=None):
    unknowns = unknowns or [0] * len(grid)
    points = tuple(
        make_point(n, p, None, "exact", "solver", trials, s, u)
        for p, s, u in zip(grid, successes, unknowns)
    )
    return ThresholdCurve(3, n, None, "exact", "solver", points)


class TestCurvePoint:
    """Test point estimates and intervals."""

    def test_estimate_and_interval(self):
        """Test successes over decided trials with a Wilson interval."""
        point = make_point(6, 0.5, None, "exact", "solver", 10, 3, 4)
        assert point.decided == 6
        assert point.estimate == 0.5
        assert point.ci_lo < 0.5 < point.ci_hi

    def test_all_unknown(self):
        """Test that a point with no decided trial is unusable."""
        point = make_point(6, 0.5, None, "exact", "solver", 10, 0, 10)
        assert not point.usable
        assert math.isnan(point.estimate)
        assert (point.ci_lo, point.ci_hi) == (0.0, 1.0)


class TestCrossingPoint:
    """Test the bracketed crossing estimate."""

    def test_interpolated_crossing(self):
        """Test a step between 0.3 and 0.5 crossing at 0.4."""
        curve = synthetic_curve(10, [0.2, 0.3, 0.5, 0.6], [0, 10, 90, 100])
        assert crossing_point(curve) == pytest.approx(0.4)

    def test_no_bracket(self):
        """Test that a flat curve has no crossing."""
        curve = synthetic_curve(10, [0.2, 0.4, 0.6], [50, 50, 50])
        assert crossing_point(curve) is None

    def test_too_few_trials(self):
        """Test that wide intervals prevent a bracket."""
        curve = synthetic_curve(10, [0.2, 0.8], [0, 2], trials=2)
        assert crossing_point(curve) is None

    def test_unusable_points_skipped(self):
        """Test that all-unknown points do not break the bracket."""
        curve = synthetic_curve(
            10, [0.2, 0.3, 0.4, 0.5, 0.6], [0, 10, 0, 90, 100], unknowns=[0, 0, 100, 0, 0]
        )
        assert crossing_point(curve) == pytest.approx(0.4)


class TestSharpness:
    """Test the width of the rise from 0.1 to 0.9."""

    def test_width(self):
        """Test p_lo = 0.3 and p_hi = 0.5."""
        report = sharpness_from_curve(synthetic_curve(10, [0.2, 0.3, 0.5, 0.6], [0, 10, 90, 100]))
        assert not report.degenerate
        assert (report.p_lo, report.p_hi) == (0.3, 0.5)
        assert report.width == pytest.approx(0.2)

    def test_never_low(self):
        """Test that a curve starting above 0.1 is degenerate."""
        report = sharpness_from_curve(synthetic_curve(10, [0.2, 0.5], [50, 100]))
        assert report.degenerate
        assert report.width is None

    def test_never_high(self):
        """Test that a curve never reaching 0.9 is degenerate."""
        report = sharpness_from_curve(synthetic_curve(10, [0.2, 0.5], [0, 50]))
        assert report.degenerate
        assert report.p_hi is None

    def test_probe(self):
        """Test a solver probe whose grid starts at p = 0."""
        report = sharpness_probe(3, 5, [0.0, 0.5, 1.0], trials=5, seed=4, threads=1)
        assert not report.degenerate
        assert report.p_lo <= report.p_hi
        assert report.width == pytest.approx(report.p_hi - report.p_lo)


class TestScaling:
    """Test the log-log fit of crossing points."""

    def test_fitted_exponent(self):
        """Test that p* halving as n doubles fits exponent -1."""
        curves = [
            synthetic_curve(10, [0.2, 0.3, 0.5, 0.6], [0, 10, 90, 100]),
            synthetic_curve(20, [0.1, 0.15, 0.25, 0.3], [0, 10, 90, 100]),
        ]
        report = scaling_report(curves, 3, "eps")
        assert [row.crossing for row in report.rows] == [pytest.approx(0.4), pytest.approx(0.2)]
        assert report.fitted_exponent == pytest.approx(-1.0)
        assert report.predicted_exponent == -1

    def test_single_n(self):
        """Test that one n gives no fit."""
        report = scaling_report([synthetic_curve(10, [0.2, 0.3, 0.5, 0.6], [0, 10, 90, 100])], 3, "exact")
        assert report.fitted_exponent is None
        assert report.predicted_exponent == 0


class TestThresholdScan:
    """Test Monte Carlo scans."""

    def test_extreme_grid(self):
        """Test that p = 0 always fails and p = 1 always succeeds."""
        (curve,) = threshold_scan(3, 5, [0.0, 1.0], EXACT, trials=4, seed=1, threads=1)
        assert curve.estimates() == [0.0, 1.0]
        assert curve.probabilities() == [0.0, 1.0]
        assert all(point.unknowns == 0 for point in curve.points)

    def test_monotone_in_p(self):
        """Test that coupled solver curves never decrease."""
        (curve,) = threshold_scan(3, 6, [0.1, 0.3, 0.5, 0.7, 0.9], EXACT, trials=8, seed=2, threads=1)
        successes = [point.successes for point in curve.points]
        assert successes == sorted(successes)

    def test_thread_invariance(self):
        """Test that the CSV does not depend on the worker count."""
        arguments = (3, 6, [0.2, 0.5, 0.8], EXACT, 6, 17)
        serial = threshold_scan(*arguments, threads=1)
        parallel = threshold_scan(*arguments, threads=2)
        assert dump_curves_csv(serial) == dump_curves_csv(parallel)

    def test_filter_mode(self):
        """Test a filter scan at the extremes."""
        (curve,) = threshold_scan(3, 6, [0.0, 1.0], EXACT, trials=3, seed=1, mode="filter", threads=1)
        assert curve.mode == "filter"
        assert curve.estimates() == [0.0, 1.0]

    def test_relative_curves(self):
        """Test one curve per q value for a relative property."""
        curves = threshold_scan(
            3, 5, [0.0, 1.0], PropertySpec(kind="exact-for-g"), trials=2, seed=3,
            q_grid=[0.5, 1.0], threads=1,
        )
        assert [curve.q for curve in curves] == [0.5, 1.0]
        assert curves[1].points[1].estimate == 1.0

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(p_grid=[0.5, 0.2]),
            dict(p_grid=[1.2]),
            dict(trials=0),
            dict(mode="oracle"),
            dict(q_grid=[0.5]),
            dict(threads=0),
            dict(seed=-1),
        ],
    )
    def test_invalid_arguments(self, kwargs):
        """Test parameter validation."""
        arguments = dict(r=3, n=5, p_grid=[0.2, 0.5], target=EXACT, trials=2, seed=0)
        arguments.update(kwargs)
        with pytest.raises(ParameterError):
            threshold_scan(**arguments)

    def test_run_scan(self):
        """Test a configuration with several vertex counts."""
        config = ScanConfig.model_validate(
            {"r": 3, "n_list": [5, 6], "property": {"kind": "exact"},
             "grid": {"p": [0.0, 1.0]}, "trials": 2, "seed": 9}
        )
        curves = run_scan(config, threads=1)
        assert [curve.n for curve in curves] == [5, 6]

    def test_estimate_success(self):
        """Test a single ensemble point."""
        point = estimate_success(EnsembleSpec("hypergraph", 3, 5, p=1.0, master_seed=3), EXACT, trials=3, threads=1)
        assert point.estimate == 1.0
        with pytest.raises(ParameterError):
            estimate_success(EnsembleSpec("graph", 3, 5, q=0.5), EXACT, trials=3)


class TestJointScan:
    """Test the p × q scan of the relative ε-property."""

    def test_small_grid(self):
        """Test the extremes of the grid on K_5 hosts."""
        curves, report = joint_scan(3, 0.2, 5, [0.0, 1.0], [1.0], trials=2, seed=5, threads=1)
        assert curves[0].estimates() == [0.0, 1.0]
        assert report.property == "eps-for-g"
        assert report.rows[0].theta == pytest.approx(5.0 ** -1)

    def test_complete_row_increases_in_q(self):
        """Test that the p = 1 row rises from sparse hosts to the complete host."""
        # K_7 keeps at most 12 triangle-free edges, under 0.6 · 21
        curves, _ = joint_scan(3, 0.2, 7, [1.0], [0.2, 1.0], trials=20, seed=14, threads=1)
        assert [curve.q for curve in curves] == [0.2, 1.0]
        sparse, dense = (curve.points[0].estimate for curve in curves)
        assert sparse < dense

    @pytest.mark.parametrize("r, eps", [(3, 1.0), (3, 1.5), (4, 0.5)])
    def test_vacuous_eps(self, r, eps):
        """Test that ε >= 1/(r-2) is refused."""
        with pytest.raises(ParameterError, match="vacuously"):
            joint_scan(r, eps, 6, [0.5], [0.5], trials=1, seed=0)


@pytest.mark.slow
class TestFiniteSizeTrends:
    """Statistical acceptance runs on moderate n."""

    def test_exact_crossing_is_central(self):
        """Test that p*(n) lies in [0.25, 0.75] for n in {8, 10, 12}."""
        grid = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
        for n in (8, 10, 12):
            (curve,) = threshold_scan(3, n, grid, EXACT, trials=400, seed=2024)
            successes = [point.successes for point in curve.points]
            assert successes == sorted(successes)
            crossing = crossing_point(curve)
            assert crossing is not None
            assert 0.25 <= crossing <= 0.75

    def test_eps_crossing_scales_like_one_over_n(self):
        """Test that p*(n)·n stays within a factor 3 for ε = 1/4."""
        grid = [0.02, 0.04, 0.06, 0.08, 0.1, 0.13, 0.16, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.8]
        target = PropertySpec(kind="eps", eps=0.25)
        curves = [
            threshold_scan(3, n, grid, target, trials=400, seed=2024)[0] for n in (10, 14, 18)
        ]
        report = scaling_report(curves, 3, "eps")
        assert all(row.crossing is not None for row in report.rows)
        products = [row.crossing * row.n for row in report.rows]
        assert max(products) <= 3 * min(products)
