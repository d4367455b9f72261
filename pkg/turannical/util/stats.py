"""
Interval estimates for Monte Carlo output.
"""

from typing import Sequence, Tuple

import numpy as np
from scipy import stats

from turannical.config.constants import CONFIDENCE_LEVEL


def wilson_interval(
    successes: int, trials: int, level: float = CONFIDENCE_LEVEL
) -> Tuple[float, float]:
    """
    Wilson score interval for a binomial proportion.

    Args:
        successes: Number of successes
        trials: Number of decided trials
        level: Confidence level

    Returns:
        (low, high); (0.0, 1.0) when there are no trials
    """
    if trials <= 0:
        return 0.0, 1.0
    ci = stats.binomtest(int(successes), int(trials)).proportion_ci(level, method="wilson")
    # endpoints are exact at the boundaries
    low = 0.0 if successes == 0 else float(ci.low)
    high = 1.0 if successes == trials else float(ci.high)
    return low, high


def mean_interval(
    samples: Sequence[float], level: float = CONFIDENCE_LEVEL
) -> Tuple[float, float, float]:
    """
    Mean with a Student-t confidence interval.

    Args:
        samples: Observations
        level: Confidence level

    Returns:
        (mean, low, high); the interval collapses to the mean when the
        samples have no spread or there is a single sample
    """
    data = np.asarray(samples, dtype=float)
    mean = float(data.mean())
    if len(data) < 2:
        return mean, mean, mean
    sem = float(stats.sem(data))
    if sem == 0.0:
        return mean, mean, mean
    low, high = stats.t.interval(level, len(data) - 1, loc=mean, scale=sem)
    return mean, float(low), float(high)
