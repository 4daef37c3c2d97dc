"""Summary statistics behind the forecast text and likelihood queries.

Conventions are pinned here so every consumer agrees:

- quantiles use linear interpolation on sorted data at continuous index
  ``h = (n - 1) * p`` (the common "type 7" rule, numpy's default);
- skewness is the population-moment ratio ``m3 / m2**1.5`` with central
  moments ``m_k = mean((x - xbar)**k)``;
- the empirical CDF is the plain at-or-below count fraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateDistributionError, ParameterError

# Verbal skew scale: |s| < 0.5 slight, < 1.0 moderate, else significant.
DEFAULT_SKEW_THRESHOLDS = (0.5, 1.0)

MAGNITUDES = ("slightly", "moderately", "significantly")
DIRECTIONS = ("higher", "lower")


@dataclass(frozen=True)
class SummaryStats:
    """The statistics verbalized by the text module.

    ``degenerate`` is set when every sample is identical; skew fields are
    then forced to (0, "slightly", "higher") and downstream rendering
    omits the skew sentence.
    """

    mean: float
    q25: float
    q75: float
    min: float
    max: float
    skewness: float
    skew_magnitude: str
    skew_direction: str
    degenerate: bool = False


def skewness(samples: Sequence[float]) -> float:
    """Moment skewness of a sample.

    Parameters
    ----------
    samples : sequence of float
        At least 3 observations.

    Returns
    -------
    float
        ``m3 / m2**1.5`` with population central moments
        ``m_k = (1/n) * sum((x - xbar)**k)``.

    Raises
    ------
    ParameterError
        Fewer than 3 samples.
    DegenerateDistributionError
        All samples equal (``m2 == 0``).
    """
    x = np.asarray(samples, dtype=float)
    if x.size < 3:
        raise ParameterError(f"skewness needs at least 3 samples, got {x.size}")
    centered = x - x.mean()
    m2 = float(np.mean(centered**2))
    if m2 == 0.0:
        raise DegenerateDistributionError("all samples equal: skewness undefined")
    m3 = float(np.mean(centered**3))
    return m3 / m2**1.5


def quantile(samples: Sequence[float], p: float) -> float:
    """Linear-interpolation quantile (type 7) at probability ``p``.

    Sorted data is indexed at the continuous position ``h = (n - 1) * p``
    and linearly interpolated between the bracketing order statistics, so
    ``p = 0`` returns the minimum and ``p = 1`` the maximum.
    """
    if len(samples) == 0:
        raise ParameterError("quantile of an empty sample")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"quantile probability must be in [0, 1], got {p}")
    return float(np.quantile(np.asarray(samples, dtype=float), p))


def skew_label(s: float, thresholds: tuple[float, float] = DEFAULT_SKEW_THRESHOLDS) -> tuple[str, str]:
    """Map a skewness value to (magnitude, direction) words.

    Magnitude by ``abs(s)``: below ``thresholds[0]`` is "slightly", below
    ``thresholds[1]`` is "moderately" (lower bound inclusive), anything
    larger is "significantly". Non-negative skew reads as a longer tail
    toward "higher" temperatures.
    """
    mild, strong = thresholds
    a = abs(s)
    if a < mild:
        magnitude = "slightly"
    elif a < strong:
        magnitude = "moderately"
    else:
        magnitude = "significantly"
    direction = "higher" if s >= 0 else "lower"
    return magnitude, direction


def summary_stats(
    samples: Sequence[float],
    skew_thresholds: tuple[float, float] = DEFAULT_SKEW_THRESHOLDS,
) -> SummaryStats:
    """Compute the full SummaryStats for a trial's samples.

    Zero-variance samples do not raise: the degenerate flag is set and the
    skew fields take their conventional defaults so pathological inputs
    still produce a (skew-free) forecast.
    """
    if len(samples) < 3:
        raise ParameterError(f"summary_stats needs at least 3 samples, got {len(samples)}")
    x = np.asarray(samples, dtype=float)
    try:
        skew = skewness(samples)
        degenerate = False
    except DegenerateDistributionError:
        skew = 0.0
        degenerate = True
    magnitude, direction = skew_label(skew, skew_thresholds)
    return SummaryStats(
        mean=float(x.mean()),
        q25=quantile(samples, 0.25),
        q75=quantile(samples, 0.75),
        min=float(x.min()),
        max=float(x.max()),
        skewness=skew,
        skew_magnitude=magnitude,
        skew_direction=direction,
        degenerate=degenerate,
    )


def ecdf(samples: Sequence[float], v: float) -> float:
    """Empirical CDF: fraction of samples at or below ``v``."""
    if len(samples) == 0:
        raise ParameterError("ecdf of an empty sample")
    x = np.asarray(samples, dtype=float)
    return float(np.count_nonzero(x <= v)) / x.size
