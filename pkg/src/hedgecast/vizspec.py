"""Renderer-agnostic specs for the density plot and 100-quantile dot plot.

Both charts share one x-axis domain: the sample range padded to whole
degrees (floor(min) - 1 to ceil(max) + 1). The density is a Gaussian KDE
with Silverman's bandwidth evaluated on a 128-point grid. The dot plot
places the 100 type-7 quantiles at midpoint probabilities (i - 0.5)/100
into 20 equal-width bins (right-open, last bin closed) and stacks dots in
quantile order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateDistributionError, OutOfDomainError, ParameterError
from .stats import quantile

GRID_POINTS = 128
N_BINS = 20
N_DOTS = 100


@dataclass(frozen=True)
class AxisDomain:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ParameterError(f"axis domain must satisfy lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class DensitySpec:
    grid: tuple[float, ...]
    density: tuple[float, ...]
    bandwidth: float


@dataclass(frozen=True)
class BinInterval:
    lo: float
    hi: float


@dataclass(frozen=True)
class Dot:
    quantile_index: int  # 1..100
    bin_index: int       # 0..19
    stack_position: int


@dataclass(frozen=True)
class DotPlotSpec:
    domain: AxisDomain
    bins: tuple[BinInterval, ...]
    dots: tuple[Dot, ...]

    def bin_counts(self) -> list[int]:
        counts = [0] * len(self.bins)
        for dot in self.dots:
            counts[dot.bin_index] += 1
        return counts


@dataclass(frozen=True)
class HighlightRegion:
    bin_index: int
    dot_indices: tuple[int, ...]  # quantile indices of dots in the bin


def axis_domain(samples: Sequence[float]) -> AxisDomain:
    """Whole-degree padded domain: floor(min) - 1 to ceil(max) + 1."""
    if len(samples) == 0:
        raise ParameterError("axis_domain of an empty sample")
    return AxisDomain(
        lo=float(math.floor(min(samples)) - 1),
        hi=float(math.ceil(max(samples)) + 1),
    )


def silverman_bandwidth(samples: Sequence[float]) -> float:
    """Rule-of-thumb bandwidth 0.9 * min(sd, IQR/1.34) * n**(-1/5).

    ``sd`` is the sample standard deviation (ddof=1) and the IQR comes
    from the type-7 quantiles. A zero IQR (heavily tied data) falls back
    to the standard deviation alone.
    """
    x = np.asarray(samples, dtype=float)
    sd = float(np.std(x, ddof=1))
    iqr = quantile(samples, 0.75) - quantile(samples, 0.25)
    scale = min(sd, iqr / 1.34) if iqr > 0 else sd
    return 0.9 * scale * x.size ** (-1.0 / 5.0)


def kde_density(samples: Sequence[float], domain: AxisDomain) -> DensitySpec:
    """Gaussian KDE evaluated on a 128-point grid spanning ``domain``."""
    x = np.asarray(samples, dtype=float)
    if x.size < 2:
        raise ParameterError(f"kde_density needs at least 2 samples, got {x.size}")
    if float(np.var(x)) == 0.0:
        raise DegenerateDistributionError("all samples equal: density undefined")
    h = silverman_bandwidth(samples)
    grid = np.linspace(domain.lo, domain.hi, GRID_POINTS)
    z = (grid[:, None] - x[None, :]) / h
    density = np.exp(-0.5 * z * z).sum(axis=1) / (x.size * h * math.sqrt(2.0 * math.pi))
    return DensitySpec(
        grid=tuple(float(g) for g in grid),
        density=tuple(float(d) for d in density),
        bandwidth=h,
    )


def _bin_index(v: float, domain: AxisDomain) -> int:
    width = domain.width / N_BINS
    b = int(math.floor((v - domain.lo) / width))
    # Right-open bins; the final bin closes so the domain maximum is kept.
    return min(max(b, 0), N_BINS - 1)


def quantile_dotplot(samples: Sequence[float], domain: AxisDomain) -> DotPlotSpec:
    """Bin the 100 midpoint-probability quantiles into 20 equal-width bins."""
    if len(samples) == 0:
        raise ParameterError("quantile_dotplot of an empty sample")
    if domain.lo > min(samples) or domain.hi < max(samples):
        raise ParameterError(
            f"domain [{domain.lo}, {domain.hi}] does not cover the samples"
        )
    width = domain.width / N_BINS
    edges = [domain.lo + k * width for k in range(N_BINS)] + [domain.hi]
    bins = tuple(BinInterval(edges[k], edges[k + 1]) for k in range(N_BINS))

    dots = []
    fill = [0] * N_BINS
    for i in range(1, N_DOTS + 1):
        q = quantile(samples, (i - 0.5) / N_DOTS)
        b = _bin_index(q, domain)
        dots.append(Dot(quantile_index=i, bin_index=b, stack_position=fill[b]))
        fill[b] += 1
    return DotPlotSpec(domain=domain, bins=bins, dots=tuple(dots))


def highlight_region(spec: DotPlotSpec, v: float) -> HighlightRegion:
    """The bin containing ``v`` plus the quantile indices of its dots."""
    if v < spec.domain.lo or v > spec.domain.hi:
        raise OutOfDomainError(
            f"{v} is outside the axis domain [{spec.domain.lo}, {spec.domain.hi}]"
        )
    b = _bin_index(v, spec.domain)
    indices = tuple(dot.quantile_index for dot in spec.dots if dot.bin_index == b)
    return HighlightRegion(bin_index=b, dot_indices=indices)
