"""Precomputed payloads behind the active interface's hover interactions.

Each dot of the quantile dot plot stands for 1% of probability mass, so
the icon array's filled count is simply the dot count of the bin under the
hovered value, and the cumulative likelihood is the dot count at or below
the hovered dot's bin.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .textgen import format_temperature
from .vizspec import DotPlotSpec, N_DOTS, highlight_region

WOBBLE_DEGREES = 3.0
BLUR_PIXELS = 0.5


@dataclass(frozen=True)
class IconArrayPayload:
    filled: int
    caption: str
    total: int = 100
    rows: int = 10
    cols: int = 10


@dataclass(frozen=True)
class CumulativePayload:
    threshold_f: float
    probability: float
    caption: str


@dataclass(frozen=True)
class HedgeEffect:
    wobble_deg: float = WOBBLE_DEGREES
    blur_px: float = BLUR_PIXELS


def _compact(v: float) -> str:
    return format(v, "g")


def occurrence_payload(spec: DotPlotSpec, v: float) -> IconArrayPayload:
    """Icon array for the likelihood of landing near ``v``."""
    region = highlight_region(spec, v)
    filled = len(region.dot_indices)
    caption = f"About {filled} in 100 forecasts land near {format_temperature(v)}"
    return IconArrayPayload(filled=filled, caption=caption)


def bin_cumulative(spec: DotPlotSpec, bin_index: int) -> CumulativePayload:
    """Cumulative at-or-below payload for a bin: dots in bins 0..bin_index."""
    if not 0 <= bin_index < len(spec.bins):
        raise ParameterError(f"bin_index must be in 0..{len(spec.bins) - 1}, got {bin_index}")
    k = sum(1 for dot in spec.dots if dot.bin_index <= bin_index)
    threshold = spec.bins[bin_index].hi
    caption = f"There is a {k}% chance of {_compact(threshold)}°F or lower"
    return CumulativePayload(threshold_f=threshold, probability=k / N_DOTS, caption=caption)


def cumulative_payload(spec: DotPlotSpec, quantile_index: int) -> CumulativePayload:
    """Cumulative at-or-below payload for the hovered dot.

    Counts every dot of the hovered dot's bin, so all dots of one bin
    share the payload.
    """
    if not 1 <= quantile_index <= N_DOTS:
        raise ParameterError(f"quantile_index must be in 1..{N_DOTS}, got {quantile_index}")
    for dot in spec.dots:
        if dot.quantile_index == quantile_index:
            return bin_cumulative(spec, dot.bin_index)
    raise ParameterError(f"dot plot spec has no dot with quantile_index {quantile_index}")


def hedge_effect() -> HedgeEffect:
    """The fixed hover treatment for hedge words."""
    return HedgeEffect()
