"""ForecastBundle assembly and its canonical JSON serialization.

build_bundle runs the whole pipeline (stats -> text -> speech -> charts ->
interaction payloads) for one trial. The JSON form is canonical: fixed key
order, compact separators, UTF-8 — the same trial always serializes to
byte-identical JSON.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DegenerateDistributionError
from .interaction import (
    CumulativePayload,
    HedgeEffect,
    IconArrayPayload,
    bin_cumulative,
    hedge_effect,
    occurrence_payload,
)
from .speech import SsmlDocument, TimingManifest, estimate_timings, to_ssml
from .stats import summary_stats
from .textgen import (
    SPAN_NUMBER,
    AnnotatedText,
    TemplateConfig,
    render_text,
)
from .trials import TrialDataset
from .vizspec import (
    DensitySpec,
    DotPlotSpec,
    axis_domain,
    highlight_region,
    kde_density,
    quantile_dotplot,
)

HEDGE_COLOR = "#757575"
FREEZING_POINT_F = 32


@dataclass(frozen=True)
class BinPayloads:
    bin_index: int
    count: int
    occurrence: IconArrayPayload
    cumulative: CumulativePayload


@dataclass(frozen=True)
class NumberPayload:
    value: float
    text: str
    bin_index: int
    icon_array: IconArrayPayload


@dataclass(frozen=True)
class InteractionTables:
    per_bin: tuple[BinPayloads, ...]
    per_number: tuple[NumberPayload, ...]


@dataclass(frozen=True)
class Style:
    hedge_color: str
    hedge_effect: HedgeEffect


@dataclass(frozen=True)
class ForecastBundle:
    trial_id: int
    threshold_f: int
    annotated_text: AnnotatedText
    ssml: SsmlDocument
    timing_manifest: TimingManifest
    density_spec: DensitySpec | None  # None for zero-variance trials
    dotplot_spec: DotPlotSpec
    interaction_tables: InteractionTables
    style: Style


def build_bundle(trial: TrialDataset, templates: TemplateConfig | None = None) -> ForecastBundle:
    """Assemble the complete multimodal payload for one trial."""
    stats = summary_stats(trial.samples)
    text = render_text(stats, degenerate=stats.degenerate, config=templates)
    ssml = to_ssml(text)
    manifest = estimate_timings(text)

    domain = axis_domain(trial.samples)
    if stats.degenerate:
        density = None
    else:
        try:
            density = kde_density(trial.samples, domain)
        except DegenerateDistributionError:
            density = None
    dotplot = quantile_dotplot(trial.samples, domain)

    per_bin = []
    for b, interval in enumerate(dotplot.bins):
        midpoint = (interval.lo + interval.hi) / 2.0
        occ = occurrence_payload(dotplot, midpoint)
        per_bin.append(
            BinPayloads(
                bin_index=b,
                count=occ.filled,
                occurrence=occ,
                cumulative=bin_cumulative(dotplot, b),
            )
        )
    per_number = []
    for sentence in text.sentences:
        for span in sentence.spans:
            if span.kind == SPAN_NUMBER:
                icon = occurrence_payload(dotplot, span.value)
                region = highlight_region(dotplot, span.value)
                per_number.append(
                    NumberPayload(
                        value=span.value,
                        text=span.text,
                        bin_index=region.bin_index,
                        icon_array=icon,
                    )
                )

    return ForecastBundle(
        trial_id=trial.trial_id,
        threshold_f=FREEZING_POINT_F,
        annotated_text=text,
        ssml=ssml,
        timing_manifest=manifest,
        density_spec=density,
        dotplot_spec=dotplot,
        interaction_tables=InteractionTables(
            per_bin=tuple(per_bin), per_number=tuple(per_number)
        ),
        style=Style(hedge_color=HEDGE_COLOR, hedge_effect=hedge_effect()),
    )


def _span_dict(span) -> dict:
    d = {"kind": span.kind, "text": span.text}
    if span.kind == SPAN_NUMBER:
        d["value"] = span.value
    return d


def _icon_dict(icon: IconArrayPayload) -> dict:
    return {
        "filled": icon.filled,
        "total": icon.total,
        "rows": icon.rows,
        "cols": icon.cols,
        "caption": icon.caption,
    }


def _cumulative_dict(c: CumulativePayload) -> dict:
    return {
        "threshold_f": c.threshold_f,
        "probability": c.probability,
        "caption": c.caption,
    }


def bundle_to_dict(bundle: ForecastBundle) -> dict:
    """Plain-dict form of the bundle, in the documented key order."""
    return {
        "trial_id": bundle.trial_id,
        "threshold_f": bundle.threshold_f,
        "annotated_text": {
            "sentences": [
                {"index": s.index, "spans": [_span_dict(sp) for sp in s.spans]}
                for s in bundle.annotated_text.sentences
            ]
        },
        "ssml": bundle.ssml.markup,
        "timing_manifest": [
            {"sentence_index": e.sentence_index, "start_s": e.start_s, "end_s": e.end_s}
            for e in bundle.timing_manifest.entries
        ],
        "density_spec": None
        if bundle.density_spec is None
        else {
            "grid": list(bundle.density_spec.grid),
            "density": list(bundle.density_spec.density),
            "bandwidth": bundle.density_spec.bandwidth,
        },
        "dotplot_spec": {
            "domain": {"lo": bundle.dotplot_spec.domain.lo, "hi": bundle.dotplot_spec.domain.hi},
            "bins": [{"lo": b.lo, "hi": b.hi} for b in bundle.dotplot_spec.bins],
            "dots": [
                {
                    "quantile_index": d.quantile_index,
                    "bin_index": d.bin_index,
                    "stack_position": d.stack_position,
                }
                for d in bundle.dotplot_spec.dots
            ],
        },
        "interaction_tables": {
            "per_bin": [
                {
                    "bin_index": p.bin_index,
                    "count": p.count,
                    "occurrence": _icon_dict(p.occurrence),
                    "cumulative": _cumulative_dict(p.cumulative),
                }
                for p in bundle.interaction_tables.per_bin
            ],
            "per_number": [
                {
                    "value": p.value,
                    "text": p.text,
                    "bin_index": p.bin_index,
                    "icon_array": _icon_dict(p.icon_array),
                }
                for p in bundle.interaction_tables.per_number
            ],
        },
        "style": {
            "hedge_color": bundle.style.hedge_color,
            "hedge_effect": {
                "wobble_deg": bundle.style.hedge_effect.wobble_deg,
                "blur_px": bundle.style.hedge_effect.blur_px,
            },
        },
    }


def bundle_to_json(bundle: ForecastBundle) -> str:
    """Canonical, byte-stable JSON for a bundle."""
    return json.dumps(bundle_to_dict(bundle), ensure_ascii=False, separators=(",", ":"))
