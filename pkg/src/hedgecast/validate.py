"""Structural validation of serialized forecast bundles.

``validate_bundle`` runs every documented invariant against a bundle dict
(as loaded from its JSON form) and returns human-readable violation
strings; an empty list means the bundle is valid. Messages name the
violated invariant so batch tooling can triage failures.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .bundle import FREEZING_POINT_F, HEDGE_COLOR
from .interaction import BLUR_PIXELS, WOBBLE_DEGREES
from .speech import HEDGE_RATE, NUMBER_BREAK, NUMBER_RATE, PITCH_SHIFT
from .vizspec import GRID_POINTS, N_BINS, N_DOTS

_BIN_WIDTH_TOL = 1e-9
_DENSITY_INTEGRAL_WINDOW = (0.98, 1.02)
_ALLOWED_SSML_TAGS = {"speak", "s", "prosody", "break"}

_TOP_KEYS = (
    "trial_id",
    "threshold_f",
    "annotated_text",
    "ssml",
    "timing_manifest",
    "density_spec",
    "dotplot_spec",
    "interaction_tables",
    "style",
)


def validate_bundle(data: dict) -> list[str]:
    """Return all invariant violations found in a bundle dict."""
    violations: list[str] = []
    missing = [k for k in _TOP_KEYS if k not in data]
    if missing:
        return [f"bundle missing required keys: {', '.join(missing)}"]

    _check_constants(data, violations)
    _check_dotplot(data["dotplot_spec"], violations)
    _check_text_and_ssml(data, violations)
    _check_manifest(data, violations)
    _check_density(data, violations)
    _check_tables(data, violations)
    return violations


def _check_constants(data: dict, out: list[str]) -> None:
    if data["threshold_f"] != FREEZING_POINT_F:
        out.append(f"threshold_f must be {FREEZING_POINT_F}, found {data['threshold_f']}")
    style = data["style"]
    if style.get("hedge_color") != HEDGE_COLOR:
        out.append(f"hedge color must be {HEDGE_COLOR}, found {style.get('hedge_color')}")
    effect = style.get("hedge_effect", {})
    if effect.get("wobble_deg") != WOBBLE_DEGREES:
        out.append(f"hedge effect wobble must be {WOBBLE_DEGREES} degrees")
    if effect.get("blur_px") != BLUR_PIXELS:
        out.append(f"hedge effect blur must be {BLUR_PIXELS} px")


def _check_dotplot(spec: dict, out: list[str]) -> None:
    dots = spec.get("dots", [])
    bins = spec.get("bins", [])
    domain = spec.get("domain", {})

    if len(dots) != N_DOTS:
        out.append(f"dot plot must contain exactly {N_DOTS} dots, found {len(dots)}")
    if len(bins) != N_BINS:
        out.append(f"dot plot must contain exactly {N_BINS} bins, found {len(bins)}")
        return

    widths = [b["hi"] - b["lo"] for b in bins]
    if widths and max(widths) - min(widths) > _BIN_WIDTH_TOL:
        out.append(
            f"bin widths must be equal within {_BIN_WIDTH_TOL}, "
            f"spread is {max(widths) - min(widths):.3e}"
        )
    if bins and domain:
        if bins[0]["lo"] != domain.get("lo") or bins[-1]["hi"] != domain.get("hi"):
            out.append("bins must tile the axis domain end to end")
        for left, right in zip(bins, bins[1:]):
            if left["hi"] != right["lo"]:
                out.append("bins must be contiguous")
                break

    counts = [0] * N_BINS
    quantile_indices = []
    for dot in dots:
        b = dot.get("bin_index", -1)
        if not 0 <= b < N_BINS:
            out.append(f"dot bin_index {b} outside 0..{N_BINS - 1}")
            return
        counts[b] += 1
        quantile_indices.append(dot.get("quantile_index"))

    if sum(counts) != len(dots):
        out.append("bin counts must sum to the dot count")
    if len(dots) == N_DOTS and sorted(quantile_indices) != list(range(1, N_DOTS + 1)):
        out.append(f"quantile indices must be exactly 1..{N_DOTS} with no repeats")

    stacks: dict[int, list[int]] = {}
    for dot in dots:
        stacks.setdefault(dot["bin_index"], []).append(dot["stack_position"])
    for b, positions in stacks.items():
        if sorted(positions) != list(range(len(positions))):
            out.append(f"bin {b} stack positions must be gap-free 0..{len(positions) - 1}")

    by_quantile = sorted(dots, key=lambda d: d["quantile_index"])
    for a, b in zip(by_quantile, by_quantile[1:]):
        if b["bin_index"] < a["bin_index"]:
            out.append("bin_index must be nondecreasing in quantile order")
            break


def _check_text_and_ssml(data: dict, out: list[str]) -> None:
    sentences = data["annotated_text"].get("sentences", [])
    domain = data["dotplot_spec"].get("domain", {})

    hedge_spans = 0
    number_spans = 0
    for sentence in sentences:
        has_hedge = False
        for span in sentence.get("spans", []):
            kind = span.get("kind")
            if kind == "hedge":
                hedge_spans += 1
                has_hedge = True
            elif kind == "number":
                number_spans += 1
                value = span.get("value")
                if value is None:
                    out.append("number spans must carry a numeric value")
                elif not domain.get("lo", float("-inf")) <= value <= domain.get("hi", float("inf")):
                    out.append(
                        f"number span value {value} lies outside the axis domain "
                        f"[{domain.get('lo')}, {domain.get('hi')}]"
                    )
        if not has_hedge:
            out.append(f"sentence {sentence.get('index')} must contain at least one hedge span")

    try:
        root = ET.fromstring(data["ssml"])
    except ET.ParseError as exc:
        out.append(f"ssml is not well-formed XML: {exc}")
        return
    tags = {el.tag for el in root.iter()}
    if not tags <= _ALLOWED_SSML_TAGS:
        out.append(f"ssml uses disallowed elements: {sorted(tags - _ALLOWED_SSML_TAGS)}")

    prosody = list(root.iter("prosody"))
    hedge_rate_count = sum(1 for el in prosody if el.get("rate") == HEDGE_RATE)
    number_rate_count = sum(1 for el in prosody if el.get("rate") == NUMBER_RATE)
    break_count = sum(1 for el in root.iter("break") if el.get("time") == NUMBER_BREAK)
    bad_pitch = [el for el in prosody if el.get("pitch") != PITCH_SHIFT]

    if hedge_rate_count != hedge_spans:
        out.append(
            f"hedge span count ({hedge_spans}) must equal rate={HEDGE_RATE} "
            f"prosody count ({hedge_rate_count})"
        )
    if number_rate_count != number_spans:
        out.append(
            f"number span count ({number_spans}) must equal rate={NUMBER_RATE} "
            f"prosody count ({number_rate_count})"
        )
    if break_count != number_spans:
        out.append(
            f"break time={NUMBER_BREAK} count ({break_count}) must equal "
            f"number span count ({number_spans})"
        )
    if bad_pitch:
        out.append(f"every prosody element must carry pitch={PITCH_SHIFT}")

    ssml_sentences = root.findall("s")
    if len(ssml_sentences) != len(sentences):
        out.append(
            f"ssml must hold one <s> per sentence: {len(ssml_sentences)} vs {len(sentences)}"
        )
    else:
        for sentence, element in zip(sentences, ssml_sentences):
            text = "".join(span.get("text", "") for span in sentence.get("spans", []))
            if "".join(element.itertext()) != text:
                out.append(
                    f"stripping ssml markup must reproduce sentence {sentence.get('index')} exactly"
                )


def _check_manifest(data: dict, out: list[str]) -> None:
    manifest = data["timing_manifest"]
    sentences = data["annotated_text"].get("sentences", [])
    if [e.get("sentence_index") for e in manifest] != [s.get("index") for s in sentences]:
        out.append("timing manifest must cover every sentence index in order")
        return
    if manifest and manifest[0]["start_s"] != 0.0:
        out.append("first manifest entry must start at 0")
    for entry in manifest:
        if not entry["end_s"] > entry["start_s"]:
            out.append(f"manifest entry {entry['sentence_index']} must end after it starts")
    for a, b in zip(manifest, manifest[1:]):
        if not b["start_s"] > a["start_s"]:
            out.append("manifest starts must be strictly increasing")
        if b["start_s"] < a["end_s"]:
            out.append("manifest entries must not overlap")


def _check_density(data: dict, out: list[str]) -> None:
    spec = data["density_spec"]
    if spec is None:
        return
    grid = spec.get("grid", [])
    density = spec.get("density", [])
    domain = data["dotplot_spec"].get("domain", {})
    if len(grid) != GRID_POINTS or len(density) != GRID_POINTS:
        out.append(f"density spec must hold {GRID_POINTS} grid and density values")
        return
    if any(b <= a for a, b in zip(grid, grid[1:])):
        out.append("density grid must be strictly ascending")
    if grid[0] != domain.get("lo") or grid[-1] != domain.get("hi"):
        out.append("density grid must span the axis domain")
    if any(d < 0 for d in density):
        out.append("density values must be non-negative")
    if not spec.get("bandwidth", 0) > 0:
        out.append("density bandwidth must be positive")
    integral = float(np.trapezoid(density, grid))
    lo, hi = _DENSITY_INTEGRAL_WINDOW
    if not lo <= integral <= hi:
        out.append(
            f"density trapezoidal integral must lie in [{lo}, {hi}], found {integral:.4f}"
        )


def _check_tables(data: dict, out: list[str]) -> None:
    tables = data["interaction_tables"]
    dots = data["dotplot_spec"].get("dots", [])
    counts = [0] * N_BINS
    for dot in dots:
        b = dot.get("bin_index", -1)
        if 0 <= b < N_BINS:
            counts[b] += 1
    cumulative = list(np.cumsum(counts))

    per_bin = tables.get("per_bin", [])
    if len(per_bin) != N_BINS:
        out.append(f"interaction tables must hold one entry per bin ({N_BINS})")
        return
    for b, entry in enumerate(per_bin):
        if entry.get("bin_index") != b:
            out.append(f"per-bin table entry {b} has mismatched bin_index")
            continue
        occ = entry.get("occurrence", {})
        if occ.get("filled") != counts[b]:
            out.append(
                f"bin {b} occurrence filled ({occ.get('filled')}) must equal its "
                f"dot count ({counts[b]})"
            )
        if (occ.get("total"), occ.get("rows"), occ.get("cols")) != (100, 10, 10):
            out.append(f"bin {b} icon array must be a 10x10 grid of 100")
        if str(occ.get("filled")) not in occ.get("caption", ""):
            out.append(f"bin {b} occurrence caption must mention the filled count")
        cum = entry.get("cumulative", {})
        expected_p = cumulative[b] / N_DOTS
        if cum.get("probability") != expected_p:
            out.append(
                f"bin {b} cumulative probability ({cum.get('probability')}) must equal "
                f"the at-or-below dot fraction ({expected_p})"
            )
    probs = [entry.get("cumulative", {}).get("probability", 0) for entry in per_bin]
    if any(b < a for a, b in zip(probs, probs[1:])):
        out.append("cumulative probabilities must be monotone over bins")

    for entry in tables.get("per_number", []):
        b = entry.get("bin_index", -1)
        if not 0 <= b < N_BINS:
            out.append(f"number payload bin_index {b} outside 0..{N_BINS - 1}")
            continue
        if entry.get("icon_array", {}).get("filled") != counts[b]:
            out.append(
                f"number payload for value {entry.get('value')} must carry the "
                f"dot count of bin {b}"
            )
