"""Hedge-annotated forecast sentences rendered from summary statistics.

Sentences are built from a template config (JSON, swappable without code
changes). Placeholders have fixed meanings:

- ``{mean} {q25} {q75} {min} {max}`` become number spans carrying the raw
  statistic value, displayed rounded to whole degrees;
- ``{magnitude}`` becomes a hedge span holding the skew magnitude word;
- ``{direction}`` becomes a plain span ("higher"/"lower").

Literal template text is scanned against the hedge lexicon (longest match
first, on word boundaries); matches become hedge spans, the rest plain
spans. Concatenating a sentence's span texts reconstructs it exactly.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import FormatError
from .stats import SummaryStats

NUMBER_SLOTS = ("mean", "q25", "q75", "min", "max")

SPAN_PLAIN = "plain"
SPAN_HEDGE = "hedge"
SPAN_NUMBER = "number"


@dataclass(frozen=True)
class Span:
    kind: str
    text: str
    value: float | None = None  # set for number spans only


@dataclass(frozen=True)
class Sentence:
    index: int
    spans: tuple[Span, ...]

    @property
    def text(self) -> str:
        return "".join(span.text for span in self.spans)


@dataclass(frozen=True)
class AnnotatedText:
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class SentenceTemplate:
    template: str
    requires_skew: bool = False


@dataclass(frozen=True)
class TemplateConfig:
    hedge_lexicon: tuple[str, ...]
    sentences: tuple[SentenceTemplate, ...]


def load_templates(path: str | Path | None = None) -> TemplateConfig:
    """Load a template config file; None loads the packaged default."""
    if path is None:
        raw = resources.files("hedgecast").joinpath("data/templates.json").read_text("utf-8")
    else:
        raw = Path(path).read_text("utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"template config is not valid JSON: {exc}") from None
    try:
        lexicon = tuple(data["hedge_lexicon"])
        sentences = tuple(
            SentenceTemplate(
                template=entry["template"],
                requires_skew=bool(entry.get("requires_skew", False)),
            )
            for entry in data["sentences"]
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"template config missing field: {exc}") from None
    if not lexicon or not sentences:
        raise FormatError("template config needs a hedge lexicon and at least one sentence")
    return TemplateConfig(hedge_lexicon=lexicon, sentences=sentences)


def format_temperature(v: float) -> str:
    """Round half-up to a whole degree and suffix the unit, e.g. 31.5 -> "32°F"."""
    return f"{int(math.floor(v + 0.5))}°F"


def _hedge_pattern(lexicon: tuple[str, ...]) -> re.Pattern[str]:
    # Longest first so "most likely" wins over "likely".
    alternatives = sorted(lexicon, key=len, reverse=True)
    return re.compile(r"\b(?:" + "|".join(re.escape(h) for h in alternatives) + r")\b")

_PLACEHOLDER = re.compile(r"\{([a-z0-9_]+)\}")


def _literal_spans(text: str, hedges: re.Pattern[str]) -> list[Span]:
    spans: list[Span] = []
    pos = 0
    for match in hedges.finditer(text):
        if match.start() > pos:
            spans.append(Span(SPAN_PLAIN, text[pos:match.start()]))
        spans.append(Span(SPAN_HEDGE, match.group(0)))
        pos = match.end()
    if pos < len(text):
        spans.append(Span(SPAN_PLAIN, text[pos:]))
    return spans


def render_text(
    stats: SummaryStats,
    degenerate: bool = False,
    config: TemplateConfig | None = None,
) -> AnnotatedText:
    """Render the templated forecast sentences for ``stats``.

    Sentences whose template requires skew are omitted when ``degenerate``
    is set, and the remaining sentences are re-indexed from 0.
    """
    if config is None:
        config = load_templates()
    hedges = _hedge_pattern(config.hedge_lexicon)
    values = {slot: getattr(stats, slot) for slot in NUMBER_SLOTS}

    sentences: list[Sentence] = []
    for tpl in config.sentences:
        if tpl.requires_skew and degenerate:
            continue
        spans: list[Span] = []
        pos = 0
        for match in _PLACEHOLDER.finditer(tpl.template):
            if match.start() > pos:
                spans.extend(_literal_spans(tpl.template[pos:match.start()], hedges))
            slot = match.group(1)
            if slot in values:
                spans.append(Span(SPAN_NUMBER, format_temperature(values[slot]), value=values[slot]))
            elif slot == "magnitude":
                spans.append(Span(SPAN_HEDGE, stats.skew_magnitude))
            elif slot == "direction":
                spans.append(Span(SPAN_PLAIN, stats.skew_direction))
            else:
                raise FormatError(f"unknown template placeholder {{{slot}}}")
            pos = match.end()
        if pos < len(tpl.template):
            spans.extend(_literal_spans(tpl.template[pos:], hedges))
        sentences.append(Sentence(index=len(sentences), spans=tuple(spans)))
    return AnnotatedText(sentences=tuple(sentences))
