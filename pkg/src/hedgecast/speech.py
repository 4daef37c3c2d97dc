"""SSML compilation and the timing manifest that drives animation.

Prosody treatments, applied per span kind:

- hedge spans speak at 65% rate with pitch lowered 5%;
- number spans get a 200 ms break first, then 70% rate at the same
  lowered pitch;
- plain spans are emitted verbatim.

Real deployments get sentence timestamps from the synthesis engine (see
``merge_tts_marks``); for an offline, deterministic manifest we model
speech at 150 words per minute (0.4 s per word), stretch each word by its
span's prosody rate, add 0.2 s per number break, and pause 0.35 s between
sentences. Words are whitespace-delimited tokens of a span, so "32°F"
counts as one word.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence
from xml.sax.saxutils import escape, quoteattr

from .errors import FormatError
from .textgen import SPAN_HEDGE, SPAN_NUMBER, AnnotatedText

HEDGE_RATE = "65%"
NUMBER_RATE = "70%"
PITCH_SHIFT = "-5%"
NUMBER_BREAK = "200ms"

WORD_SECONDS = 0.4  # 150 words per minute
HEDGE_RATE_FACTOR = 0.65
NUMBER_RATE_FACTOR = 0.70
NUMBER_BREAK_SECONDS = 0.2
SENTENCE_GAP_SECONDS = 0.35


@dataclass(frozen=True)
class SsmlDocument:
    """Well-formed XML using only <speak>, <s>, <prosody>, and <break>."""

    markup: str


@dataclass(frozen=True)
class TimingEntry:
    sentence_index: int
    start_s: float
    end_s: float


@dataclass(frozen=True)
class TimingManifest:
    entries: tuple[TimingEntry, ...]

    @property
    def total_s(self) -> float:
        return self.entries[-1].end_s if self.entries else 0.0


def _prosody(text: str, rate: str) -> str:
    return (
        f'<prosody rate={quoteattr(rate)} pitch={quoteattr(PITCH_SHIFT)}>'
        f"{escape(text)}</prosody>"
    )


def to_ssml(text: AnnotatedText) -> SsmlDocument:
    """Compile annotated text to SSML, one <s> element per sentence."""
    parts = ["<speak>"]
    for sentence in text.sentences:
        parts.append("<s>")
        for span in sentence.spans:
            if span.kind == SPAN_HEDGE:
                parts.append(_prosody(span.text, HEDGE_RATE))
            elif span.kind == SPAN_NUMBER:
                parts.append(f'<break time={quoteattr(NUMBER_BREAK)}/>')
                parts.append(_prosody(span.text, NUMBER_RATE))
            else:
                parts.append(escape(span.text))
        parts.append("</s>")
    parts.append("</speak>")
    return SsmlDocument(markup="".join(parts))


def _span_seconds(kind: str, text: str) -> float:
    words = len(text.split())
    if kind == SPAN_HEDGE:
        return words * WORD_SECONDS / HEDGE_RATE_FACTOR
    if kind == SPAN_NUMBER:
        return words * WORD_SECONDS / NUMBER_RATE_FACTOR + NUMBER_BREAK_SECONDS
    return words * WORD_SECONDS


def estimate_timings(text: AnnotatedText) -> TimingManifest:
    """Per-sentence start/end seconds under the offline 150-wpm model."""
    entries = []
    cursor = 0.0
    for sentence in text.sentences:
        if sentence.index > 0:
            cursor += SENTENCE_GAP_SECONDS
        duration = sum(_span_seconds(span.kind, span.text) for span in sentence.spans)
        entries.append(TimingEntry(sentence.index, cursor, cursor + duration))
        cursor += duration
    return TimingManifest(entries=tuple(entries))


def parse_marks(text: str) -> list[tuple[int, float]]:
    """Parse a marks file: a JSON list of [sentence_index, seconds] pairs."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"marks file is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise FormatError("marks file must be a JSON list of [sentence_index, seconds] pairs")
    marks = []
    for entry in data:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise FormatError(f"marks entry {entry!r} is not a [sentence_index, seconds] pair")
        try:
            marks.append((int(entry[0]), float(entry[1])))
        except (TypeError, ValueError):
            raise FormatError(f"marks entry {entry!r} is not numeric") from None
    return marks


def merge_tts_marks(
    manifest: TimingManifest,
    marks: Sequence[tuple[int, float]] | Iterable[tuple[int, float]],
) -> TimingManifest:
    """Replace estimated starts with engine-reported sentence timestamps.

    ``marks`` is a list of (sentence_index, seconds), one per sentence in
    ascending index order with strictly increasing times. Each sentence's
    end becomes the next sentence's start; the last end keeps its
    estimated value. An empty marks list returns the manifest unchanged.
    """
    marks = list(marks)
    if not marks:
        return manifest
    expected = [entry.sentence_index for entry in manifest.entries]
    indices = [int(idx) for idx, _ in marks]
    times = [float(t) for _, t in marks]
    if indices != expected:
        raise FormatError(
            f"marks must cover sentences {expected} in order, got {indices}"
        )
    if any(b <= a for a, b in zip(times, times[1:])):
        raise FormatError(f"mark times must be strictly increasing, got {times}")

    last_end = manifest.entries[-1].end_s
    if last_end <= times[-1]:
        raise FormatError(
            f"last mark at {times[-1]} s is not before the estimated end {last_end} s"
        )
    entries = []
    for i, entry in enumerate(manifest.entries):
        end = times[i + 1] if i + 1 < len(times) else last_end
        entries.append(TimingEntry(entry.sentence_index, times[i], end))
    return TimingManifest(entries=tuple(entries))
