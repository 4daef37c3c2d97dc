"""Telemetry event schema, append-only NDJSON log, and aggregation.

Events are one JSON object per line. Appends are serialized through a
single lock so log order matches arrival order. Aggregation groups by
interface mode; count means are taken only over sessions that produced at
least one relevant event, and hover durations are averaged per matched
start/end pair for each target.
"""
from __future__ import annotations

import json
import threading
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import FormatError

MODES = ("passive", "active")
KINDS = ("play", "replay", "vis_toggle", "hover_start", "hover_end", "decision", "confidence")
TARGETS = ("hedge", "number", "density", "dotplot", "none")
DECISION_VALUES = ("salt", "no_salt")


@dataclass(frozen=True)
class TelemetryEvent:
    session_id: str
    interface_mode: str
    kind: str
    target: str
    value: str
    at_ms: int


def validate_event(data: dict) -> TelemetryEvent:
    """Check one raw event dict; FormatError messages name the bad field."""
    if not isinstance(data, dict):
        raise FormatError("event must be a JSON object")
    required = ("session_id", "interface_mode", "kind", "target", "value", "at_ms")
    for field in required:
        if field not in data:
            raise FormatError(f"event missing field {field!r}")
    session_id = data["session_id"]
    if not isinstance(session_id, str) or not session_id:
        raise FormatError("field 'session_id' must be a non-empty string")
    if data["interface_mode"] not in MODES:
        raise FormatError(f"field 'interface_mode' must be one of {MODES}")
    if data["kind"] not in KINDS:
        raise FormatError(f"field 'kind' must be one of {KINDS}")
    if data["target"] not in TARGETS:
        raise FormatError(f"field 'target' must be one of {TARGETS}")
    value = data["value"]
    if not isinstance(value, str):
        raise FormatError("field 'value' must be a string")
    at_ms = data["at_ms"]
    if isinstance(at_ms, bool) or not isinstance(at_ms, int) or at_ms < 0:
        raise FormatError("field 'at_ms' must be a non-negative integer")
    if data["kind"] == "decision" and value not in DECISION_VALUES:
        raise FormatError(f"field 'value' must be one of {DECISION_VALUES} for decision events")
    if data["kind"] == "confidence":
        try:
            confidence = int(value)
        except ValueError:
            confidence = -1
        if not 0 <= confidence <= 100:
            raise FormatError("field 'value' must be an integer 0..100 for confidence events")
    return TelemetryEvent(
        session_id=session_id,
        interface_mode=data["interface_mode"],
        kind=data["kind"],
        target=data["target"],
        value=value,
        at_ms=at_ms,
    )


class TelemetryLog:
    """Append-only NDJSON event log with a single serialized writer."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._count: int | None = None  # lazily counted from any existing file

    def record(self, data: dict) -> dict:
        """Validate and append one event; returns an acknowledgment."""
        event = validate_event(data)
        line = json.dumps(asdict(event), ensure_ascii=False, separators=(",", ":"))
        with self._lock:
            if self._count is None:
                self._count = (
                    sum(1 for _ in open(self.path, encoding="utf-8"))
                    if self.path.exists()
                    else 0
                )
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
            self._count += 1
            count = self._count
        return {"accepted": True, "line": count}

    def events(self) -> Iterator[TelemetryEvent]:
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield validate_event(json.loads(line))


def _mean(values: list[float]) -> float:
    return sum(values) / len(values) if values else 0.0


def summarize_telemetry(events: Iterable[TelemetryEvent | dict]) -> dict:
    """Aggregate an event stream into the per-mode summary.

    Orphan hover_end events (no open hover_start for the same session and
    target) are skipped and counted in ``orphan_hover_ends``. Unclosed
    hover_start events contribute no duration.
    """
    normalized: list[TelemetryEvent] = []
    for e in events:
        normalized.append(e if isinstance(e, TelemetryEvent) else validate_event(e))

    per_mode: dict[str, dict] = {}
    for mode in MODES:
        per_mode[mode] = {
            "sessions": set(),
            "replays": {},       # session -> count
            "toggles": {},       # session -> count
            "hover_pairs": {t: [] for t in TARGETS},  # target -> durations s
            "decisions": {v: 0 for v in DECISION_VALUES},
        }
    open_hovers: dict[tuple[str, str, str], list[int]] = {}
    orphans = 0

    for e in normalized:
        bucket = per_mode[e.interface_mode]
        bucket["sessions"].add(e.session_id)
        if e.kind == "replay":
            bucket["replays"][e.session_id] = bucket["replays"].get(e.session_id, 0) + 1
        elif e.kind == "vis_toggle":
            bucket["toggles"][e.session_id] = bucket["toggles"].get(e.session_id, 0) + 1
        elif e.kind == "decision":
            bucket["decisions"][e.value] += 1
        elif e.kind == "hover_start":
            open_hovers.setdefault((e.session_id, e.interface_mode, e.target), []).append(e.at_ms)
        elif e.kind == "hover_end":
            stack = open_hovers.get((e.session_id, e.interface_mode, e.target))
            if not stack:
                orphans += 1
            else:
                start_ms = stack.pop()
                bucket["hover_pairs"][e.target].append((e.at_ms - start_ms) / 1000.0)

    summary: dict = {"modes": {}, "orphan_hover_ends": orphans}
    for mode in MODES:
        bucket = per_mode[mode]
        summary["modes"][mode] = {
            "sessions": len(bucket["sessions"]),
            "replay_count_mean": _mean(list(bucket["replays"].values())),
            "vis_toggle_count_mean": _mean(list(bucket["toggles"].values())),
            "hover_duration_mean_s": {
                target: _mean(durations)
                for target, durations in bucket["hover_pairs"].items()
            },
            "decision_counts": dict(bucket["decisions"]),
        }
    return summary
