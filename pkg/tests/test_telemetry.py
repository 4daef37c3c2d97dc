import json

import pytest

from hedgecast.errors import FormatError
from hedgecast.telemetry import TelemetryLog, summarize_telemetry, validate_event


def event(session="s1", mode="active", kind="play", target="none", value="", at_ms=0):
    return {
        "session_id": session,
        "interface_mode": mode,
        "kind": kind,
        "target": target,
        "value": value,
        "at_ms": at_ms,
    }


def test_record_appends_one_line(tmp_path):
    log = TelemetryLog(tmp_path / "t.ndjson")
    ack = log.record(event(kind="decision", value="salt"))
    assert ack == {"accepted": True, "line": 1}
    lines = (tmp_path / "t.ndjson").read_text().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["value"] == "salt"


def test_decision_value_validated():
    with pytest.raises(FormatError, match="value"):
        validate_event(event(kind="decision", value="maybe"))


def test_confidence_value_validated():
    validate_event(event(kind="confidence", value="80"))
    with pytest.raises(FormatError, match="value"):
        validate_event(event(kind="confidence", value="150"))
    with pytest.raises(FormatError, match="value"):
        validate_event(event(kind="confidence", value="very sure"))


def test_missing_field_named():
    bad = event()
    del bad["target"]
    with pytest.raises(FormatError, match="target"):
        validate_event(bad)


def test_bad_mode_kind_target_at_ms():
    with pytest.raises(FormatError, match="interface_mode"):
        validate_event(event(mode="watching"))
    with pytest.raises(FormatError, match="kind"):
        validate_event(event(kind="scroll"))
    with pytest.raises(FormatError, match="target"):
        validate_event(event(target="legend"))
    with pytest.raises(FormatError, match="at_ms"):
        validate_event(event(at_ms=-5))


def test_log_order_matches_arrival(tmp_path):
    log = TelemetryLog(tmp_path / "t.ndjson")
    log.record(event(kind="play", at_ms=1))
    log.record(event(kind="replay", at_ms=2))
    kinds = [e.kind for e in log.events()]
    assert kinds == ["play", "replay"]


def test_toggle_mean_from_constructed_log():
    # 2 sessions, 23 toggles total: mean 11.5 per session with toggles.
    events = []
    for i in range(12):
        events.append(event(session="a", kind="vis_toggle", target="density", at_ms=i))
    for i in range(11):
        events.append(event(session="b", kind="vis_toggle", target="density", at_ms=i))
    summary = summarize_telemetry(events)
    assert summary["modes"]["active"]["vis_toggle_count_mean"] == 11.5


def test_count_mean_ignores_sessions_without_events():
    events = [
        event(session="a", kind="vis_toggle", target="density"),
        event(session="a", kind="vis_toggle", target="density"),
        event(session="b", kind="play"),  # no toggles; excluded from the mean
    ]
    summary = summarize_telemetry(events)
    assert summary["modes"]["active"]["vis_toggle_count_mean"] == 2.0
    assert summary["modes"]["active"]["sessions"] == 2


def test_hover_duration_single_pair():
    events = [
        event(kind="hover_start", target="density", at_ms=1000),
        event(kind="hover_end", target="density", at_ms=15500),
    ]
    summary = summarize_telemetry(events)
    assert summary["modes"]["active"]["hover_duration_mean_s"]["density"] == 14.5


def test_orphan_hover_end_skipped_with_count():
    events = [event(kind="hover_end", target="hedge", at_ms=10)]
    summary = summarize_telemetry(events)
    assert summary["orphan_hover_ends"] == 1
    assert summary["modes"]["active"]["hover_duration_mean_s"]["hedge"] == 0.0


def test_hover_pairs_match_by_target():
    events = [
        event(kind="hover_start", target="hedge", at_ms=0),
        event(kind="hover_start", target="number", at_ms=500),
        event(kind="hover_end", target="number", at_ms=1500),
        event(kind="hover_end", target="hedge", at_ms=4000),
    ]
    summary = summarize_telemetry(events)["modes"]["active"]["hover_duration_mean_s"]
    assert summary["number"] == 1.0
    assert summary["hedge"] == 4.0


def test_decision_counts_per_mode():
    events = [
        event(session="a", mode="passive", kind="decision", value="salt"),
        event(session="b", mode="passive", kind="decision", value="no_salt"),
        event(session="c", mode="active", kind="decision", value="salt"),
    ]
    summary = summarize_telemetry(events)
    assert summary["modes"]["passive"]["decision_counts"] == {"salt": 1, "no_salt": 1}
    assert summary["modes"]["active"]["decision_counts"] == {"salt": 1, "no_salt": 0}


def test_empty_log_summary_is_zeroes():
    summary = summarize_telemetry([])
    for mode in ("passive", "active"):
        bucket = summary["modes"][mode]
        assert bucket["sessions"] == 0
        assert bucket["replay_count_mean"] == 0.0
        assert bucket["vis_toggle_count_mean"] == 0.0
        assert set(bucket["hover_duration_mean_s"].values()) == {0.0}
        assert bucket["decision_counts"] == {"salt": 0, "no_salt": 0}
    assert summary["orphan_hover_ends"] == 0


def test_summarize_is_idempotent(tmp_path):
    log = TelemetryLog(tmp_path / "t.ndjson")
    log.record(event(kind="replay"))
    log.record(event(kind="replay", at_ms=5))
    first = summarize_telemetry(log.events())
    second = summarize_telemetry(log.events())
    assert first == second
    assert first["modes"]["active"]["replay_count_mean"] == 2.0
