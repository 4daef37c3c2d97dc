"""Command-line entry points wrapping the engine and HTTP service.

Commands: gen-trials, bundle, validate, serve, report. Flags mirror the
environment config (PORT, DATA_PATH, TEMPLATE_PATH, SEED); a flag always
wins over its environment fallback. Exit codes: 0 success, 1 diagnostic
failure (e.g. invariant violations), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bundle import build_bundle, bundle_to_json
from .errors import FormatError, ParameterError, TrialNotFoundError
from .telemetry import TelemetryLog, summarize_telemetry
from .textgen import load_templates
from .trials import (
    DEFAULT_MEAN_RANGE,
    DEFAULT_SD_RANGE,
    generate_trials,
    parse_csv,
    select_trial,
    write_csv,
)
from .validate import validate_bundle


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"range must be 'LO,HI', got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"range bounds must be numbers, got {text!r}") from None


def _env_seed() -> int | None:
    raw = os.environ.get("SEED")
    return int(raw) if raw else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hedgecast", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-trials", help="generate a seeded trial CSV")
    gen.add_argument("--n", type=int, default=20, help="number of trials")
    gen.add_argument("--seed", type=int, default=None, help="generator seed (env SEED)")
    gen.add_argument("--mean-range", type=_parse_range, default=DEFAULT_MEAN_RANGE)
    gen.add_argument("--sd-range", type=_parse_range, default=DEFAULT_SD_RANGE)
    gen.add_argument("--out", required=True, help="output CSV path")

    bun = sub.add_parser("bundle", help="build a forecast bundle JSON for one trial")
    bun.add_argument("--data", default=None, help="trials CSV path (env DATA_PATH)")
    bun.add_argument("--trial", type=int, default=None, help="trial id; omit for a seeded random pick")
    bun.add_argument("--seed", type=int, default=None, help="random-pick seed (env SEED)")
    bun.add_argument("--templates", default=None, help="template config path (env TEMPLATE_PATH)")
    bun.add_argument("--out", default=None, help="output path; stdout when omitted")

    val = sub.add_parser("validate", help="check a bundle JSON against all invariants")
    val.add_argument("path", help="bundle JSON path")

    srv = sub.add_parser("serve", help="start the HTTP service")
    srv.add_argument("--data", default=None, help="trials CSV path (env DATA_PATH)")
    srv.add_argument("--templates", default=None, help="template config path (env TEMPLATE_PATH)")
    srv.add_argument("--port", type=int, default=None, help="listen port (env PORT, default 8000)")
    srv.add_argument("--seed", type=int, default=None, help="seed for generated fallback data (env SEED)")
    srv.add_argument("--log", default="telemetry.ndjson", help="telemetry NDJSON path")
    srv.add_argument("--ui", default="frontend/dist", help="static UI asset directory")

    rep = sub.add_parser("report", help="print a telemetry summary from an NDJSON log")
    rep.add_argument("--log", required=True, help="telemetry NDJSON path")

    return parser


def _cmd_gen_trials(args) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    if seed is None:
        print("gen-trials requires --seed (or env SEED)", file=sys.stderr)
        return 2
    trial_set = generate_trials(args.n, seed, args.mean_range, args.sd_range)
    Path(args.out).write_bytes(write_csv(trial_set))
    print(f"wrote {len(trial_set)} trials to {args.out}")
    return 0


def _load_trials(data_path: str | None, seed: int | None):
    path = data_path or os.environ.get("DATA_PATH")
    if path:
        return parse_csv(Path(path).read_bytes())
    # No CSV configured: fall back to a seeded default set.
    return generate_trials(20, seed if seed is not None else 0)


def _cmd_bundle(args) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    trial_set = _load_trials(args.data, seed)
    if args.trial is not None:
        trial = select_trial(trial_set, by_id=args.trial)
    else:
        trial = select_trial(trial_set, random_with_seed=seed if seed is not None else 0)
    template_path = args.templates or os.environ.get("TEMPLATE_PATH")
    templates = load_templates(template_path) if template_path else None
    payload = bundle_to_json(build_bundle(trial, templates=templates))
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        print(f"wrote bundle for trial {trial.trial_id} to {args.out}")
    else:
        print(payload)
    return 0


def _cmd_validate(args) -> int:
    data = json.loads(Path(args.path).read_text(encoding="utf-8"))
    violations = validate_bundle(data)
    if violations:
        for violation in violations:
            print(violation)
        return 1
    print("valid")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    seed = args.seed if args.seed is not None else _env_seed()
    trial_set = _load_trials(args.data, seed)
    template_path = args.templates or os.environ.get("TEMPLATE_PATH")
    templates = load_templates(template_path) if template_path else None
    port = args.port if args.port is not None else int(os.environ.get("PORT", "8000"))
    app = create_app(
        trial_set,
        templates=templates,
        telemetry_path=args.log,
        ui_dir=args.ui if Path(args.ui).is_dir() else None,
        seed=seed,
    )
    uvicorn.run(app, host="0.0.0.0", port=port)
    return 0


def _cmd_report(args) -> int:
    log = TelemetryLog(args.log)
    summary = summarize_telemetry(log.events())
    print(json.dumps(summary, ensure_ascii=False, indent=2))
    return 0


_COMMANDS = {
    "gen-trials": _cmd_gen_trials,
    "bundle": _cmd_bundle,
    "validate": _cmd_validate,
    "serve": _cmd_serve,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParameterError, FormatError, TrialNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
