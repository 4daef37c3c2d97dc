"""Generation, CSV persistence, and selection of forecast trials.

A trial is 100 temperature samples (degrees F) drawn from a normal
distribution whose mean and standard deviation are themselves drawn
uniformly from configured ranges, so individual trials need not look
normal. All randomness flows through numpy's PCG64 generator keyed by an
explicit seed: the same seed yields byte-identical CSV output on every
platform.

The CSV layout is wide: one column per trial, header cells ``trial_<id>``,
followed by exactly 100 data rows. Cells carry 6 significant digits, which
round-trips samples within 1e-4 degrees for the temperature ranges used
here. Files are UTF-8 with LF line endings and no BOM.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FormatError, ParameterError, TrialNotFoundError

SAMPLES_PER_TRIAL = 100
# Defaults straddle the 32 F salting threshold so the decision is non-degenerate.
DEFAULT_MEAN_RANGE = (26.0, 38.0)
DEFAULT_SD_RANGE = (1.0, 4.0)

_CELL_DIGITS = 6


@dataclass(frozen=True)
class TrialDataset:
    """One forecast trial: samples plus the parameters that generated them.

    ``gen_mean``/``gen_sd`` are None for trials parsed from CSV, where the
    generating parameters are unknown.
    """

    trial_id: int
    samples: tuple[float, ...]
    gen_mean: float | None = None
    gen_sd: float | None = None

    def __post_init__(self):
        if self.trial_id < 0:
            raise ParameterError(f"trial_id must be non-negative, got {self.trial_id}")
        if len(self.samples) != SAMPLES_PER_TRIAL:
            raise ParameterError(
                f"trial {self.trial_id} has {len(self.samples)} samples, "
                f"expected exactly {SAMPLES_PER_TRIAL}"
            )
        if not all(math.isfinite(s) for s in self.samples):
            raise ParameterError(f"trial {self.trial_id} contains non-finite samples")


@dataclass(frozen=True)
class TrialSet:
    """Ordered collection of trials with distinct ids."""

    trials: tuple[TrialDataset, ...]
    source_seed: int | None = None

    def __post_init__(self):
        ids = [t.trial_id for t in self.trials]
        if len(set(ids)) != len(ids):
            raise ParameterError("trial ids must be distinct within a set")

    def __len__(self) -> int:
        return len(self.trials)

    def trial_ids(self) -> list[int]:
        return [t.trial_id for t in self.trials]


def generate_trials(
    n_trials: int,
    seed: int,
    mean_range: tuple[float, float] = DEFAULT_MEAN_RANGE,
    sd_range: tuple[float, float] = DEFAULT_SD_RANGE,
) -> TrialSet:
    """Draw ``n_trials`` seeded trials; ids are dense 0..n-1.

    Each trial draws gen_mean ~ Uniform(mean_range) and
    gen_sd ~ Uniform(sd_range), then 100 iid Normal(gen_mean, gen_sd)
    samples. Fully determined by ``seed`` (PCG64).
    """
    if n_trials < 1:
        raise ParameterError(f"n_trials must be >= 1, got {n_trials}")
    m_lo, m_hi = mean_range
    s_lo, s_hi = sd_range
    if m_lo > m_hi:
        raise ParameterError(f"mean_range is empty: [{m_lo}, {m_hi}]")
    if s_lo > s_hi:
        raise ParameterError(f"sd_range is empty: [{s_lo}, {s_hi}]")
    if s_lo <= 0:
        raise ParameterError(f"sd_range lower bound must be positive, got {s_lo}")

    rng = np.random.Generator(np.random.PCG64(seed))
    trials = []
    for trial_id in range(n_trials):
        gen_mean = float(rng.uniform(m_lo, m_hi))
        gen_sd = float(rng.uniform(s_lo, s_hi))
        samples = rng.normal(gen_mean, gen_sd, SAMPLES_PER_TRIAL)
        trials.append(
            TrialDataset(
                trial_id=trial_id,
                samples=tuple(float(s) for s in samples),
                gen_mean=gen_mean,
                gen_sd=gen_sd,
            )
        )
    return TrialSet(trials=tuple(trials), source_seed=seed)


def _format_cell(value: float) -> str:
    return np.format_float_positional(
        value, precision=_CELL_DIGITS, unique=False, fractional=False
    )


def write_csv(trial_set: TrialSet) -> bytes:
    """Serialize a trial set to wide CSV bytes (one column per trial)."""
    if len(trial_set) == 0:
        raise ParameterError("cannot write an empty trial set")
    header = ",".join(f"trial_{t.trial_id}" for t in trial_set.trials)
    lines = [header]
    for row in range(SAMPLES_PER_TRIAL):
        lines.append(",".join(_format_cell(t.samples[row]) for t in trial_set.trials))
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_csv(data: bytes) -> TrialSet:
    """Parse wide CSV bytes back into a TrialSet.

    Trial ids come from the ``trial_<id>`` header suffix. Every column must
    hold exactly 100 numeric rows; violations raise FormatError naming the
    offending column (and row, for bad cells).
    """
    text = data.decode("utf-8")
    lines = [line for line in text.split("\n") if line.strip() != ""]
    if not lines:
        raise FormatError("CSV is empty")

    headers = lines[0].split(",")
    trial_ids = []
    for header in headers:
        name = header.strip()
        if not name.startswith("trial_"):
            raise FormatError(f"header {name!r} does not match 'trial_<id>'")
        try:
            trial_ids.append(int(name[len("trial_"):]))
        except ValueError:
            raise FormatError(f"header {name!r} has a non-integer trial id") from None

    rows = lines[1:]
    if len(rows) != SAMPLES_PER_TRIAL:
        raise FormatError(
            f"column {headers[0].strip()!r} has {len(rows)} numeric rows, "
            f"expected {SAMPLES_PER_TRIAL}"
        )

    columns: list[list[float]] = [[] for _ in headers]
    for row_idx, line in enumerate(rows, start=1):
        cells = line.split(",")
        if len(cells) != len(headers):
            raise FormatError(
                f"row {row_idx} has {len(cells)} cells, expected {len(headers)}"
            )
        for col_idx, cell in enumerate(cells):
            try:
                value = float(cell)
            except ValueError:
                raise FormatError(
                    f"non-numeric cell {cell.strip()!r} at row {row_idx}, "
                    f"column {headers[col_idx].strip()!r}"
                ) from None
            if not math.isfinite(value):
                raise FormatError(
                    f"non-finite cell at row {row_idx}, column {headers[col_idx].strip()!r}"
                )
            columns[col_idx].append(value)

    trials = tuple(
        TrialDataset(trial_id=tid, samples=tuple(col))
        for tid, col in zip(trial_ids, columns)
    )
    return TrialSet(trials=trials)


def select_trial(
    trial_set: TrialSet,
    by_id: int | None = None,
    random_with_seed: int | None = None,
) -> TrialDataset:
    """Pick a trial either by id or uniformly at random under a seed."""
    if len(trial_set) == 0:
        raise ParameterError("cannot select from an empty trial set")
    if (by_id is None) == (random_with_seed is None):
        raise ParameterError("provide exactly one of by_id or random_with_seed")
    if by_id is not None:
        for trial in trial_set.trials:
            if trial.trial_id == by_id:
                return trial
        raise TrialNotFoundError(f"no trial with id {by_id}")
    rng = np.random.Generator(np.random.PCG64(random_with_seed))
    return trial_set.trials[int(rng.integers(0, len(trial_set)))]
