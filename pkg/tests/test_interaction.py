from dataclasses import asdict

import numpy as np
import pytest

from conftest import normal_samples
from hedgecast.errors import OutOfDomainError, ParameterError
from hedgecast.interaction import (
    bin_cumulative,
    cumulative_payload,
    hedge_effect,
    occurrence_payload,
)
from hedgecast.vizspec import AxisDomain, axis_domain, highlight_region, quantile_dotplot


@pytest.fixture(scope="module")
def constant_spec():
    return quantile_dotplot([32.0] * 100, AxisDomain(31.0, 33.0))


@pytest.fixture(scope="module")
def uniform_spec():
    # linspace makes the type-7 quantiles exactly i - 0.5, five per bin.
    return quantile_dotplot([float(x) for x in np.linspace(0.0, 100.0, 100)], AxisDomain(0.0, 100.0))


def test_occurrence_full_bin(constant_spec):
    payload = occurrence_payload(constant_spec, 32.0)
    assert payload.filled == 100
    assert payload.total == 100
    assert (payload.rows, payload.cols) == (10, 10)
    assert "100" in payload.caption
    assert "32°F" in payload.caption


def test_occurrence_empty_bin(constant_spec):
    assert occurrence_payload(constant_spec, 31.05).filled == 0


def test_occurrence_stress_matches_binning_oracle(uniform_spec):
    # Exactly five quantiles per bin by construction.
    assert occurrence_payload(uniform_spec, 50.0).filled == 5


def test_occurrence_out_of_domain(constant_spec):
    with pytest.raises(OutOfDomainError):
        occurrence_payload(constant_spec, 30.0)


def test_occurrence_agrees_with_highlight_region():
    for seed in range(20):
        xs = normal_samples(seed)
        spec = quantile_dotplot(xs, axis_domain(xs))
        rng = np.random.Generator(np.random.PCG64(seed))
        for v in rng.uniform(spec.domain.lo, spec.domain.hi, 20):
            filled = occurrence_payload(spec, float(v)).filled
            assert filled == len(highlight_region(spec, float(v)).dot_indices)


def test_occurrence_counts_partition(uniform_spec):
    total = 0
    for interval in uniform_spec.bins:
        mid = (interval.lo + interval.hi) / 2.0
        total += occurrence_payload(uniform_spec, mid).filled
    assert total == 100


def test_cumulative_last_bin_is_one(constant_spec):
    assert cumulative_payload(constant_spec, 1).probability == 1.0
    assert cumulative_payload(constant_spec, 100).probability == 1.0


def test_cumulative_fourth_bin_stress(uniform_spec):
    # Dots 16..20 sit in bin 3; four bins of five dots are at or below it.
    payload = cumulative_payload(uniform_spec, 16)
    assert payload.probability == 0.20
    assert payload.threshold_f == uniform_spec.bins[3].hi
    assert "20%" in payload.caption
    assert "20°F or lower" in payload.caption


def test_cumulative_monotone_over_dots():
    xs = normal_samples(7)
    spec = quantile_dotplot(xs, axis_domain(xs))
    probs = [cumulative_payload(spec, i).probability for i in range(1, 101)]
    assert all(b >= a for a, b in zip(probs, probs[1:]))
    assert probs[-1] == 1.0


def test_cumulative_probability_is_integer_percent():
    xs = normal_samples(11)
    spec = quantile_dotplot(xs, axis_domain(xs))
    for i in (1, 25, 50, 99):
        p = cumulative_payload(spec, i).probability
        assert p == round(p * 100) / 100


def test_cumulative_invalid_index(constant_spec):
    with pytest.raises(ParameterError):
        cumulative_payload(constant_spec, 0)
    with pytest.raises(ParameterError):
        cumulative_payload(constant_spec, 101)


def test_bin_cumulative_invalid_bin(constant_spec):
    with pytest.raises(ParameterError):
        bin_cumulative(constant_spec, 20)


def test_hedge_effect_constants():
    effect = hedge_effect()
    assert effect.wobble_deg == 3.0
    assert effect.blur_px == 0.5


def test_hedge_effect_serializes():
    assert asdict(hedge_effect()) == {"wobble_deg": 3.0, "blur_px": 0.5}
