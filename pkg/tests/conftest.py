import numpy as np
import pytest

from hedgecast.trials import TrialDataset, generate_trials


@pytest.fixture(scope="session")
def trial_set():
    return generate_trials(10, seed=2024)


@pytest.fixture(scope="session")
def normal_trial():
    """100 samples from Normal(32, 2), seed pinned."""
    rng = np.random.Generator(np.random.PCG64(1))
    return TrialDataset(trial_id=0, samples=tuple(float(s) for s in rng.normal(32.0, 2.0, 100)))


@pytest.fixture(scope="session")
def constant_trial():
    return TrialDataset(trial_id=0, samples=(32.0,) * 100)


def normal_samples(seed, mean=32.0, sd=2.0, n=100):
    rng = np.random.Generator(np.random.PCG64(seed))
    return [float(s) for s in rng.normal(mean, sd, n)]
