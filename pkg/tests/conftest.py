import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hullcheck.dataset import Dataset

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def random_dataset(rng, n, d, p=0.5, integer=False):
    """Random mixed-response data; responses are redrawn until both appear."""
    while True:
        y = (rng.random(n) < p).astype(int)
        if 0 < y.sum() < n:
            break
    x = rng.integers(-3, 4, size=(n, d)) if integer else rng.normal(size=(n, d))
    return Dataset(np.asarray(x, dtype=float), y)


def random_affine_map(rng, d):
    while True:
        A = rng.normal(size=(d, d))
        if np.linalg.cond(A) < 30:
            return A, rng.normal(size=d)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
