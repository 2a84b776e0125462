import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# One deterministic profile for every run: the first call into a kernel
# may pay JIT compilation, so deadlines are off; derandomize keeps the
# generated examples byte-stable between runs.
settings.register_profile(
    "zetalab",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("zetalab")


@pytest.fixture
def rng():
    return np.random.default_rng(42)
