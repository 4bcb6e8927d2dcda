import time

import numpy as np
import pytest
from hypothesis import HealthCheck, settings


def pytest_configure(config):
    config._suite_start = time.monotonic()

settings.register_profile(
    "suite", max_examples=25,
    suppress_health_check=[HealthCheck.too_slow], deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(12345)
