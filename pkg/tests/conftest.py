import os
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_sl2(rng: random.Random, steps: int = 6):
    """Random integer matrix of determinant 1, as a product of elementary matrices."""
    g = [[1, 0], [0, 1]]
    for _ in range(steps):
        t = rng.randint(-3, 3)
        e = [[1, t], [0, 1]] if rng.random() < 0.5 else [[1, 0], [t, 1]]
        g = [[sum(g[i][k] * e[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return g


@pytest.fixture
def sl2_points():
    rng = random.Random(int(os.environ.get("SL2COMOD_SEED", "7")))
    return [random_sl2(rng) for _ in range(12)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
