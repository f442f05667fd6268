import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spdmeans.gen import GenSpec, random_spd

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.integers(min_value=2, max_value=6)
unit_t = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
interior_t = st.floats(min_value=0.05, max_value=0.95, allow_nan=False)


@st.composite
def spd(draw, kappa: float = 1e3, n=None):
    """Seeded random SPD matrix of dimension ``n`` (drawn if not given)."""
    n = draw(dims) if n is None else n
    return random_spd(GenSpec(n, kappa, draw(seeds)))


@st.composite
def spd_pair(draw, kappa: float = 1e3):
    n = draw(dims)
    return draw(spd(kappa, n)), draw(spd(kappa, n))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
