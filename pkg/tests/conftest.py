import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from spingroup import FourMomentum, build_gamma_basis

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def gb():
    return build_gamma_basis()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def _unit_from(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


coords = st.floats(-1.0, 1.0, allow_nan=False)

unit_vectors = (
    st.tuples(coords, coords, coords)
    .filter(lambda v: np.linalg.norm(v) > 1e-3)
    .map(_unit_from)
)

angles = st.floats(0.0, 4 * math.pi, allow_nan=False)

momenta = st.builds(
    lambda mag, n: FourMomentum(mag * n, 1.0),
    st.floats(0.0, 5.0, allow_nan=False),
    unit_vectors,
)


# lines recorded by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
