import math

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

P_EX = np.array([0.5, 0.5])
Q_EX = np.array([0.25, 0.75])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def example_pair():
    return P_EX.copy(), Q_EX.copy()


def _normalised(raw):
    arr = np.asarray(raw, dtype=float)
    return arr / math.fsum(arr)


@st.composite
def prob_pairs(draw, min_len=2, max_len=16):
    n = draw(st.integers(min_len, max_len))
    weights = st.floats(1e-3, 10.0, allow_nan=False, allow_infinity=False)
    p = draw(st.lists(weights, min_size=n, max_size=n))
    q = draw(st.lists(weights, min_size=n, max_size=n))
    return _normalised(p), _normalised(q)


positive = st.floats(1e-6, 1e6, allow_nan=False, allow_infinity=False)
unit = st.floats(0.0, 1.0)
finite_alpha = st.floats(-50.0, 50.0, allow_nan=False)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
