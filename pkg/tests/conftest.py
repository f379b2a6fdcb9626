import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from walgebra.element import Element
from walgebra.scalars import QSqrt2

TOL = 1e-9


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def rationals():
    return st.builds(Fraction, st.integers(-20, 20), st.sampled_from([1, 2, 4]))


def exact_scalars():
    return st.builds(QSqrt2, rationals(), rationals())


def float_scalars():
    return st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def exact_elements():
    return st.builds(Element, *(exact_scalars() for _ in range(4)))


def float_elements():
    return st.builds(Element, *(float_scalars() for _ in range(4)))


def assert_close(x, y, tol=TOL):
    __tracebackhide__ = True
    diff = max(abs(float(a) - float(b)) for a, b in zip(x, y))
    assert diff <= tol, f"{x} != {y} (max diff {diff:.3e})"


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in module.RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
