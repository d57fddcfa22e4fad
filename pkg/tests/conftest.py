from fractions import Fraction

import pytest
from hypothesis import strategies as st

from chebyplanes import Plane, Point

SWEEP = [
    (a, b, c)
    for c in range(11)
    for b in range(c + 1)
    for a in range(b + 1)
    if (a, b, c) != (0, 0, 0)
]


def rationals(bound=20, max_den=8):
    return st.builds(
        Fraction,
        st.integers(-bound * max_den, bound * max_den),
        st.integers(1, max_den),
    )


def points(n):
    return st.lists(rationals(), min_size=n, max_size=n).map(Point)


@st.composite
def planes_through_origin(draw, bound=9):
    coeffs = draw(
        st.tuples(*[st.integers(-bound, bound)] * 3).filter(lambda t: any(t))
    )
    return Plane(*coeffs, 0)


@pytest.fixture(scope="session")
def sweep_planes():
    return [Plane(a, b, c, 0) for a, b, c in SWEEP]


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items()):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
