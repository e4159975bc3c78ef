from fractions import Fraction

import pytest
from hypothesis import strategies as st

from selfinterlacing.poly import Polynomial

F1 = Polynomial([1, -1])
F2 = Polynomial([1, -1, -2])
F3 = Polynomial([1, -2, -5, 6])
F4 = Polynomial([1, 2, 1])
F5 = Polynomial([1, 0, 1])


@pytest.fixture
def fixtures():
    return {"F1": F1, "F2": F2, "F3": F3, "F4": F4, "F5": F5}


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def polynomials(draw, min_degree=1, max_degree=7):
    n = draw(st.integers(min_degree, max_degree))
    lead = draw(nonzero_rationals)
    rest = draw(st.lists(rationals, min_size=n, max_size=n))
    return Polynomial([lead] + rest)


@st.composite
def si_root_patterns(draw, min_degree=1, max_degree=6, first=1):
    """Distinct magnitudes, largest first, signs alternating from ``first``."""
    n = draw(st.integers(min_degree, max_degree))
    mags = draw(
        st.lists(st.fractions(min_value=Fraction(1, 5), max_value=30, max_denominator=5), min_size=n, max_size=n, unique=True)
    )
    mags.sort(reverse=True)
    return [first * (-1) ** i * m for i, m in enumerate(mags)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
