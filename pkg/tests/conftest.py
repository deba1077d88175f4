from fractions import Fraction

from hypothesis import strategies as st

from quadricmaps.arith import UniPoly

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def unipolys(draw, min_degree=0, max_degree=5, positive_lead=False):
    n = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(small_fractions, min_size=n, max_size=n))
    lead = draw(small_fractions.filter(lambda c: c > 0 if positive_lead else c != 0))
    return UniPoly(coeffs + [lead])


def brute_max_nonpositive(p, d_min, top):
    """Reference: plain descending scan."""
    for d in range(top, d_min - 1, -1):
        if p(d) <= 0:
            return d
    return None


def frac(n, d=1):
    return Fraction(n, d)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
