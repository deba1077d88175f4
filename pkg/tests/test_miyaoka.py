from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadricmaps.arith import UniPoly, cauchy_root_bound, ceil_fraction, poly_eval
from quadricmaps.invariants import ThreefoldInvariants, hypersurface_invariants
from quadricmaps.miyaoka import (
    bound_polynomial,
    canonical_square,
    deficit_polynomial,
    double_points,
    miyaoka_rhs,
    second_chern_surface,
    surface_invariants,
)

F = Fraction
CUBIC = ThreefoldInvariants(3, 12, -2)
QUADRIC = ThreefoldInvariants(2, 8, -3)

invariants = st.builds(
    ThreefoldInvariants,
    st.integers(1, 50),
    st.integers(-500, 1000),
    st.integers(-6, 10),
)


@pytest.mark.parametrize("inv, d, ks2", [(CUBIC, 2, 0), (CUBIC, 3, 9), (QUADRIC, 3, 0)])
def test_canonical_square(inv, d, ks2):
    assert canonical_square(inv, d) == ks2


@pytest.mark.parametrize("inv, d, c2", [(CUBIC, 2, 24), (CUBIC, 1, 9), (QUADRIC, 3, 24)])
def test_second_chern_surface(inv, d, c2):
    assert second_chern_surface(inv, d) == c2


@pytest.mark.parametrize("inv, d, n", [(CUBIC, 2, 12), (CUBIC, 3, F(81, 2)), (QUADRIC, 1, 1)])
def test_double_points(inv, d, n):
    assert double_points(inv, d) == n


@pytest.mark.parametrize("inv, d, rhs", [(CUBIC, 2, 16), (CUBIC, 3, 40), (QUADRIC, 3, 16)])
def test_miyaoka_rhs(inv, d, rhs):
    assert miyaoka_rhs(inv, d) == rhs


def test_bound_polynomial_cubic_matches_hypersurface_form():
    # (4/9)m d^3 + ((2/9)m^2 - (10/9)m) d^2 + ((4/9)m^3 - (10/9)m^2 + (10/9)m) d at m = 3
    assert bound_polynomial(hypersurface_invariants(3)) == UniPoly([0, F(16, 3), F(-4, 3), F(4, 3)])


def test_bound_polynomial_quadric():
    assert bound_polynomial(QUADRIC) == UniPoly([0, F(4, 3), F(-4, 3), F(8, 9)])


@given(invariants)
def test_bound_vanishes_at_zero(inv):
    assert poly_eval(bound_polynomial(inv), 0) == 0


def test_deficit_examples():
    cubic = deficit_polynomial(CUBIC)
    assert cubic == UniPoly([0, F(-16, 3), F(4, 3), F(1, 6)])
    # 12 double points against bound 16 at d = 2
    assert cubic(2) == -4 and cubic(3) == F(1, 2)
    assert deficit_polynomial(QUADRIC) == UniPoly([0, F(-4, 3), F(4, 3), F(1, 9)])


@given(invariants)
def test_deficit_lead(inv):
    assert deficit_polynomial(inv).lead == F(inv.h3, 18)


@settings(max_examples=100, deadline=None)
@given(invariants, st.integers(1, 200))
def test_two_paths_agree(inv, d):
    assert poly_eval(bound_polynomial(inv), d) == miyaoka_rhs(inv, d)


@given(invariants)
def test_adjunction_vanishing(inv):
    d = -inv.index
    if d >= 1:
        assert canonical_square(inv, d) == 0


@given(invariants, st.integers(1, 100))
def test_double_points_integrality(inv, d):
    assert (double_points(inv, d).denominator == 1) == ((inv.h3 * d**3) % 2 == 0)


@settings(max_examples=50, deadline=None)
@given(invariants)
def test_deficit_positive_beyond_cauchy(inv):
    delta = deficit_polynomial(inv)
    top = ceil_fraction(cauchy_root_bound(delta))
    for d in range(top + 1, top + 20):
        assert delta(d) > 0


def test_surface_invariants_record():
    s = surface_invariants(CUBIC, 3)
    assert (s.k_s_squared, s.c2_surface, s.double_points) == (9, 63, F(81, 2))
    assert s.to_json()["double_points"] == [81, 2]
