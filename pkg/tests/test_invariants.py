import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadricmaps.errors import InvalidDegree, InvalidInvariants, UnknownPreset
from quadricmaps.invariants import (
    ThreefoldInvariants,
    from_chern_numbers,
    hypersurface_invariants,
    preset,
    validate,
)


@pytest.mark.parametrize(
    "m, expected",
    [(3, (3, 12, -2)), (2, (2, 8, -3)), (10, (10, 600, 5))],
)
def test_hypersurface_invariants(m, expected):
    assert hypersurface_invariants(m) == ThreefoldInvariants(*expected)


def test_hypersurface_rejects_small_degree():
    with pytest.raises(InvalidDegree):
        hypersurface_invariants(1)


def test_presets():
    assert preset("Q") == ThreefoldInvariants(2, 8, -3) == hypersurface_invariants(2)
    assert preset("P3") == ThreefoldInvariants(1, 6, -4)
    with pytest.raises(UnknownPreset):
        preset("P2")


def test_p3_c2_from_chern_polynomial():
    # c(P^3) = (1+H)^4, so c2 = C(4,2) H^2 and H^3 = 1
    from math import comb

    assert preset("P3").c2h == comb(4, 2)


@pytest.mark.parametrize("inv", [(3, 12, -2), (1, -100, 7)])
def test_validate_accepts(inv):
    assert validate(ThreefoldInvariants(*inv))


def test_validate_rejects_h3():
    with pytest.raises(InvalidInvariants):
        validate(ThreefoldInvariants(0, 5, 1))


@given(st.integers(2, 5000))
def test_hypersurface_formula_property(m):
    inv = hypersurface_invariants(m)
    assert inv.index == m - 5
    assert inv.c2h - (m**3 - 5 * m**2 + 10 * m) == 0


def test_from_chern_numbers():
    # P^3: c1 = 4H, c1^3 = 64, c1 c2 = 24, k = -4
    assert from_chern_numbers(64, 24, -4) == preset("P3")
    # Q: c1 = 3H, c1^3 = 27*2 = 54, c1 c2 = 3*8 = 24
    assert from_chern_numbers(54, 24, -3) == preset("Q")
    with pytest.raises(InvalidInvariants):
        from_chern_numbers(0, 0, 0)
    with pytest.raises(InvalidInvariants):
        from_chern_numbers(65, 24, -4)


def test_json_roundtrip():
    inv = hypersurface_invariants(7)
    assert ThreefoldInvariants.from_json(inv.to_json()) == inv
    with pytest.raises(InvalidInvariants):
        ThreefoldInvariants.from_json({"h3": 1})
