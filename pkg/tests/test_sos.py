from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadricmaps.errors import ContractViolation, InvalidInput, NotAWitness, ParityError
from quadricmaps.sos import (
    HomogeneousPoly,
    ZeroStatus,
    add,
    common_zero_check,
    exact_divide,
    fermat_witness,
    mul,
    verify_witness,
    witness_from_json,
)

HP = HomogeneousPoly
ONE = HP.monomial((0, 0, 0, 0, 0))


def x(i, e=1, c=1):
    return HP.var_power(i, e, c)


def total(polys):
    out = polys[0]
    for p in polys[1:]:
        out = out + p
    return out


@st.composite
def forms(draw, degree=None, max_terms=4):
    deg = draw(st.integers(0, 3)) if degree is None else degree
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        cuts = sorted(draw(st.lists(st.integers(0, deg), min_size=4, max_size=4)))
        exp = tuple(b - a for a, b in zip([0] + cuts, cuts + [deg]))
        terms[exp] = draw(st.fractions(min_value=-5, max_value=5, max_denominator=4))
    return HP(terms, deg)


def test_mul_examples():
    assert x(0, 2) * x(0, 2) == x(0, 4)
    s = x(0) + x(1)
    assert s * s == total([x(0, 2), HP.monomial((1, 1, 0, 0, 0), 2), x(1, 2)])
    assert total([x(i, 2) * x(i, 2) for i in range(5)]) == total([x(i, 4) for i in range(5)])


def test_add_degree_mismatch():
    with pytest.raises(ContractViolation):
        add(x(0), x(0, 2))


def test_non_homogeneous_rejected():
    with pytest.raises(InvalidInput):
        HP({(1, 0, 0, 0, 0): 1, (2, 0, 0, 0, 0): 1})


def test_zero_polynomial_keeps_degree():
    z = x(0, 3) - x(0, 3)
    assert z.is_zero() and z.degree == 3


def test_exact_divide_examples():
    fermat4 = total([x(i, 4) for i in range(5)])
    assert exact_divide(fermat4, fermat4) == ONE
    a = x(0, 4) - x(1, 4)
    b = x(0, 2) - x(1, 2)
    assert exact_divide(a, b) == x(0, 2) + x(1, 2)
    assert exact_divide(x(0, 3), x(1)) is None
    with pytest.raises(ContractViolation):
        exact_divide(x(0), HP.zero(1))


@settings(max_examples=80, deadline=None)
@given(forms(), forms(), forms())
def test_ring_axioms(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    if b.degree == c.degree:
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert add(b, c) == add(c, b)


@settings(max_examples=80, deadline=None)
@given(forms(), forms())
def test_divide_round_trip(b, q):
    if b.is_zero():
        return
    assert exact_divide(mul(b, q), b) == q


@pytest.mark.parametrize("m", range(2, 51, 2))
def test_fermat_witness_verifies(m):
    w = fermat_witness(m)
    G, r = verify_witness(w.F, w.phi)
    assert G == ONE and r == 0
    assert mul(w.F, G) == total([p * p for p in w.phi])
    assert common_zero_check(w.phi).status is ZeroStatus.EMPTY


def test_fermat_examples():
    w = fermat_witness(4)
    assert w.phi == tuple(x(i, 2) for i in range(5))
    assert w.map_degree() == 16
    assert fermat_witness(6).map_degree() == 81
    assert fermat_witness(2).phi == tuple(x(i) for i in range(5))
    with pytest.raises(ParityError):
        fermat_witness(5)


def test_verify_witness_examples():
    F2 = total([x(i, 2) for i in range(5)])
    phi = [x(i) * x(0) for i in range(5)]
    G, r = verify_witness(F2, phi)
    assert G == x(0, 2) and r == 2
    with pytest.raises(NotAWitness):
        verify_witness(x(0, 3), [x(i, 2) for i in range(5)])
    with pytest.raises(NotAWitness):
        verify_witness(total([x(i, 6) for i in range(5)]), [x(i, 2) for i in range(5)])
    with pytest.raises(InvalidInput):
        verify_witness(F2, [x(i) for i in range(4)])


def test_linear_remainder_witness_shape():
    # sum phi_i^2 = F * L with F a cubic: phi_0 = x0^2, others zero, F = x0^3, L = x0
    phi = [x(0, 2)] + [HP.zero(2)] * 4
    G, r = verify_witness(x(0, 3), phi)
    assert G == x(0) and r == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(forms(degree=2), min_size=5, max_size=5), forms(degree=1))
def test_accepted_witnesses_reexpand(phi, f):
    if f.is_zero():
        return
    try:
        G, _ = verify_witness(f, phi)
    except NotAWitness:
        return
    assert mul(f, G) == total([p * p for p in phi])


def test_common_zero_examples():
    assert common_zero_check([x(i, 2) for i in range(5)]).status is ZeroStatus.EMPTY
    res = common_zero_check([x(0, 2)] * 5)
    assert res.status is ZeroStatus.NONTRIVIAL
    assert res.point == (0, 1, 0, 0, 0) and res.field == "Q"


def test_common_zero_span_criterion():
    # a triangular change of basis still spans all pure squares
    phi = [x(0, 2) + x(1, 2), x(1, 2), x(2, 2) - x(3, 2), x(3, 2), x(4, 2, 3)]
    assert common_zero_check(phi).status is ZeroStatus.EMPTY


def test_common_zero_dense_is_partial():
    # dense quadrics: any answer but a wrong EMPTY is acceptable
    import random

    rng = random.Random(3)
    monos = [tuple(int(j == a) + int(j == b) for j in range(5)) for a in range(5) for b in range(a, 5)]
    phi = [HP({e: rng.randint(-3, 3) for e in monos}, 2) for _ in range(5)]
    res = common_zero_check(phi, seed=1, samples=2000)
    assert res.status in set(ZeroStatus)
    if res.status is ZeroStatus.NONTRIVIAL and res.field == "Q":
        assert all(p(res.point) == 0 for p in phi)


def test_finite_field_evidence_is_labeled():
    # sum x_i^2 has no nonzero real zero but many over F_31
    q = total([x(i, 2) for i in range(5)])
    res = common_zero_check([q] * 5, seed=0, samples=5000)
    assert res.status is ZeroStatus.NONTRIVIAL
    assert res.field == "F_31"
    assert q.eval_mod(res.point, 31) == 0
    assert common_zero_check([q] * 5, seed=0, samples=5000) == res


def test_json_round_trip():
    w = fermat_witness(6)
    again = witness_from_json(w.to_json())
    assert again == w and again.dumps() == w.dumps()


def test_json_rejects_decimals_and_bad_G():
    data = fermat_witness(2).to_json()
    data["F"][0]["num"] = 1.0
    with pytest.raises(InvalidInput):
        witness_from_json(data)
    data = fermat_witness(2).to_json()
    data["G"] = [{"exp": [0, 0, 0, 0, 0], "num": 2, "den": 1}]
    with pytest.raises(NotAWitness):
        witness_from_json(data)


def test_fraction_coefficients_survive_json():
    phi = [x(i, 1, Fraction(1, 3)) for i in range(5)]
    F = total([x(i, 2) for i in range(5)])
    from quadricmaps.sos import make_witness

    w = make_witness(F, phi)
    assert w.G == ONE.scale(Fraction(1, 9))
    assert witness_from_json(w.to_json()).G == w.G
