"""Exact univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator), stored lowest power first. Nothing in here touches
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import ContractViolation, DegenerateInput

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "UniPoly",
    "poly_eval",
    "cauchy_root_bound",
    "sturm_sequence",
    "sign_change_count",
    "max_integer_nonpositive",
    "ceil_fraction",
]


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial in one variable; ``coeffs[i]`` multiplies ``d**i``."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, power: int, coeff: Number = 1) -> "UniPoly":
        return cls([0] * power + [coeff])

    def degree(self) -> int:
        """Index of the leading coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: Union["UniPoly", Number]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ContractViolation("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        while len(rem) - 1 >= dq and rem:
            shift = len(rem) - 1 - dq
            c = rem[-1] / other.lead
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "d" if i == 1 else f"d^{i}"
                body = var if mag == 1 else f"({mag})*{var}" if mag.denominator != 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_eval(p: UniPoly, x: Number) -> Fraction:
    """Horner evaluation, exact."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """``1 + max |c_i / c_lead|``; every real root lies in ``[-B, B]``."""
    if p.degree() < 1:
        raise DegenerateInput(f"root bound needs degree >= 1, got {p.degree()}")
    lead = p.lead
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _squarefree(p: UniPoly) -> UniPoly:
    g = _gcd(p, p.derivative())
    if g.degree() <= 0:
        return p
    return p.divmod(g)[0]


def _primitive(p: UniPoly) -> UniPoly:
    # positive rescaling to integer coefficients; signs are unchanged
    scale = math.lcm(*(c.denominator for c in p.coeffs))
    return UniPoly(c * scale for c in p.coeffs)


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Sturm chain of the square-free part of ``p``, each member with integer coefficients."""
    q = _squarefree(p)
    seq = [q, q.derivative()]
    while not seq[-1].is_zero():
        seq.append(-seq[-2].divmod(seq[-1])[1])
    seq.pop()
    return [_primitive(s) for s in seq]


def _eval_int(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _variations(seq: Sequence[UniPoly], x: Fraction) -> int:
    if x.denominator == 1:
        n = x.numerator
        values = [_eval_int([c.numerator for c in s.coeffs], n) for s in seq]
    else:
        values = [poly_eval(s, x) for s in seq]
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def sign_change_count(p: UniPoly, a: Number, b: Number) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]`` (Sturm)."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ContractViolation(f"need a < b, got a={a}, b={b}")
    if p.is_zero():
        raise ContractViolation("sign_change_count of the zero polynomial")
    if p.degree() == 0:
        return 0
    seq = sturm_sequence(p)
    return _variations(seq, a) - _variations(seq, b)


def _root_floor_candidates(seq: list[UniPoly], lo: int, hi: int, count: int) -> set[int]:
    # roots in (lo, hi]; bisect on integers until unit intervals
    if count == 0:
        return set()
    if hi - lo == 1:
        return {lo, hi}
    mid = (lo + hi) // 2
    left = _variations(seq, Fraction(lo)) - _variations(seq, Fraction(mid))
    return _root_floor_candidates(seq, lo, mid, left) | _root_floor_candidates(
        seq, mid, hi, count - left
    )


def max_integer_nonpositive(p: UniPoly, d_min: int) -> Optional[int]:
    """Largest integer ``d >= d_min`` with ``p(d) <= 0``, or ``None``.

    Requires a positive leading coefficient so that ``p`` is eventually
    positive. Any such ``d`` lies in a closed interval between consecutive
    real roots where ``p <= 0``, so the answer is the floor of some real
    root; those floors are isolated exactly by Sturm bisection on integer
    endpoints up to the Cauchy bound and then checked by direct evaluation.
    """
    if p.is_zero() or p.lead <= 0:
        raise ContractViolation("max_integer_nonpositive needs a positive leading coefficient")
    if p.degree() == 0:
        return None
    hi = ceil_fraction(cauchy_root_bound(p))
    lo = d_min - 1
    if hi <= lo:
        return None
    seq = sturm_sequence(p)
    count = _variations(seq, Fraction(lo)) - _variations(seq, Fraction(hi))
    candidates = _root_floor_candidates(seq, lo, hi, count)
    good = [c for c in candidates if c >= d_min and poly_eval(p, c) <= 0]
    return max(good, default=None)
