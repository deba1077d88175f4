"""Sparse homogeneous polynomials in x0..x4 and sum-of-five-squares witnesses.

A morphism X -> Q = {sum y_i^2 = 0} of generator degree d from a hypersurface
X = {F = 0} of degree m is given by five degree-d forms with
``sum(phi_i^2) = F * G`` for some form G of degree 2d - m.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import ContractViolation, InvalidInput, NotAWitness, ParityError

NVARS = 5
Exp = tuple[int, ...]
Number = Union[int, Fraction]

# Finite field for the randomized common-zero falsifier.
FALSIFIER_PRIME = 31


class HomogeneousPoly:
    """Immutable sparse form; ``terms`` maps exponent 5-tuples to nonzero rationals."""

    __slots__ = ("_terms", "degree")

    def __init__(self, terms: Mapping[Exp, Number], degree: Optional[int] = None):
        clean = {}
        for exp, c in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != NVARS or min(exp) < 0:
                raise InvalidInput(f"bad exponent vector {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        degs = {sum(e) for e in clean}
        if len(degs) > 1:
            raise InvalidInput(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        if degs:
            (actual,) = degs
            if degree is not None and degree != actual:
                raise InvalidInput(f"declared degree {degree} but terms have degree {actual}")
            degree = actual
        elif degree is None:
            raise InvalidInput("zero polynomial needs a declared degree")
        self._terms = clean
        self.degree = degree

    @classmethod
    def zero(cls, degree: int) -> "HomogeneousPoly":
        return cls({}, degree)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Number = 1) -> "HomogeneousPoly":
        return cls({tuple(exp): coeff}, sum(exp))

    @classmethod
    def var_power(cls, i: int, power: int, coeff: Number = 1) -> "HomogeneousPoly":
        exp = [0] * NVARS
        exp[i] = power
        return cls.monomial(exp, coeff)

    @property
    def terms(self) -> dict[Exp, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[Exp, Fraction]]:
        """Terms in decreasing graded-lex order (x0 > x1 > ... > x4)."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_term(self) -> tuple[Exp, Fraction]:
        return max(self._terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._terms.items())))

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return add(self, other)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return add(self, other.scale(-1))

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return mul(self, other)

    def scale(self, c: Number) -> "HomogeneousPoly":
        return HomogeneousPoly({e: v * c for e, v in self._terms.items()}, self.degree)

    def __call__(self, point: Sequence[Number]) -> Fraction:
        total = Fraction(0)
        for exp, c in self._terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def eval_mod(self, point: Sequence[int], p: int) -> int:
        total = 0
        for exp, c in self._terms.items():
            v = c.numerator * pow(c.denominator, -1, p)
            for x, e in zip(point, exp):
                if e:
                    v = v * pow(x, e, p)
            total += v
        return total % p

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    # serialization: list of {"exp", "num", "den"}, graded-lex descending
    def to_json(self) -> list[dict]:
        return [
            {"exp": list(exp), "num": c.numerator, "den": c.denominator}
            for exp, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], degree: Optional[int] = None) -> "HomogeneousPoly":
        terms: dict[Exp, Fraction] = {}
        for term in data:
            try:
                exp = tuple(term["exp"])
                num, den = term["num"], term["den"]
            except (KeyError, TypeError) as exc:
                raise InvalidInput(f"malformed term {term!r}") from exc
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (num, den, *exp)):
                raise InvalidInput(f"term fields must be integers, got {term!r}")
            if den == 0:
                raise InvalidInput(f"zero denominator in term {term!r}")
            if exp in terms:
                raise InvalidInput(f"duplicate exponent {list(exp)}")
            terms[exp] = Fraction(num, den)
        return cls(terms, degree)


def add(a: HomogeneousPoly, b: HomogeneousPoly) -> HomogeneousPoly:
    if a.degree != b.degree:
        raise ContractViolation(f"cannot add forms of degree {a.degree} and {b.degree}")
    out = a.terms
    for exp, c in b.terms.items():
        out[exp] = out.get(exp, 0) + c
    return HomogeneousPoly(out, a.degree)


def mul(a: HomogeneousPoly, b: HomogeneousPoly) -> HomogeneousPoly:
    out: dict[Exp, Fraction] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return HomogeneousPoly(out, a.degree + b.degree)


def exact_divide(a: HomogeneousPoly, b: HomogeneousPoly) -> Optional[HomogeneousPoly]:
    """Quotient q with a = b*q, or None. Division by the graded-lex leading term of b."""
    if b.is_zero():
        raise ContractViolation("division by the zero polynomial")
    qdeg = a.degree - b.degree
    if qdeg < 0:
        return None
    lead_exp, lead_c = b.leading_term()
    rem = a.terms
    quot: dict[Exp, Fraction] = {}
    while rem:
        exp, c = max(rem.items(), key=lambda t: t[0])
        shift = tuple(x - y for x, y in zip(exp, lead_exp))
        if min(shift) < 0:
            return None
        factor = c / lead_c
        quot[shift] = factor
        for eb, cb in b.terms.items():
            e = tuple(x + y for x, y in zip(eb, shift))
            v = rem.get(e, 0) - factor * cb
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return HomogeneousPoly(quot, qdeg)


def sum_of_squares(phi: Sequence[HomogeneousPoly]) -> HomogeneousPoly:
    total = HomogeneousPoly.zero(2 * phi[0].degree)
    for p in phi:
        total = add(total, mul(p, p))
    return total


@dataclass(frozen=True)
class SosWitness:
    F: HomogeneousPoly
    phi: tuple[HomogeneousPoly, ...]
    G: HomogeneousPoly

    @property
    def m(self) -> int:
        return self.F.degree

    @property
    def d(self) -> int:
        return self.phi[0].degree

    @property
    def remainder_degree(self) -> int:
        return 2 * self.d - self.m

    def map_degree(self) -> Fraction:
        """Degree of the morphism, m d^3 / 2."""
        return Fraction(self.m * self.d**3, 2)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "d": self.d,
            "F": self.F.to_json(),
            "phi": [p.to_json() for p in self.phi],
            "G": self.G.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def _check_phi(phi: Sequence[HomogeneousPoly]) -> None:
    if len(phi) != NVARS:
        raise InvalidInput(f"need exactly {NVARS} forms phi_i, got {len(phi)}")
    degs = {p.degree for p in phi}
    if len(degs) != 1:
        raise InvalidInput(f"phi_i must share one degree, got {sorted(degs)}")


def verify_witness(F: HomogeneousPoly, phi: Sequence[HomogeneousPoly]) -> tuple[HomogeneousPoly, int]:
    """Return (G, 2d - m) with sum(phi_i^2) = F*G, or raise NotAWitness."""
    _check_phi(phi)
    if F.is_zero():
        raise InvalidInput("F must be nonzero")
    d, m = phi[0].degree, F.degree
    if m > 2 * d:
        raise NotAWitness(f"m = {m} > 2d = {2 * d}: generator degree must be at least m/2")
    s = sum_of_squares(phi)
    G = exact_divide(s, F)
    if G is None:
        raise NotAWitness("sum of phi_i^2 is not divisible by F")
    return G, 2 * d - m


def make_witness(F: HomogeneousPoly, phi: Sequence[HomogeneousPoly]) -> SosWitness:
    G, _ = verify_witness(F, phi)
    return SosWitness(F, tuple(phi), G)


def witness_from_json(data: Mapping) -> SosWitness:
    """Parse and verify; a supplied G must match the recomputed quotient."""
    try:
        F = HomogeneousPoly.from_json(data["F"], data.get("m"))
        phi = [HomogeneousPoly.from_json(p, data.get("d")) for p in data["phi"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"witness JSON missing field: {exc}") from exc
    w = make_witness(F, phi)
    if "G" in data:
        given = HomogeneousPoly.from_json(data["G"], w.remainder_degree)
        if given != w.G:
            raise NotAWitness(f"supplied G = {given} but sum(phi^2)/F = {w.G}")
    return w


def fermat_witness(m: int) -> SosWitness:
    """F = sum x_i^m, phi_i = x_i^(m/2), G = 1."""
    if m < 2 or m % 2:
        raise ParityError(f"Fermat witness needs an even degree m >= 2, got {m}")
    F = HomogeneousPoly({tuple(m if j == i else 0 for j in range(NVARS)): 1 for i in range(NVARS)})
    phi = tuple(HomogeneousPoly.var_power(i, m // 2) for i in range(NVARS))
    w = make_witness(F, phi)
    if w.G != HomogeneousPoly.monomial((0,) * NVARS):
        raise ContractViolation(f"Fermat witness produced G = {w.G}")
    return w


class ZeroStatus(str, Enum):
    EMPTY = "EMPTY"
    NONTRIVIAL = "NONTRIVIAL"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class CommonZeroResult:
    status: ZeroStatus
    point: Optional[tuple[int, ...]] = None
    field: Optional[str] = None  # "Q" or "F_p"
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "point": None if self.point is None else list(self.point),
            "field": self.field,
            "reason": self.reason,
        }


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _pure_powers_in_span(phi: Sequence[HomogeneousPoly]) -> bool:
    d = phi[0].degree
    if d == 0:
        return any(not p.is_zero() for p in phi)
    pure = [tuple(d if j == i else 0 for j in range(NVARS)) for i in range(NVARS)]
    monos = sorted({e for p in phi for e in p.terms} | set(pure))
    base = [[p.terms.get(e, Fraction(0)) for e in monos] for p in phi]
    r = _rank(base)
    for e in pure:
        if _rank(base + [[Fraction(int(x == e)) for x in monos]]) != r:
            return False
    return True


def common_zero_check(
    phi: Sequence[HomogeneousPoly], *, seed: int = 0, samples: int = 20000
) -> CommonZeroResult:
    """Partial decision of whether the phi_i share a projective zero.

    EMPTY is certified when every x_j^d lies in the linear span of the phi_i
    (then the ideal contains all pure powers). NONTRIVIAL points come from an
    exact search over the coordinate points and then {-1, 0, 1}^5 (verified over Q) or, failing that, from
    seeded random sampling over F_31 (evidence in characteristic 31 only).
    """
    _check_phi(phi)
    if _pure_powers_in_span(phi):
        return CommonZeroResult(ZeroStatus.EMPTY, reason="every x_j^d lies in span(phi)")
    axes = [tuple(int(j == i) for j in range(NVARS)) for i in range(NVARS)]
    for point in itertools.chain(axes, itertools.product((0, 1, -1), repeat=NVARS)):
        if any(point) and all(p(point) == 0 for p in phi):
            return CommonZeroResult(ZeroStatus.NONTRIVIAL, point, "Q", "exact rational zero")
    p = FALSIFIER_PRIME
    if any(c.denominator % p == 0 for f in phi for c in f.terms.values()):
        return CommonZeroResult(ZeroStatus.UNDETERMINED, reason=f"coefficients not defined mod {p}")
    rng = random.Random(seed)
    for _ in range(samples):
        point = tuple(rng.randrange(p) for _ in range(NVARS))
        if any(point) and all(f.eval_mod(point, p) == 0 for f in phi):
            lifted = tuple(x - p if x > p // 2 else x for x in point)
            if all(f(lifted) == 0 for f in phi):
                return CommonZeroResult(ZeroStatus.NONTRIVIAL, lifted, "Q", "sampled zero lifts to Q")
            return CommonZeroResult(
                ZeroStatus.NONTRIVIAL, point, f"F_{p}", f"characteristic-{p} evidence only"
            )
    return CommonZeroResult(ZeroStatus.UNDETERMINED, reason=f"no zero found in {samples} samples")
