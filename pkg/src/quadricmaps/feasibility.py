"""Generator-degree bounds and per-degree verdicts for maps to the 3-quadric.

A degree d is excluded by the double-point argument when Miyaoka applies
(d >= -k, so that K_S is nef) and the deficit h3*d^3/2 - bound(d) is
strictly positive. Equality is not a contradiction, so ``Delta(d) <= 0``
counts as feasible throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

from .arith import max_integer_nonpositive, poly_eval
from .errors import InvalidDegree
from .invariants import ThreefoldInvariants, hypersurface_invariants, validate
from .miyaoka import bound_polynomial, deficit_polynomial, double_points

# Limit slope of d_m / m for hypersurfaces, and the derived intercept.
ASYMPTOTIC_SLOPE = 2 + 2 * math.sqrt(3)
ASYMPTOTIC_INTERCEPT = -10 - 5 * math.sqrt(3)

# Published value of the cubic bound d_3; exact evaluation gives 2.
PUBLISHED_D3 = 3


class Status(str, Enum):
    EXCLUDED_DEGREE_LOW = "EXCLUDED_DEGREE_LOW"
    EXCLUDED_LINEAR_REMAINDER = "EXCLUDED_LINEAR_REMAINDER"
    EXCLUDED_PARITY = "EXCLUDED_PARITY"
    EXCLUDED_MIYAOKA = "EXCLUDED_MIYAOKA"
    REALIZABLE_FERMAT = "REALIZABLE_FERMAT"
    UNDETERMINED = "UNDETERMINED"

    @property
    def excluded(self) -> bool:
        return self.value.startswith("EXCLUDED")


def _pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


@dataclass(frozen=True)
class FeasibilityVerdict:
    d: int
    status: Status
    detail: str
    double_points: Fraction
    bound: Fraction
    deficit: Fraction
    remainder: Optional[int] = None  # 2d - m, hypersurface mode only

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "status": self.status.value,
            "detail": self.detail,
            "double_points": _pair(self.double_points),
            "bound": _pair(self.bound),
            "deficit": _pair(self.deficit),
            "remainder_2d_minus_m": self.remainder,
        }

    def csv_row(self) -> list:
        return [
            self.d,
            self.status.value,
            self.double_points.numerator,
            self.double_points.denominator,
            self.bound.numerator,
            self.bound.denominator,
            "" if self.remainder is None else self.remainder,
        ]


CSV_COLUMNS = [
    "d",
    "status",
    "double_points_num",
    "double_points_den",
    "bound_num",
    "bound_den",
    "remainder_2d_minus_m",
]


@dataclass(frozen=True)
class BoundReport:
    invariants: ThreefoldInvariants
    d_floor: int
    d_max: Optional[int]
    inconclusive_range: tuple[int, ...]
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        bound = bound_polynomial(self.invariants)
        deficit = deficit_polynomial(self.invariants)
        out = {
            "invariants": self.invariants.to_json(),
            "bound_polynomial": [_pair(c) for c in bound.coeffs],
            "deficit_polynomial": [_pair(c) for c in deficit.coeffs],
            "d_floor": self.d_floor,
            "d_max": self.d_max,
            "inconclusive_range": list(self.inconclusive_range),
        }
        if self.d_max is not None:
            out["at_d_max"] = _degree_numbers(self.invariants, self.d_max)
        first = self.first_excluded()
        out["first_excluded"] = _degree_numbers(self.invariants, first)
        out["notes"] = list(self.notes)
        return out

    def first_excluded(self) -> int:
        """Smallest degree above which (inclusive) every d is Miyaoka-excluded."""
        return self.d_floor if self.d_max is None else self.d_max + 1


def _degree_numbers(inv: ThreefoldInvariants, d: int) -> dict:
    return {
        "d": d,
        "double_points": _pair(double_points(inv, d)),
        "bound": _pair(poly_eval(bound_polynomial(inv), d)),
        "deficit": _pair(poly_eval(deficit_polynomial(inv), d)),
    }


def miyaoka_floor(inv: ThreefoldInvariants) -> int:
    """Smallest d at which K_S = (k + d)H|_S is nef, i.e. max(1, -k)."""
    validate(inv)
    return max(1, -inv.index)


def bound_report(inv: ThreefoldInvariants, *, floor: Optional[int] = None) -> BoundReport:
    """Largest d >= floor not excluded by the double-point count.

    ``floor`` defaults to the Miyaoka applicability floor; pass 1 for the
    floor-free comparison used in hypersurface tables.
    """
    d_floor = miyaoka_floor(inv) if floor is None else floor
    d_max = max_integer_nonpositive(deficit_polynomial(inv), d_floor)
    notes = []
    if d_floor > 1:
        below = "d = 1" if d_floor == 2 else f"degrees 1..{d_floor - 1}"
        notes.append(
            f"{below} below the nef floor d >= -k: not decided by the double-point bound"
        )
    if inv == hypersurface_invariants(3) and d_floor <= PUBLISHED_D3:
        notes.append(_cubic_note(inv))
    return BoundReport(inv, d_floor, d_max, tuple(range(1, d_floor)), tuple(notes))


def _cubic_note(inv: ThreefoldInvariants) -> str:
    b = poly_eval(bound_polynomial(inv), 3)
    n = double_points(inv, 3)
    return (
        f"published value for the cubic is d_3 = {PUBLISHED_D3}; exact arithmetic gives "
        f"bound(3) = {b} < {n} = double points, so the largest non-excluded degree is 2. "
        "Either reading leaves only d = 2 for the linear-remainder rule."
    )


def hypersurface_dmax_closed_form(m: int) -> Optional[int]:
    """Largest positive d with d^2 - 4(m-5)d - 4(2m^2-5m+5) <= 0.

    Dividing the deficit of a degree-m hypersurface by m d / 18 leaves this
    quadric, whose larger root is 2(m-5) + 2 sqrt(3m^2 - 15m + 30).
    """
    if m < 2:
        raise InvalidDegree(f"hypersurface degree must be >= 2, got {m}")
    disc = 3 * m * m - 15 * m + 30
    d = 2 * (m - 5) + math.isqrt(4 * disc)

    def ok(x: int) -> bool:
        return x * x - 4 * (m - 5) * x - 4 * (2 * m * m - 5 * m + 5) <= 0

    while not ok(d):
        d -= 1
    while ok(d + 1):
        d += 1
    return d if d >= 1 else None


def _classify(
    inv: ThreefoldInvariants, d: int, d_floor: int, m: Optional[int]
) -> FeasibilityVerdict:
    nodes = double_points(inv, d)
    bound = poly_eval(bound_polynomial(inv), d)
    deficit = nodes - bound
    rem = None if m is None else 2 * d - m
    numbers = f"double points {nodes}, bound {bound}, deficit {deficit}"

    if m is not None and rem < 0:
        status, why = Status.EXCLUDED_DEGREE_LOW, f"2d - m = {rem} < 0: G would have negative degree"
    elif m is not None and rem == 1:
        status, why = (
            Status.EXCLUDED_LINEAR_REMAINDER,
            "2d - m = 1: the phi_i would map the hyperplane L onto Q (Lazarsfeld)",
        )
    elif (inv.h3 * d**3) % 2:
        status, why = Status.EXCLUDED_PARITY, f"h3*d^3 = {inv.h3 * d**3} is odd, map degree {nodes} not integral"
    elif d >= d_floor and deficit > 0:
        status, why = Status.EXCLUDED_MIYAOKA, f"d >= {d_floor} and deficit {deficit} > 0"
    elif m is not None and m % 2 == 0 and 2 * d == m:
        status, why = Status.REALIZABLE_FERMAT, "d = m/2: Fermat hypersurface sum x_i^m admits phi_i = x_i^(m/2)"
    else:
        status, why = Status.UNDETERMINED, (
            "below nef floor" if d < d_floor else "deficit <= 0, not excluded"
        )
    return FeasibilityVerdict(d, status, f"{why}; {numbers}", nodes, bound, deficit, rem)


@dataclass(frozen=True)
class VerdictList:
    invariants: ThreefoldInvariants
    m: Optional[int]
    report: BoundReport
    verdicts: tuple[FeasibilityVerdict, ...]

    @property
    def survivors(self) -> list[int]:
        return [v.d for v in self.verdicts if not v.status.excluded]

    def summary(self) -> str:
        if not self.survivors:
            return "no nonconstant morphisms to Q exist: every generator degree is excluded"
        return "generator degrees not excluded: " + ", ".join(map(str, self.survivors))

    def tail_note(self) -> str:
        last = self.verdicts[-1].d
        return f"every d > {last} is excluded: d >= d_floor and the deficit is positive above d_max"

    def to_json(self) -> dict:
        return {
            "invariants": self.invariants.to_json(),
            "hypersurface_degree": self.m,
            "d_floor": self.report.d_floor,
            "d_max": self.report.d_max,
            "verdicts": [v.to_json() for v in self.verdicts],
            "tail": self.tail_note(),
            "summary": self.summary(),
            "notes": list(self.report.notes),
        }


def verdicts_for(
    inv: ThreefoldInvariants, *, m: Optional[int] = None, d_limit: Optional[int] = None
) -> VerdictList:
    """Verdicts for every d up to the first degree past which all are excluded."""
    report = bound_report(inv)
    top = max(report.first_excluded(), report.d_floor, d_limit or 0)
    rows = tuple(_classify(inv, d, report.d_floor, m) for d in range(1, top + 1))
    return VerdictList(inv, m, report, rows)


def generator_degree_verdicts(m: int, d_limit: Optional[int] = None) -> VerdictList:
    return verdicts_for(hypersurface_invariants(m), m=m, d_limit=d_limit)


@dataclass(frozen=True)
class AsymptoticRow:
    m: int
    d_m: Optional[int]

    @property
    def ratio(self) -> float:
        # approximate; reporting only
        return (self.d_m or 0) / self.m


def hypersurface_dmax(m: int) -> Optional[int]:
    """Floor-free d_m from the cubic deficit polynomial (integer search)."""
    return bound_report(hypersurface_invariants(m), floor=1).d_max


def asymptotic_report(m_values: Iterable[int]) -> list[AsymptoticRow]:
    return [AsymptoticRow(m, hypersurface_dmax(m)) for m in m_values]
