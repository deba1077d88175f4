"""Invariants of pulled-back nodal hyperplane sections and the Miyaoka bound.

For a finite map f: X -> Q of generator degree d, the pull-back S_p of the
tangent hyperplane section at a general point p is a surface in |dH| with
h3*d^3/2 nodes. The smooth member S of the same system has the same c_2 and
K^2 as the minimal resolution of S_p, so one number is stored for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import UniPoly
from .invariants import ThreefoldInvariants, check_generator_degree, validate


@dataclass(frozen=True)
class SurfaceInvariants:
    k_s_squared: int
    c2_surface: int
    double_points: Fraction

    def to_json(self) -> dict:
        return {
            "k_s_squared": self.k_s_squared,
            "c2_surface": self.c2_surface,
            "double_points": [self.double_points.numerator, self.double_points.denominator],
        }


def canonical_square(inv: ThreefoldInvariants, d: int) -> int:
    """K_S^2 = (k + d)^2 d H^3 by adjunction."""
    return (inv.index + d) ** 2 * d * inv.h3


def second_chern_surface(inv: ThreefoldInvariants, d: int) -> int:
    """c_2(S) = d c_2(X).H + d^2 (d + k) H^3."""
    return d * inv.c2h + d * d * (d + inv.index) * inv.h3


def double_points(inv: ThreefoldInvariants, d: int) -> Fraction:
    """Node count h3*d^3/2; deliberately allowed to be non-integral."""
    return Fraction(inv.h3 * d**3, 2)


def miyaoka_rhs(inv: ThreefoldInvariants, d: int) -> Fraction:
    """(2/3)(c_2 - K^2/3), computed from the adjunction values."""
    return Fraction(2, 3) * (second_chern_surface(inv, d) - Fraction(canonical_square(inv, d), 3))


def surface_invariants(inv: ThreefoldInvariants, d: int) -> SurfaceInvariants:
    validate(inv)
    check_generator_degree(d)
    return SurfaceInvariants(
        canonical_square(inv, d), second_chern_surface(inv, d), double_points(inv, d)
    )


def bound_polynomial(inv: ThreefoldInvariants) -> UniPoly:
    """Miyaoka bound expanded as a cubic in d (no constant term)."""
    validate(inv)
    h3, k = inv.h3, inv.index
    return UniPoly(
        [
            0,
            Fraction(2, 3) * (inv.c2h - Fraction(k * k * h3, 3)),
            Fraction(2, 9) * k * h3,
            Fraction(4, 9) * h3,
        ]
    )


def deficit_polynomial(inv: ThreefoldInvariants) -> UniPoly:
    """Node count minus bound; its leading coefficient h3/18 is always positive."""
    return UniPoly.monomial(3, Fraction(inv.h3, 2)) - bound_polynomial(inv)
