"""Node-count numerology for complete-intersection targets other than Q.

For Y a complete intersection of degrees m_1..m_r in P^(3+r), a map of
generator degree d has degree h3 d^3 / prod(m_i). Pulling back a hyperplane
section with n nodes gives n h3 d^3 / prod(m_i) nodes, while the Miyaoka
bound grows like (4/9) h3 d^3. After dividing out h3 d^3 the strategy can
only force a contradiction when n >= (4/9) prod(m_i). These are strategy
thresholds, not existence or nonexistence statements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import ceil_fraction
from .errors import InvalidInput
from .invariants import check_generator_degree


@dataclass(frozen=True)
class TargetSpec:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise InvalidInput("target needs at least one hypersurface degree")
        if any(m < 2 for m in self.degrees):
            raise InvalidInput(f"all target degrees must be >= 2, got {list(self.degrees)}")

    @property
    def product(self) -> int:
        return math.prod(self.degrees)

    @property
    def ambient_dimension(self) -> int:
        return 3 + len(self.degrees)


def ci_map_degree(h3: int, d: int, t: TargetSpec) -> Fraction:
    if h3 < 1:
        raise InvalidInput(f"h3 must be >= 1, got {h3}")
    check_generator_degree(d)
    return Fraction(h3 * d**3, t.product)


def min_nodes_required(t: TargetSpec) -> tuple[Fraction, int]:
    exact = Fraction(4, 9) * t.product
    return exact, ceil_fraction(exact)


def target_report(t: TargetSpec) -> dict:
    exact, n = min_nodes_required(t)
    return {
        "product": t.product,
        "min_nodes_exact": [exact.numerator, exact.denominator],
        "min_nodes": n,
    }
