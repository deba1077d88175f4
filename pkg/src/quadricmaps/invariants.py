"""Numerical data of a smooth projective threefold with Picard number one.

A threefold X enters every computation only through three integers:

* ``h3``    -- the self-intersection H^3 of the ample generator H,
* ``c2h``   -- the intersection number c_2(X).H,
* ``index`` -- the integer k with K_X numerically equal to kH.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import InvalidDegree, InvalidInvariants, UnknownPreset


@dataclass(frozen=True)
class ThreefoldInvariants:
    h3: int
    c2h: int
    index: int

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "ThreefoldInvariants":
        try:
            inv = cls(int(data["h3"]), int(data["c2h"]), int(data["index"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInvariants(f"malformed invariants object: {data!r}") from exc
        return validate(inv)


def validate(inv: ThreefoldInvariants) -> ThreefoldInvariants:
    if inv.h3 < 1:
        raise InvalidInvariants(f"h3 must be >= 1, got {inv.h3}")
    return inv


def check_generator_degree(d: int) -> int:
    if d < 1:
        raise InvalidDegree(f"generator degree must be >= 1, got {d}")
    return d


def hypersurface_invariants(m: int) -> ThreefoldInvariants:
    """Invariants of a smooth degree-``m`` hypersurface in P^4."""
    if m < 2:
        raise InvalidDegree(f"hypersurface degree must be >= 2, got {m}")
    return ThreefoldInvariants(h3=m, c2h=m**3 - 5 * m**2 + 10 * m, index=m - 5)


# c(P^3) = (1+H)^4 gives c2 = 6H^2; c(Q) = (1+H)^5/(1+2H) gives c2 = 4H^2 with H^3 = 2.
_PRESETS = {
    "P3": ThreefoldInvariants(h3=1, c2h=6, index=-4),
    "Q": ThreefoldInvariants(h3=2, c2h=8, index=-3),
}


def preset(name: str) -> ThreefoldInvariants:
    try:
        return _PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {sorted(_PRESETS)}") from None


def from_chern_numbers(c1_cubed: int, c1c2: int, index: int) -> ThreefoldInvariants:
    """Recover (h3, c2h) from c_1^3, c_1 c_2 and the index, using H = -c_1/k.

    Undefined for index 0, where c_1 carries no information about H.
    """
    if index == 0:
        raise InvalidInvariants("Chern-number conversion needs a nonzero index (H = -c1/k)")
    h3, r1 = divmod(-c1_cubed, index**3)
    c2h, r2 = divmod(-c1c2, index)
    if r1 or r2:
        raise InvalidInvariants(
            f"c1^3={c1_cubed}, c1c2={c1c2} are not compatible with index {index}"
        )
    return validate(ThreefoldInvariants(h3, c2h, index))
