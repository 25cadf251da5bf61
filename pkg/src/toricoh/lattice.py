"""Exact integer geometry in the plane lattice Z^2.

Everything here works on Python ints, but products are range-checked against
signed 64-bit bounds so that a runaway input fails loudly instead of silently
producing huge coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class LatticeError(ValueError):
    pass


class ZeroVector(LatticeError):
    pass


class IntegerOverflow(LatticeError, OverflowError):
    pass


def _checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise IntegerOverflow(f"integer {value} exceeds the 64-bit range")
    return value


@dataclass(frozen=True, slots=True)
class LatticeVector:
    x: int
    y: int

    def __post_init__(self):
        _checked(self.x)
        _checked(self.y)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.x, -self.y)

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(_checked(self.x + other.x), _checked(self.y + other.y))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(_checked(self.x - other.x), _checked(self.y - other.y))

    def scaled(self, k: int) -> LatticeVector:
        return LatticeVector(_checked(k * self.x), _checked(k * self.y))

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def perp(self) -> LatticeVector:
        """Rotation by a quarter turn counterclockwise."""
        return LatticeVector(-self.y, self.x)

    def to_list(self) -> list[int]:
        return [self.x, self.y]

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def vec(x: int, y: int) -> LatticeVector:
    return LatticeVector(int(x), int(y))


def det2(a: LatticeVector, b: LatticeVector) -> int:
    """Return ``a.x*b.y - a.y*b.x``, raising IntegerOverflow outside int64."""
    return _checked(_checked(a.x * b.y) - _checked(a.y * b.x))


def dot(a: LatticeVector, b: LatticeVector) -> int:
    return _checked(_checked(a.x * b.x) + _checked(a.y * b.y))


def primitive(v: LatticeVector) -> LatticeVector:
    if v.is_zero():
        raise ZeroVector("the zero vector has no primitive direction")
    g = gcd(v.x, v.y)
    return LatticeVector(v.x // g, v.y // g)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _half(v: LatticeVector) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    if v.y > 0 or (v.y == 0 and v.x > 0):
        return 0
    return 1


def angular_compare(a: LatticeVector, b: LatticeVector) -> Ordering:
    """Compare the counterclockwise angles of `a` and `b` measured from (1, 0).

    Only the direction matters, so ``(1, 0)`` and ``(2, 0)`` compare equal;
    on primitive vectors EQUAL means ``a == b``.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroVector("cannot order the zero vector")
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return Ordering.LESS if ha < hb else Ordering.GREATER
    d = det2(a, b)
    if d > 0:
        return Ordering.LESS
    if d < 0:
        return Ordering.GREATER
    return Ordering.EQUAL


angle_key = cmp_to_key(angular_compare)


def _rel_half(base: LatticeVector, v: LatticeVector) -> int:
    d = det2(base, v)
    if d > 0 or (d == 0 and dot(base, v) > 0):
        return 0
    return 1


def _rel_before(base: LatticeVector, u: LatticeVector, v: LatticeVector) -> bool:
    # ccw angle base->u strictly smaller than base->v, angles taken in [0, 2pi)
    hu, hv = _rel_half(base, u), _rel_half(base, v)
    if hu != hv:
        return hu < hv
    return det2(u, v) > 0


def ccw_between(a: LatticeVector, b: LatticeVector, x: LatticeVector) -> bool:
    """True iff `x` lies strictly inside the open counterclockwise arc a -> b."""
    if a.is_zero() or b.is_zero() or x.is_zero():
        raise ZeroVector("arc endpoints and probe must be nonzero")
    if _rel_half(a, x) == 0 and det2(a, x) == 0:
        return False  # x points along a
    if _rel_half(a, b) == 0 and det2(a, b) == 0:
        # degenerate arc a -> a: everything but a itself
        return True
    return _rel_before(a, x, b)
