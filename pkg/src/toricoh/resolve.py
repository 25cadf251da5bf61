"""Singularity types of lattice cones and their Hirzebruch-Jung resolutions."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .lattice import LatticeVector, det2, primitive


class NotStrictlyConvex(ValueError):
    pass


@dataclass(frozen=True, order=True, slots=True)
class ConeType:
    """Type ``(p, q)`` with ``0 <= q < p`` and ``gcd(p, q) = 1``."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or not 0 <= self.q < self.p or gcd(self.p, self.q) != 1:
            raise ValueError(f"invalid cone type ({self.p},{self.q})")

    @property
    def is_smooth(self) -> bool:
        return self.p == 1

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


@dataclass(frozen=True)
class CurveChain:
    """Exceptional curves filling a strictly convex cone, listed ccw."""

    interior_rays: tuple[LatticeVector, ...] = ()
    self_intersections: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.interior_rays)

    @property
    def coefficients(self) -> list[int]:
        return [-s for s in self.self_intersections]

    def to_dict(self) -> dict:
        return {
            "rays": [r.to_list() for r in self.interior_rays],
            "self_intersections": list(self.self_intersections),
        }


def _bezout(a: int, b: int) -> tuple[int, int]:
    """Return ``(s, t)`` with ``s*a + t*b = gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    if a < 0:
        s0, t0 = -s0, -t0
    return s0, t0


def unimodular_partner(v: LatticeVector) -> LatticeVector:
    """Some lattice vector ``u`` with ``det2(v, u) = 1``; `v` must be primitive."""
    s, t = _bezout(v.x, v.y)
    u = LatticeVector(-t, s)
    assert det2(v, u) == 1
    return u


def _check_convex(v: LatticeVector, w: LatticeVector) -> int:
    p = det2(v, w)
    if p <= 0:
        raise NotStrictlyConvex(f"det2({v}, {w}) = {p}, need a positive determinant")
    if v != primitive(v) or w != primitive(w):
        raise ValueError("cone generators must be primitive")
    return p


def cone_type(v: LatticeVector, w: LatticeVector) -> ConeType:
    """Normal form of the cone spanned ccw by `v`, `w`.

    Writing ``w = p*u + b*v`` with ``det2(v, u) = 1`` gives ``p = det2(v, w)``
    and ``q = -b mod p``; then ``(w + q v) / p`` is integral, which is exactly
    the condition for a det -1 matrix to send ``v -> (0, 1)`` and
    ``w -> (p, -q)``.
    """
    p = _check_convex(v, w)
    u = unimodular_partner(v)
    b = det2(w, u)
    return ConeType(p, (-b) % p)


def hj_cf(t: ConeType) -> list[int]:
    """Hirzebruch-Jung expansion ``p/q = a1 - 1/(a2 - 1/(... - 1/ar))``."""
    p, q = t.p, t.q
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def cf_eval(coeffs: list[int]) -> tuple[int, int]:
    p, q = 1, 0
    for a in reversed(coeffs):
        if a < 2:
            raise ValueError(f"continued fraction entries must be >= 2, got {a}")
        p, q = a * p - q, p
    return p, q


def smooth_subdivide(v: LatticeVector, w: LatticeVector) -> CurveChain:
    """Minimal smooth subdivision of the cone spanned ccw by `v`, `w`.

    The first inserted ray is ``(w + q v) / p``; the rest follow from
    ``u[i+1] = a[i] u[i] - u[i-1]``.
    """
    t = cone_type(v, w)
    coeffs = hj_cf(t)
    if not coeffs:
        return CurveChain()
    rays = []
    prev = v
    num = w + v.scaled(t.q)
    cur = LatticeVector(num.x // t.p, num.y // t.p)
    for a in coeffs:
        rays.append(cur)
        prev, cur = cur, cur.scaled(a) - prev
    if cur != w:
        raise AssertionError(f"chain for {v},{w} ended at {cur}")
    return CurveChain(tuple(rays), tuple(-a for a in coeffs))
