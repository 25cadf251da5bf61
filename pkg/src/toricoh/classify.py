"""Support arcs, complement components ("gaps") and the four-way fan classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .fan import Fan
from .lattice import LatticeVector, angle_key, det2
from .resolve import ConeType, cone_type


class NoGaps(ValueError):
    pass


class UnsupportedFan(ValueError):
    """The fan lies outside the four cases the cohomology formulas cover."""


@dataclass(frozen=True)
class SupportArc:
    start: LatticeVector
    end: LatticeVector
    full: bool = False

    @property
    def degenerate(self) -> bool:
        return self.start == self.end and not self.full


class AngleClass(str, enum.Enum):
    STRICTLY_CONVEX = "strictly_convex"
    HALF_PLANE = "half_plane"
    CONCAVE = "concave"


@dataclass(frozen=True)
class GapComponent:
    from_ray: LatticeVector
    to_ray: LatticeVector
    angle_class: AngleClass
    cone_type: ConeType | None = None


class FanKind(str, enum.Enum):
    COMPLETE = "complete"
    STRICTLY_CONVEX_HULL = "strictly_convex_hull"
    HALF_PLANE_HULL = "half_plane_hull"
    LINE_SUPPORT = "line_support"
    SPANS_PLANE = "spans_plane"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class FanClass:
    kind: FanKind
    reason: str | None = None

    @property
    def supported(self) -> bool:
        return self.kind is not FanKind.UNSUPPORTED

    def __str__(self) -> str:
        if self.reason:
            return f"{self.kind.value}: {self.reason}"
        return self.kind.value


def support_arcs(f: Fan) -> list[SupportArc]:
    """Maximal closed arcs of the support, sorted ccw by start ray.

    An isolated ray gives a degenerate arc; a complete fan gives a single
    arc flagged ``full``.
    """
    cones = f.cone2s
    by_start = {c.v: c for c in cones}
    ends = {c.w for c in cones}
    arcs = []
    heads = [c for c in cones if c.v not in ends]
    if cones and not heads:
        first = min((c.v for c in cones), key=angle_key)
        return [SupportArc(first, first, full=True)]
    for head in heads:
        cur = head
        while cur.w in by_start:
            cur = by_start[cur.w]
        arcs.append(SupportArc(head.v, cur.w))
    arcs.extend(SupportArc(r, r) for r in f.isolated_rays())
    arcs.sort(key=lambda a: angle_key(a.start))
    return arcs


def angle_class(from_ray: LatticeVector, to_ray: LatticeVector) -> AngleClass:
    d = det2(from_ray, to_ray)
    if d > 0:
        return AngleClass.STRICTLY_CONVEX
    if to_ray == -from_ray:
        return AngleClass.HALF_PLANE
    return AngleClass.CONCAVE


def gap_components(f: Fan) -> list[GapComponent]:
    arcs = support_arcs(f)
    if not arcs:
        raise ValueError("a fan without rays has no support arcs")
    if arcs[0].full:
        raise NoGaps("the fan is complete")
    gaps = []
    for i, arc in enumerate(arcs):
        nxt = arcs[(i + 1) % len(arcs)]
        cls = angle_class(arc.end, nxt.start)
        t = cone_type(arc.end, nxt.start) if cls is AngleClass.STRICTLY_CONVEX else None
        gaps.append(GapComponent(arc.end, nxt.start, cls, t))
    gaps.sort(key=lambda g: angle_key(g.from_ray))
    return gaps


def classify_fan(f: Fan) -> FanClass:
    if not f.rays:
        return FanClass(FanKind.UNSUPPORTED, "no rays (algebraic torus)")
    if not f.cones:
        if len(f.rays) == 2 and f.rays[1] == -f.rays[0]:
            return FanClass(FanKind.LINE_SUPPORT)
        if len(f.rays) == 1:
            return FanClass(FanKind.UNSUPPORTED, "isolated ray (torus factor)")
        return FanClass(FanKind.UNSUPPORTED, "isolated rays (torus factor)")
    if f.isolated_rays():
        return FanClass(
            FanKind.UNSUPPORTED, "isolated ray next to two-dimensional cones"
        )
    arcs = support_arcs(f)
    if arcs[0].full:
        return FanClass(FanKind.COMPLETE)
    gaps = gap_components(f)
    concave = sum(g.angle_class is AngleClass.CONCAVE for g in gaps)
    half = sum(g.angle_class is AngleClass.HALF_PLANE for g in gaps)
    if concave == 1 and half == 0:
        return FanClass(FanKind.STRICTLY_CONVEX_HULL)
    if concave == 0 and half == 1:
        return FanClass(FanKind.HALF_PLANE_HULL)
    if concave == 0 and half == 0:
        return FanClass(FanKind.SPANS_PLANE)
    # not reachable for a valid fan with cones
    return FanClass(FanKind.UNSUPPORTED, f"{concave} concave and {half} half-plane gaps")
