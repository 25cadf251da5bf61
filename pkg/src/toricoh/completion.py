"""Smooth toric compactification of a fan by filling every gap."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import (
    AngleClass,
    FanKind,
    GapComponent,
    UnsupportedFan,
    classify_fan,
    gap_components,
)
from .fan import Cone2, Fan, make_fan
from .lattice import LatticeVector
from .resolve import ConeType, CurveChain, NotStrictlyConvex, cone_type, smooth_subdivide


def curve_chain(g: GapComponent) -> CurveChain:
    """Exceptional curves over a strictly convex gap.

    An empty chain means the gap is a smooth cone and the corresponding
    boundary component is a single torus-fixed point.
    """
    if g.angle_class is not AngleClass.STRICTLY_CONVEX:
        raise NotStrictlyConvex(f"gap {g.from_ray}->{g.to_ray} is {g.angle_class.value}")
    return smooth_subdivide(g.from_ray, g.to_ray)


@dataclass(frozen=True)
class ResolvedPiece:
    from_ray: LatticeVector
    to_ray: LatticeVector
    cone_type: ConeType
    chain: CurveChain


@dataclass(frozen=True)
class GapResolution:
    gap_index: int
    gap: GapComponent
    splitting_rays: tuple[LatticeVector, ...]
    pieces: tuple[ResolvedPiece, ...]

    @property
    def boundary(self) -> list[LatticeVector]:
        """All rays from the gap's start to its end, ccw, endpoints included."""
        out = [self.gap.from_ray]
        for piece in self.pieces:
            out.extend(piece.chain.interior_rays)
            out.append(piece.to_ray)
        return out


@dataclass(frozen=True)
class Completion:
    source: Fan
    completed_fan: Fan
    gaps: tuple[GapResolution, ...] = ()

    @property
    def added_rays(self) -> tuple[LatticeVector, ...]:
        return self.completed_fan.rays[len(self.source.rays):]

    @property
    def new_cones(self) -> list[Cone2]:
        old = set(self.source.cone2s)
        return [c for c in self.completed_fan.cone2s if c not in old]


def _splitting_rays(g: GapComponent) -> tuple[LatticeVector, ...]:
    if g.angle_class is AngleClass.CONCAVE:
        # ccw order from_ray, -to_ray, -from_ray, to_ray
        return (-g.to_ray, -g.from_ray)
    if g.angle_class is AngleClass.HALF_PLANE:
        return (g.from_ray.perp(),)
    return ()


def resolve_gap(index: int, g: GapComponent) -> GapResolution:
    splits = _splitting_rays(g)
    corners = [g.from_ray, *splits, g.to_ray]
    pieces = tuple(
        ResolvedPiece(a, b, cone_type(a, b), smooth_subdivide(a, b))
        for a, b in zip(corners, corners[1:])
    )
    return GapResolution(index, g, splits, pieces)


def complete_fan(f: Fan) -> Completion:
    """Complete a smooth fan to a smooth complete fan containing it.

    Concave gaps are cut by ``-to_ray`` and ``-from_ray``, half-plane gaps
    by the ccw perpendicular of ``from_ray``; every resulting piece gets its
    minimal Hirzebruch-Jung subdivision.
    """
    cls = classify_fan(f)
    if cls.kind is FanKind.UNSUPPORTED:
        raise UnsupportedFan(cls.reason)
    if cls.kind is FanKind.COMPLETE:
        return Completion(f, f)
    resolutions = tuple(resolve_gap(i, g) for i, g in enumerate(gap_components(f)))
    rays = list(f.rays)
    index = {r: i for i, r in enumerate(rays)}
    cones = list(f.cones)
    for res in resolutions:
        boundary = res.boundary
        for r in boundary:
            if r not in index:
                index[r] = len(rays)
                rays.append(r)
        cones.extend((index[a], index[b]) for a, b in zip(boundary, boundary[1:]))
    return Completion(f, make_fan(rays, cones, f.name), resolutions)


def serialize_completion(c: Completion) -> str:
    """Fan-file text of the completed fan; added rays follow an ``# added`` line."""
    fan = c.completed_fan
    n_in = len(c.source.rays)
    lines = []
    if fan.name is not None:
        lines.append(f"name {fan.name}")
    lines.extend(f"ray {r.x} {r.y}" for r in fan.rays[:n_in])
    if len(fan.rays) > n_in:
        lines.append("# added")
        lines.extend(f"ray {r.x} {r.y}" for r in fan.rays[n_in:])
    lines.extend(f"cone {i} {j}" for i, j in fan.cones)
    return "\n".join(lines) + "\n"
