"""Two-dimensional fans: data model, text format, validation.

A fan file is line oriented::

    # comment
    name P2
    ray 1 0
    ray 0 1
    ray -1 -1
    cone 0 1
    cone 1 2
    cone 2 0

Rays are indexed from 0 in declaration order. Cone generators may be given in
either order; internally each cone is stored counterclockwise.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .lattice import LatticeVector, angle_key, ccw_between, det2, vec


class FanError(ValueError):
    """Base class for structural errors in fan input."""


class FanSyntaxError(FanError):
    pass


class BadIndex(FanError):
    pass


class NonPrimitiveRay(FanError):
    pass


class ZeroRay(FanError):
    pass


class DuplicateRay(FanError):
    pass


class AntipodalCone(FanError):
    pass


class NotUnimodular(FanError):
    pass


@dataclass(frozen=True, slots=True)
class Cone2:
    v: LatticeVector
    w: LatticeVector

    @property
    def det(self) -> int:
        return det2(self.v, self.w)

    def __str__(self) -> str:
        return f"{self.v},{self.w}"


@dataclass(frozen=True)
class Fan:
    rays: tuple[LatticeVector, ...]
    cones: tuple[tuple[int, int], ...] = ()
    name: str | None = field(default=None, compare=False)

    def cone(self, k: int) -> Cone2:
        i, j = self.cones[k]
        return Cone2(self.rays[i], self.rays[j])

    @property
    def cone2s(self) -> tuple[Cone2, ...]:
        return tuple(self.cone(k) for k in range(len(self.cones)))

    def index_of(self, ray: LatticeVector) -> int:
        return self.rays.index(ray)

    def isolated_rays(self) -> list[LatticeVector]:
        """Rays that are not a face of any two-dimensional cone."""
        used = {i for c in self.cones for i in c}
        return [r for i, r in enumerate(self.rays) if i not in used]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "rays": [r.to_list() for r in self.rays],
            "cones": [list(c) for c in self.cones],
        }


def _cone_sort_key(rays: Sequence[LatticeVector]):
    def key(c: tuple[int, int]):
        return (angle_key(rays[c[0]]), angle_key(rays[c[1]]))

    return key


def make_fan(
    rays: Iterable[LatticeVector | tuple[int, int]],
    cones: Iterable[tuple[int, int]] = (),
    name: str | None = None,
) -> Fan:
    """Build a fan, checking the structural invariants.

    Cone pairs are reoriented counterclockwise and sorted by the angle of
    their first generator. Geometric problems (singular or overlapping
    cones) are left to :func:`validate_fan`.
    """
    rs = tuple(r if isinstance(r, LatticeVector) else vec(*r) for r in rays)
    seen: dict[LatticeVector, int] = {}
    for i, r in enumerate(rs):
        if r.is_zero():
            raise ZeroRay(f"ray {i} is zero")
        if not r.is_primitive():
            raise NonPrimitiveRay(f"ray {i} {r} is not primitive")
        if r in seen:
            raise DuplicateRay(f"ray {i} {r} repeats ray {seen[r]}")
        seen[r] = i
    oriented = []
    for i, j in cones:
        for k in (i, j):
            if not 0 <= k < len(rs):
                raise BadIndex(f"cone ({i},{j}) references missing ray {k}")
        d = det2(rs[i], rs[j])
        if d == 0:
            raise AntipodalCone(f"cone ({i},{j}) on {rs[i]},{rs[j]} is not two-dimensional")
        oriented.append((i, j) if d > 0 else (j, i))
    oriented.sort(key=_cone_sort_key(rs))
    return Fan(rs, tuple(oriented), name)


def parse_fan(text: str) -> Fan:
    rays: list[LatticeVector] = []
    cones: list[tuple[int, int]] = []
    name = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "name":
            if name is not None:
                raise FanSyntaxError(f"line {lineno}: name given twice")
            if not rest:
                raise FanSyntaxError(f"line {lineno}: empty name")
            name = rest
            continue
        if keyword not in ("ray", "cone"):
            raise FanSyntaxError(f"line {lineno}: unknown keyword {keyword!r}")
        parts = rest.split()
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise FanSyntaxError(
                f"line {lineno}: expected two integers after {keyword!r}, got {rest!r}"
            ) from None
        if keyword == "ray":
            try:
                rays.append(vec(a, b))
            except OverflowError as exc:
                raise FanSyntaxError(f"line {lineno}: {exc}") from None
        else:
            cones.append((a, b))
    return make_fan(rays, cones, name)


def serialize_fan(f: Fan) -> str:
    lines = []
    if f.name is not None:
        lines.append(f"name {f.name}")
    lines.extend(f"ray {r.x} {r.y}" for r in f.rays)
    lines.extend(f"cone {i} {j}" for i, j in sorted(f.cones, key=_cone_sort_key(f.rays)))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> list[str]:
        return [v.kind for v in self.violations]


def _structural_violations(f: Fan) -> list[Violation]:
    out = []
    seen: dict[LatticeVector, int] = {}
    for i, r in enumerate(f.rays):
        if r.is_zero():
            out.append(Violation("ZeroRay", f"ray {i} is zero"))
            continue
        if not r.is_primitive():
            out.append(Violation("NonPrimitiveRay", f"ray {i} {r} is not primitive"))
        if r in seen:
            out.append(Violation("DuplicateRay", f"ray {i} {r} repeats ray {seen[r]}"))
        seen.setdefault(r, i)
    for i, j in f.cones:
        if not (0 <= i < len(f.rays) and 0 <= j < len(f.rays)):
            out.append(Violation("BadIndex", f"cone ({i},{j}) references a missing ray"))
    return out


def _open_arcs_overlap(a: Cone2, b: Cone2) -> bool:
    # both arcs are shorter than a half turn
    return a.v == b.v or ccw_between(a.v, a.w, b.v) or ccw_between(b.v, b.w, a.v)


def validate_fan(f: Fan) -> ValidationReport:
    """Check every fan invariant, returning violations instead of raising."""
    out = _structural_violations(f)
    if out:
        return ValidationReport(tuple(out))
    cones = f.cone2s
    good = []
    for c in cones:
        d = c.det
        if d == 0:
            out.append(Violation("AntipodalCone", f"cone {c} is not two-dimensional"))
        elif d < 0:
            out.append(Violation("ReversedCone", f"cone {c} is clockwise"))
        else:
            if d > 1:
                out.append(Violation("SingularCone", f"cone {c} has det {d}"))
            good.append(c)
    for a, b in combinations(good, 2):
        if _open_arcs_overlap(a, b):
            out.append(Violation("OverlappingCones", f"cones {a} and {b} overlap"))
    for r in f.isolated_rays():
        for c in good:
            if ccw_between(c.v, c.w, r):
                out.append(Violation("RayInsideCone", f"ray {r} lies inside cone {c}"))
    return ValidationReport(tuple(out))


def is_smooth_cone(c: Cone2) -> bool:
    return c.det == 1


def is_smooth(f: Fan) -> bool:
    return all(is_smooth_cone(c) for c in f.cone2s)


def is_complete(f: Fan) -> bool:
    """A valid fan is complete iff every cone's end ray starts another cone."""
    if not f.cones:
        return False
    starts = Counter(i for i, _ in f.cones)
    ends = Counter(j for _, j in f.cones)
    return starts == ends


def apply_unimodular(f: Fan, m: Sequence[Sequence[int]]) -> Fan:
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise NotUnimodular(f"matrix {[list(m[0]), list(m[1])]} has det {a * d - b * c}, need +1")
    rays = [vec(a * r.x + b * r.y, c * r.x + d * r.y) for r in f.rays]
    return make_fan(rays, f.cones, f.name)
