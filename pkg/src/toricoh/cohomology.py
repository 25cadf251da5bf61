"""Compactly supported cohomology H^i_c(X, O) of a smooth toric surface.

The groups are infinite-dimensional series spaces; each is described by the
exponent set of its monomials. ``MonomialCone(p, q)`` stands for the space of
convergent series ``sum a_st z^s w^t`` over ``(s, t) >= 0, (s, t) != (0, 0)``
with ``p t >= q s``; ``HalfLineSeries`` for ``sum_{s>0} a_s z^s``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .classify import (
    AngleClass,
    FanClass,
    FanKind,
    GapComponent,
    UnsupportedFan,
    classify_fan,
    gap_components,
)
from .completion import Completion, curve_chain
from .fan import Fan
from .resolve import ConeType, CurveChain, cf_eval


class SummandKind(str, enum.Enum):
    MONOMIAL_CONE = "monomial_cone"
    HALF_LINE_SERIES = "half_line_series"


@dataclass(frozen=True)
class Summand:
    kind: SummandKind
    p: int | None = None
    q: int | None = None
    variable: str | None = None
    source: str = ""

    @classmethod
    def monomial_cone(cls, t: ConeType, source: str = "") -> Summand:
        return cls(SummandKind.MONOMIAL_CONE, t.p, t.q, None, source)

    @classmethod
    def half_line(cls, variable: str = "z", source: str = "") -> Summand:
        return cls(SummandKind.HALF_LINE_SERIES, None, None, variable, source)

    def key(self) -> tuple:
        """Identity of the space, ignoring which gap produced it."""
        return (self.kind.value, self.p or 0, self.q or 0, self.variable or "")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "p": self.p,
            "q": self.q,
            "variable": self.variable,
            "source": self.source,
            "text": summand_text(self),
        }

    @classmethod
    def from_dict(cls, d: dict) -> Summand:
        return cls(SummandKind(d["kind"]), d["p"], d["q"], d["variable"], d["source"])


def summand_text(s: Summand) -> str:
    if s.kind is SummandKind.MONOMIAL_CONE:
        return f"{{ Σ_{{(s,t)>(0,0)}} a_st z^s w^t : {s.p}t >= {s.q}s }}"
    if s.variable == "1/z":
        return "{ Σ_{s>0} a_s z^-s }"
    return f"{{ Σ_{{s>0}} a_s {s.variable}^s }}"


def graded_dim(s: Summand, d: int) -> int:
    """Number of admissible exponents of total degree `d`.

    For a monomial cone the admissible ``s`` in degree ``d >= 1`` run from 0
    to ``floor(p d / (p + q))``.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 0
    if s.kind is SummandKind.HALF_LINE_SERIES:
        return 1
    return s.p * d // (s.p + s.q) + 1


@dataclass(frozen=True)
class GapEntry:
    index: int
    gap: GapComponent
    chain: CurveChain | None


@dataclass(frozen=True)
class CohomologyReport:
    fan_class: FanClass
    h0_dim: int
    h1_summands: tuple[Summand, ...]
    h2_dim: int
    gaps: tuple[GapEntry, ...] = ()

    def h1_text(self) -> str:
        if not self.h1_summands:
            return "0"
        return " ⊕ ".join(summand_text(s) for s in self.h1_summands)

    def signature(self) -> tuple:
        """Basis-independent content: class, dimensions and sorted summands."""
        return (
            self.fan_class.kind.value,
            self.h0_dim,
            tuple(sorted(s.key() for s in self.h1_summands)),
            self.h2_dim,
        )


def _convex_summands(gaps: list[GapComponent]) -> list[Summand]:
    return [
        Summand.monomial_cone(g.cone_type, f"gap {i}")
        for i, g in enumerate(gaps)
        if g.angle_class is AngleClass.STRICTLY_CONVEX
    ]


def cohomology_report(f: Fan) -> CohomologyReport:
    """H^0_c, H^1_c, H^2_c of the toric surface of a smooth fan.

    Raises
    ------
    UnsupportedFan
        If the fan has isolated rays other than the two rays of a line.
    """
    cls = classify_fan(f)
    kind = cls.kind
    if kind is FanKind.UNSUPPORTED:
        raise UnsupportedFan(cls.reason)
    if kind is FanKind.COMPLETE:
        return CohomologyReport(cls, 1, (), 0)

    gaps = gap_components(f)
    table = tuple(
        GapEntry(
            i, g, curve_chain(g) if g.angle_class is AngleClass.STRICTLY_CONVEX else None
        )
        for i, g in enumerate(gaps)
    )
    if kind is FanKind.LINE_SUPPORT:
        h1 = [Summand.half_line("z", "line factor +"), Summand.half_line("1/z", "line factor -")]
    elif kind is FanKind.HALF_PLANE_HULL:
        h1 = [Summand.half_line("z", "half-plane factor"), *_convex_summands(gaps)]
    else:
        # strictly convex hull: the concave gap contributes nothing
        h1 = _convex_summands(gaps)
    return CohomologyReport(cls, 0, tuple(h1), 0, table)


def h1_from_completion(c: Completion) -> list[Summand]:
    """Rebuild H^1_c from the exceptional-curve chains of a completion.

    Gap types are recovered by evaluating each chain's continued fraction,
    so this agrees with :func:`cohomology_report` only if the resolution
    combinatorics are consistent.
    """
    cls = classify_fan(c.source)
    out = []
    if cls.kind is FanKind.LINE_SUPPORT:
        return [Summand.half_line("z", "line factor +"), Summand.half_line("1/z", "line factor -")]
    if cls.kind is FanKind.HALF_PLANE_HULL:
        out.append(Summand.half_line("z", "half-plane factor"))
    for res in c.gaps:
        if res.gap.angle_class is not AngleClass.STRICTLY_CONVEX:
            continue
        (piece,) = res.pieces
        p, q = cf_eval(piece.chain.coefficients)
        out.append(Summand.monomial_cone(ConeType(p, q), f"gap {res.gap_index}"))
    return out
