"""Brute-force oracles that certify the closed-form paths.

Nothing here calls into :mod:`toricoh.resolve`, :mod:`toricoh.cohomology`
or the completeness test of :mod:`toricoh.fan`; the oracles only loop and
compare integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fan import Fan
from .kernels import enumeration
from .lattice import LatticeVector


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_entry: int = 24
    max_degree: int = 200

    @classmethod
    def for_vectors(cls, *vs: LatticeVector, max_degree: int = 200) -> SearchBudget:
        """Smallest budget that is guaranteed to contain the normal-form witness."""
        m = max(max(abs(v.x), abs(v.y)) for v in vs)
        return cls(max(1, 2 * m), max_degree)


def count_lattice_slice(p: int, q: int, d: int) -> int:
    n = 0
    for s in range(d + 1):
        t = d - s
        if (s, t) != (0, 0) and p * t >= q * s:
            n += 1
    return n


def slice_table(p: int, q: int, max_degree: int) -> np.ndarray:
    """``count_lattice_slice(p, q, d)`` for ``d = 0..max_degree`` in one kernel call."""
    return enumeration.slice_counts(p, q, max_degree)


def normal_form_search(
    v: LatticeVector, w: LatticeVector, budget: SearchBudget | None = None
) -> tuple[int, int]:
    """Search all integer matrices with entries in ``[-max_entry, max_entry]``.

    Returns the ``(p, q)`` of the det -1 matrix sending ``v -> (0, 1)`` and
    ``w -> (p, -q)`` with ``0 <= q < p``.
    """
    if v.x * w.y - v.y * w.x <= 0:
        raise ValueError("need a strictly convex ccw pair")
    if budget is None:
        budget = SearchBudget.for_vectors(v, w)
    p, q = enumeration.normal_form(v.x, v.y, w.x, w.y, budget.max_entry)
    if p < 0:
        raise BudgetExhausted(f"no witness for {v},{w} with entries <= {budget.max_entry}")
    return int(p), int(q)


def _before(a: LatticeVector, b: LatticeVector) -> bool:
    """Strict ccw order from the positive x-axis, by half-plane then cross product."""
    ha = 0 if (a.y > 0 or (a.y == 0 and a.x > 0)) else 1
    hb = 0 if (b.y > 0 or (b.y == 0 and b.x > 0)) else 1
    if ha != hb:
        return ha < hb
    return a.x * b.y - a.y * b.x > 0


def check_complete_cover(f: Fan) -> bool:
    """Merge cones into arcs by walking ccw; complete iff they close up."""
    cones = [(f.rays[i], f.rays[j]) for i, j in f.cones]
    if not cones:
        return False
    # insertion sort by start ray, no shared helpers
    ordered: list[tuple[LatticeVector, LatticeVector]] = []
    for c in cones:
        k = 0
        while k < len(ordered) and _before(ordered[k][0], c[0]):
            k += 1
        ordered.insert(k, c)
    arcs = [[ordered[0][0], ordered[0][1]]]
    for start, end in ordered[1:]:
        if arcs[-1][1] == start:
            arcs[-1][1] = end
        else:
            arcs.append([start, end])
    if len(arcs) > 1 and arcs[-1][1] == arcs[0][0]:
        arcs[0][0] = arcs[-1][0]
        arcs.pop()
    if len(arcs) != 1:
        return False
    covered = {r for c in cones for r in c}
    isolated = [r for r in f.rays if r not in covered]
    return arcs[0][0] == arcs[0][1] and not isolated
