"""Named example fans and seeded random fans for tests and benchmarks."""

from __future__ import annotations

import numpy as np

from .fan import Fan, make_fan
from .lattice import LatticeVector, det2, vec
from .resolve import _bezout


class UnknownName(KeyError):
    pass


_QUADRANTS = [(1, 0), (0, 1), (-1, 0), (0, -1)]

_BUILTINS = {
    "p2": ([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)]),
    "p1xp1": (_QUADRANTS, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "c2": ([(1, 0), (0, 1)], [(0, 1)]),
    "p1xc": ([(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2)]),
    "line": ([(1, 0), (-1, 0)], []),
    "three-quadrants": (_QUADRANTS, [(1, 2), (2, 3), (3, 0)]),
}

BUILTIN_NAMES = (*_BUILTINS, "hirzebruch:<a>")


def builtin_fan(name: str) -> Fan:
    if name.startswith("hirzebruch:"):
        try:
            a = int(name.split(":", 1)[1])
        except ValueError:
            raise UnknownName(name) from None
        return make_fan(
            [(1, 0), (0, 1), (-1, a), (0, -1)], [(0, 1), (1, 2), (2, 3), (3, 0)], name
        )
    try:
        rays, cones = _BUILTINS[name]
    except KeyError:
        raise UnknownName(name) from None
    return make_fan(rays, cones, name)


def corpus() -> list[Fan]:
    """Every builtin, with Hirzebruch surfaces for a = 0..5."""
    names = [*_BUILTINS, *(f"hirzebruch:{a}" for a in range(6))]
    return [builtin_fan(n) for n in names]


def random_sl2(rng: np.random.Generator, bound: int = 10) -> tuple[tuple[int, int], tuple[int, int]]:
    """Random integer matrix of determinant +1 with entries in ``[-bound, bound]``."""
    while True:
        a, c = (int(x) for x in rng.integers(-bound, bound + 1, size=2))
        if np.gcd(a, c) != 1:
            continue
        s, t = _bezout(a, c)
        b, d = -t, s
        # (b, d) + k (a, c) keeps the determinant
        ks = [k for k in range(-2 * bound - 1, 2 * bound + 2)
              if abs(b + k * a) <= bound and abs(d + k * c) <= bound]
        if not ks:
            continue
        k = ks[int(rng.integers(len(ks)))]
        return (a, b + k * a), (c, d + k * c)


def _apply(m, r: LatticeVector) -> LatticeVector:
    (a, b), (c, d) = m
    return vec(a * r.x + b * r.y, c * r.x + d * r.y)


def random_complete_rays(rng: np.random.Generator, max_blowups: int = 5) -> list[LatticeVector]:
    """Rays, in ccw cyclic order, of a random smooth complete fan.

    Starts from P2, P1xP1 or a Hirzebruch fan, blows up random torus-fixed
    points (insert ``v + w`` between neighbours) and applies a random
    change of basis.
    """
    start = int(rng.integers(3))
    if start == 0:
        rays = [vec(1, 0), vec(0, 1), vec(-1, -1)]
    elif start == 1:
        rays = [vec(*r) for r in _QUADRANTS]
    else:
        rays = [vec(1, 0), vec(0, 1), vec(-1, int(rng.integers(0, 4))), vec(0, -1)]
    for _ in range(int(rng.integers(0, max_blowups + 1))):
        i = int(rng.integers(len(rays)))
        rays.insert(i + 1, rays[i] + rays[(i + 1) % len(rays)])
    m = random_sl2(rng, 3)
    return [_apply(m, r) for r in rays]


def random_smooth_fan(rng: np.random.Generator, max_blowups: int = 5) -> Fan:
    """A random valid smooth fan; roughly covers every supported class.

    Subsets of the cones of a random complete fan, plus the occasional
    complete fan or line fan. Rays and cones are shuffled.
    """
    roll = rng.random()
    if roll < 0.04:
        r = random_complete_rays(rng, 0)[0]
        return make_fan([r, -r], [], "random-line")
    rays = random_complete_rays(rng, max_blowups)
    n = len(rays)
    cones = [(i, (i + 1) % n) for i in range(n)]
    if roll >= 0.12:
        keep = rng.random(n) < rng.uniform(0.2, 0.9)
        if not keep.any():
            keep[int(rng.integers(n))] = True
        cones = [c for c, k in zip(cones, keep) if k]
    used = sorted({i for c in cones for i in c})
    perm = rng.permutation(len(used))
    new_index = {old: int(perm[k]) for k, old in enumerate(used)}
    new_rays = [None] * len(used)
    for old, new in new_index.items():
        new_rays[new] = rays[old]
    new_cones = [(new_index[j], new_index[i]) if rng.random() < 0.5 else (new_index[i], new_index[j])
                 for i, j in cones]
    rng.shuffle(new_cones)
    fan = make_fan(new_rays, new_cones, "random")
    assert all(det2(c.v, c.w) == 1 for c in fan.cone2s)
    return fan


def random_fans(seed: int, count: int, max_blowups: int = 5) -> list[Fan]:
    rng = np.random.default_rng(seed)
    return [random_smooth_fan(rng, max_blowups) for _ in range(count)]
