"""Brute-force enumeration kernels behind the oracle module."""

import numpy as np

from . import njit, select


@njit
def slice_counts_numba(p, q, dmax):
    out = np.zeros(dmax + 1, dtype=np.int64)
    for d in range(dmax + 1):
        n = 0
        for s in range(d + 1):
            t = d - s
            if s == 0 and t == 0:
                continue
            if p * t >= q * s:
                n += 1
        out[d] = n
    return out


def slice_counts_numpy(p, q, dmax):
    d = np.arange(dmax + 1)[:, None]
    s = np.arange(dmax + 1)[None, :]
    t = d - s
    ok = (s <= d) & (p * t >= q * s)
    ok[0, 0] = False
    return ok.sum(axis=1).astype(np.int64)


@njit
def normal_form_numba(vx, vy, wx, wy, bound):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a * vx + b * vy != 0:
                continue
            p = a * wx + b * wy
            if p <= 0:
                continue
            for c in range(-bound, bound + 1):
                for d in range(-bound, bound + 1):
                    if a * d - b * c != -1:
                        continue
                    if c * vx + d * vy != 1:
                        continue
                    q = -(c * wx + d * wy)
                    if 0 <= q < p:
                        return p, q
    return -1, -1


def normal_form_numpy(vx, vy, wx, wy, bound):
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    a, b = (g.ravel() for g in np.meshgrid(rng, rng, indexing="ij"))
    at_v = a * vx + b * vy
    at_w = a * wx + b * wy
    first = np.flatnonzero((at_v == 0) & (at_w > 0))
    second = np.flatnonzero(at_v == 1)
    c, d = a[second], b[second]
    q_all = -at_w[second]
    for i in first:
        p = at_w[i]
        hit = (a[i] * d - b[i] * c == -1) & (q_all >= 0) & (q_all < p)
        if hit.any():
            return int(p), int(q_all[np.argmax(hit)])
    return -1, -1


slice_counts = select(slice_counts_numba, slice_counts_numpy)
normal_form = select(normal_form_numba, normal_form_numpy)
