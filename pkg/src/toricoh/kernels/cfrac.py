"""Exhaustive continued-fraction round trip over all cone types up to a bound.

For every coprime ``0 <= q < p <= pmax`` the Hirzebruch-Jung digits of
``p/q`` are produced by ``a = ceil(p/q), (p, q) -> (q, a q - p)`` and fed
straight into the forward convergent recurrence ``h_n = a h_{n-1} - h_{n-2}``
(same for ``k``, seeded with ``h = (1, 0)``, ``k = (0, -1)``), so no digit
buffer is needed. The round trip holds iff the last convergent is ``(p, q)``.

Runs of the digit 2 are taken in one step: while ``p <= 2q`` the difference
``p - q`` is invariant, so the run length is ``(2q - p) // (p - q) + 1`` and
``m`` applications of ``[[2, -1], [1, 0]]`` equal ``[[m+1, -m], [m, 1-m]]``.
"""

import numpy as np

from . import njit, select


@njit
def roundtrip_numba(pmax):
    """Return ``(pairs, digits, failures)`` for all types with ``p <= pmax``.

    Every ``0 <= q < p`` is run; the recurrence ends at ``(gcd(p, q), 0)``,
    so non-coprime pairs are recognised and skipped at the end.
    """
    pairs = 0
    digits = 0
    failures = 0
    for p in range(1, pmax + 1):
        for q in range(p):
            num, den = p, q
            h1, h2 = 1, 0
            k1, k2 = 0, -1
            steps = 0
            while den:
                if num <= 2 * den:
                    delta = num - den
                    m = (2 * den - num) // delta + 1
                    num -= m * delta
                    den -= m * delta
                    h1, h2 = (m + 1) * h1 - m * h2, m * h1 - (m - 1) * h2
                    k1, k2 = (m + 1) * k1 - m * k2, m * k1 - (m - 1) * k2
                    steps += m
                else:
                    a = (num + den - 1) // den
                    num, den = den, a * den - num
                    h1, h2 = a * h1 - h2, h1
                    k1, k2 = a * k1 - k2, k1
                    steps += 1
            if num != 1:
                continue
            pairs += 1
            digits += steps
            if h1 != p or k1 != q:
                failures += 1
    return pairs, digits, failures


def _coprime_block(lo, hi):
    ps = np.arange(lo, hi, dtype=np.int64)
    p = np.repeat(ps, ps)
    offsets = np.repeat(np.cumsum(ps) - ps, ps)
    q = np.arange(p.size, dtype=np.int64) - offsets
    keep = np.gcd(p, q) == 1
    return p[keep], q[keep]


def roundtrip_numpy(pmax, block_pairs=4_000_000):
    # int32 halves memory traffic; products stay below p**2 + p
    dtype = np.int32 if pmax <= 30_000 else np.int64
    pairs = digits = failures = 0
    lo = 1
    while lo <= pmax:
        hi = lo + 1
        while hi <= pmax and (hi * (hi + 1) - lo * (lo - 1)) // 2 < block_pairs:
            hi += 1
        p, q = (x.astype(dtype) for x in _coprime_block(lo, hi))
        pairs += p.size
        num, den = p.copy(), q.copy()
        h1, h2 = np.ones_like(p), np.zeros_like(p)
        k1, k2 = np.zeros_like(p), np.full_like(p, -1)
        idx = np.arange(p.size)
        while idx.size:
            n, d = num[idx], den[idx]
            keep = d != 0
            if not keep.all():
                idx, n, d = idx[keep], n[keep], d[keep]
            run = n <= 2 * d
            ri, si = idx[run], idx[~run]

            nr, dr = n[run], d[run]
            delta = nr - dr
            m = (2 * dr - nr) // delta + 1
            num[ri] = nr - m * delta
            den[ri] = dr - m * delta
            for hk1, hk2 in ((h1, h2), (k1, k2)):
                x1, x2 = hk1[ri], hk2[ri]
                hk1[ri] = (m + 1) * x1 - m * x2
                hk2[ri] = m * x1 - (m - 1) * x2
            digits += int(m.sum(dtype=np.int64))

            ns, ds = n[~run], d[~run]
            a = (ns + ds - 1) // ds
            num[si] = ds
            den[si] = a * ds - ns
            for hk1, hk2 in ((h1, h2), (k1, k2)):
                x1 = hk1[si]
                hk1[si] = a * x1 - hk2[si]
                hk2[si] = x1
            digits += si.size
        failures += np.count_nonzero((h1 != p) | (k1 != q))
        lo = hi
    return int(pairs), int(digits), int(failures)


roundtrip = select(roundtrip_numba, roundtrip_numpy)
