"""Exit criteria. Every check is exact; there are no tolerances to tune."""

import json
import time
from collections import Counter
from math import gcd

import numpy as np

from toricoh.classify import AngleClass, FanKind, classify_fan, gap_components
from toricoh.cohomology import Summand, SummandKind, cohomology_report, graded_dim
from toricoh.completion import complete_fan
from toricoh.corpus import builtin_fan, corpus, random_fans, random_sl2
from toricoh.fan import apply_unimodular, is_complete, is_smooth_cone, make_fan, validate_fan
from toricoh.kernels import cfrac
from toricoh.lattice import det2, vec
from toricoh.oracle import normal_form_search, slice_table
from toricoh.resolve import ConeType, cf_eval, cone_type, hj_cf

from make_golden import COMMANDS, NAMES, golden_path, run


def _dims(rep):
    return rep.h0_dim, [s.key() for s in rep.h1_summands], rep.h2_dim


def test_criterion_01_c2_is_acyclic():
    assert _dims(cohomology_report(builtin_fan("c2"))) == (0, [], 0)


def test_criterion_02_complete_fans_have_compact_cohomology():
    names = ["p2", "p1xp1", *(f"hirzebruch:{a}" for a in range(6))]
    for name in names:
        f = builtin_fan(name)
        assert validate_fan(f).ok and is_complete(f)
        assert _dims(cohomology_report(f)) == (1, [], 0), name


def test_criterion_03_line_fan():
    rep = cohomology_report(builtin_fan("line"))
    assert rep.fan_class.kind is FanKind.LINE_SUPPORT
    assert [s.kind for s in rep.h1_summands] == [SummandKind.HALF_LINE_SERIES] * 2
    assert [s.variable for s in rep.h1_summands] == ["z", "1/z"]
    assert rep.h2_dim == 0 and rep.h0_dim == 0


def test_criterion_04_p1xc_half_line():
    rep = cohomology_report(builtin_fan("p1xc"))
    assert [s.key() for s in rep.h1_summands] == [Summand.half_line("z").key()]
    assert rep.h0_dim == rep.h2_dim == 0


def test_criterion_05_half_plane_hull_assembly():
    f = make_fan([(1, 0), (1, 1), (-1, 1), (-1, 0)], [(0, 1), (2, 3)])
    rep = cohomology_report(f)
    assert rep.fan_class.kind is FanKind.HALF_PLANE_HULL
    convex = [e.gap for e in rep.gaps if e.gap.angle_class is AngleClass.STRICTLY_CONVEX]
    assert [(g.from_ray, g.to_ray) for g in convex] == [(vec(1, 1), vec(-1, 1))]
    assert normal_form_search(vec(1, 1), vec(-1, 1)) == (2, 1)
    assert [s.key() for s in rep.h1_summands] == [
        Summand.half_line("z").key(),
        Summand.monomial_cone(ConeType(2, 1)).key(),
    ]
    assert rep.h0_dim == rep.h2_dim == 0


def test_criterion_06_spans_plane_assembly():
    rep = cohomology_report(builtin_fan("three-quadrants"))
    assert rep.fan_class.kind is FanKind.SPANS_PLANE
    assert _dims(rep) == (0, [Summand.monomial_cone(ConeType(1, 0)).key()], 0)


def test_criterion_07_random_completions():
    fans = random_fans(seed=20261015, count=500)
    assert len(fans) == 500
    for f in fans:
        assert validate_fan(f).ok
        out = complete_fan(f).completed_fan
        assert validate_fan(out).ok
        assert is_complete(out)
        assert all(is_smooth_cone(c) for c in out.cone2s)
        assert out.rays[: len(f.rays)] == f.rays
        assert set(f.cone2s) <= set(out.cone2s)


def _totient_sum(n):
    phi = np.arange(n + 1, dtype=np.int64)
    for i in range(2, n + 1):
        if phi[i] == i:
            phi[i::i] -= phi[i::i] // i
    # p = 1 contributes the single type (1, 0)
    return int(phi[2:].sum()) + 1


def test_criterion_08_continued_fraction_round_trip():
    pmax = 10_000
    start = time.perf_counter()
    pairs, digits, failures = cfrac.roundtrip(pmax)
    elapsed = time.perf_counter() - start
    assert failures == 0
    assert pairs == _totient_sum(pmax)
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    # the library's scalar functions against the same definition on a prefix
    for p in range(1, 501):
        for q in range(p):
            if gcd(p, q) == 1:
                assert cf_eval(hj_cf(ConeType(p, q))) == (p, q)


def test_criterion_09_oracle_equivalence():
    for p in range(1, 26):
        for q in range(p):
            if gcd(p, q) != 1:
                continue
            s = Summand.monomial_cone(ConeType(p, q))
            counts = slice_table(p, q, 200)
            assert [graded_dim(s, d) for d in range(201)] == counts.tolist(), (p, q)
    rng = np.random.default_rng(9)
    checked = 0
    while checked < 500:
        vx, vy, wx, wy = (int(x) for x in rng.integers(-12, 13, size=4))
        if gcd(vx, vy) != 1 or gcd(wx, wy) != 1:
            continue
        v, w = vec(vx, vy), vec(wx, wy)
        if det2(v, w) <= 0:
            continue
        t = cone_type(v, w)
        assert normal_form_search(v, w) == (t.p, t.q), (v, w)
        checked += 1


def _gap_types(f):
    if classify_fan(f).kind is FanKind.COMPLETE:
        return Counter()
    return Counter(str(g.cone_type) for g in gap_components(f))


def test_criterion_10_sl2_invariance():
    rng = np.random.default_rng(10)
    for f in corpus():
        base = (classify_fan(f), _gap_types(f), cohomology_report(f).signature())
        for _ in range(50):
            g = apply_unimodular(f, random_sl2(rng, 10))
            assert (classify_fan(g), _gap_types(g), cohomology_report(g).signature()) == base


def test_criterion_11_golden_json_stable():
    for name in NAMES:
        for suffix in ("analyze.json", "complete.json"):
            first = run([*COMMANDS[suffix], "--builtin", name])
            second = run([*COMMANDS[suffix], "--builtin", name])
            assert first == second
            assert first == golden_path(name, suffix).read_text(encoding="utf-8")
            json.loads(first)
