from math import gcd

import pytest
from hypothesis import given

from toricoh.classify import AngleClass, FanKind, UnsupportedFan
from toricoh.cohomology import (
    Summand,
    SummandKind,
    cohomology_report,
    graded_dim,
    h1_from_completion,
    summand_text,
)
from toricoh.completion import complete_fan
from toricoh.corpus import builtin_fan
from toricoh.fan import apply_unimodular, make_fan
from toricoh.oracle import count_lattice_slice
from toricoh.resolve import ConeType

from conftest import random_fans, sl2_matrices

MC = lambda p, q: Summand.monomial_cone(ConeType(p, q))
HALF_PLANE_HULL_FAN = make_fan([(1, 0), (1, 1), (-1, 1), (-1, 0)], [(0, 1), (2, 3)])


def keys(rep):
    return [s.key() for s in rep.h1_summands]


def test_c2_trivial():
    rep = cohomology_report(builtin_fan("c2"))
    assert (rep.h0_dim, rep.h1_summands, rep.h2_dim) == (0, (), 0)


def test_p2_compact():
    rep = cohomology_report(builtin_fan("p2"))
    assert (rep.h0_dim, rep.h1_summands, rep.h2_dim) == (1, (), 0)


def test_line():
    rep = cohomology_report(builtin_fan("line"))
    assert keys(rep) == [Summand.half_line("z").key(), Summand.half_line("1/z").key()]
    assert rep.h0_dim == rep.h2_dim == 0


def test_p1xc():
    rep = cohomology_report(builtin_fan("p1xc"))
    assert keys(rep) == [Summand.half_line("z").key()]


def test_half_plane_hull_assembly():
    rep = cohomology_report(HALF_PLANE_HULL_FAN)
    assert rep.fan_class.kind is FanKind.HALF_PLANE_HULL
    assert keys(rep) == [Summand.half_line("z").key(), MC(2, 1).key()]


def test_three_quadrants():
    rep = cohomology_report(builtin_fan("three-quadrants"))
    assert keys(rep) == [MC(1, 0).key()]
    assert rep.h0_dim == rep.h2_dim == 0


def test_unsupported_raises():
    with pytest.raises(UnsupportedFan):
        cohomology_report(make_fan([(1, 0)]))


@pytest.mark.parametrize(
    "summand, d, expected",
    [(MC(1, 0), 3, 4), (MC(2, 1), 3, 3), (MC(2, 1), 0, 0), (MC(5, 3), 0, 0),
     (Summand.half_line(), 0, 0), (Summand.half_line(), 7, 1)],
)
def test_graded_dim_examples(summand, d, expected):
    assert graded_dim(summand, d) == expected


def test_graded_dim_matches_enumeration():
    for p in range(1, 26):
        for q in range(p):
            if gcd(p, q) != 1:
                continue
            s = MC(p, q)
            for d in range(0, 60):
                assert graded_dim(s, d) == count_lattice_slice(p, q, d)


@pytest.mark.parametrize(
    "summand, text",
    [
        (MC(2, 1), "{ Σ_{(s,t)>(0,0)} a_st z^s w^t : 2t >= 1s }"),
        (Summand.half_line("z"), "{ Σ_{s>0} a_s z^s }"),
        (MC(1, 0), "{ Σ_{(s,t)>(0,0)} a_st z^s w^t : 1t >= 0s }"),
        (Summand.half_line("1/z"), "{ Σ_{s>0} a_s z^-s }"),
    ],
)
def test_summand_text(summand, text):
    assert summand_text(summand) == text


def test_summand_dict_round_trip():
    for s in (MC(7, 5), Summand.half_line("1/z", "line factor -")):
        assert Summand.from_dict(s.to_dict()) == s


@given(random_fans)
def test_report_invariants(f):
    rep = cohomology_report(f)
    assert rep.h2_dim == 0
    assert (rep.h0_dim == 1) == (rep.fan_class.kind is FanKind.COMPLETE)
    if rep.fan_class.kind is FanKind.COMPLETE:
        assert rep.h1_summands == ()
    n_convex = sum(e.gap.angle_class is AngleClass.STRICTLY_CONVEX for e in rep.gaps)
    n_cones = sum(s.kind is SummandKind.MONOMIAL_CONE for s in rep.h1_summands)
    assert n_cones == n_convex


@given(random_fans, sl2_matrices)
def test_report_sl2_invariant(f, m):
    assert cohomology_report(apply_unimodular(f, m)).signature() == cohomology_report(f).signature()


@given(random_fans)
def test_refinement_independence(f):
    rep = cohomology_report(f)
    rebuilt = h1_from_completion(complete_fan(f))
    assert [s.key() for s in rebuilt] == [s.key() for s in rep.h1_summands]
