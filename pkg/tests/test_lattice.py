import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from toricoh.lattice import (
    IntegerOverflow,
    Ordering,
    ZeroVector,
    angular_compare,
    ccw_between,
    det2,
    primitive,
    vec,
)

from conftest import primitive_vectors


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 0), (0, 1), 1), ((1, 1), (-1, 1), 2), ((2, 3), (4, 6), 0)],
)
def test_det2_examples(a, b, expected):
    assert det2(vec(*a), vec(*b)) == expected


def test_det2_overflow_is_loud():
    with pytest.raises(IntegerOverflow):
        det2(vec(2**62, 0), vec(0, 4))
    with pytest.raises(OverflowError):
        vec(2**63, 1)


@pytest.mark.parametrize("v, expected", [((4, 6), (2, 3)), ((0, -5), (0, -1)), ((3, 7), (3, 7))])
def test_primitive_examples(v, expected):
    assert primitive(vec(*v)) == vec(*expected)


def test_primitive_zero():
    with pytest.raises(ZeroVector):
        primitive(vec(0, 0))


def test_angular_compare_examples():
    assert angular_compare(vec(1, 0), vec(0, 1)) is Ordering.LESS
    assert angular_compare(vec(-1, 1), vec(1, 1)) is Ordering.GREATER
    assert angular_compare(vec(0, -1), vec(0, -1)) is Ordering.EQUAL
    with pytest.raises(ZeroVector):
        angular_compare(vec(0, 0), vec(1, 0))


def test_ccw_between_examples():
    assert ccw_between(vec(1, 0), vec(0, 1), vec(1, 1))
    assert not ccw_between(vec(1, 0), vec(0, 1), vec(1, 0))
    assert ccw_between(vec(0, 1), vec(1, 0), vec(-1, -1))


def test_angular_order_matches_enumeration_of_directions():
    # directions listed by hand in ccw order from the positive x-axis
    ring = [(1, 0), (2, 1), (1, 1), (1, 2), (0, 1), (-1, 2), (-1, 1), (-1, 0),
            (-1, -1), (0, -1), (1, -2), (1, -1)]
    vs = [vec(*r) for r in ring]
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            assert angular_compare(a, b) == (i > j) - (i < j)


@given(primitive_vectors, primitive_vectors)
def test_det2_antisymmetric(a, b):
    assert det2(a, b) == -det2(b, a)


@given(primitive_vectors, primitive_vectors, primitive_vectors)
def test_angular_compare_is_transitive(a, b, c):
    if angular_compare(a, b) <= 0 and angular_compare(b, c) <= 0:
        assert angular_compare(a, c) <= 0
    assert angular_compare(a, b) == -angular_compare(b, a)
    assert (angular_compare(a, b) == 0) == (a == b)


@given(primitive_vectors, primitive_vectors, primitive_vectors)
def test_ccw_arcs_partition_circle(a, b, x):
    assume(a != b and x not in (a, b))
    assert ccw_between(a, b, x) != ccw_between(b, a, x)


@given(primitive_vectors, st.integers(1, 50))
def test_primitive_of_multiple(v, k):
    assert primitive(v.scaled(k)) == primitive(v) == v
