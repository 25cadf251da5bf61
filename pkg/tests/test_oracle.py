import pytest
from hypothesis import given

from toricoh.corpus import builtin_fan, corpus
from toricoh.completion import complete_fan
from toricoh.fan import is_complete
from toricoh.lattice import vec
from toricoh.oracle import (
    BudgetExhausted,
    SearchBudget,
    check_complete_cover,
    count_lattice_slice,
    normal_form_search,
    slice_table,
)

from conftest import random_fans


@pytest.mark.parametrize("p, q, d, n", [(1, 0, 3, 4), (2, 1, 3, 3), (5, 3, 0, 0)])
def test_count_lattice_slice(p, q, d, n):
    assert count_lattice_slice(p, q, d) == n


def test_slice_table_matches_scalar():
    table = slice_table(7, 3, 40)
    assert list(table) == [count_lattice_slice(7, 3, d) for d in range(41)]


@pytest.mark.parametrize("v, w, pq", [((1, 0), (0, 1), (1, 0)), ((1, 0), (1, 2), (2, 1)), ((1, 1), (-1, 1), (2, 1))])
def test_normal_form_search(v, w, pq):
    assert normal_form_search(vec(*v), vec(*w)) == pq


def test_budget_exhaustion_is_reported():
    with pytest.raises(BudgetExhausted):
        normal_form_search(vec(5, 7), vec(-2, -1), SearchBudget(max_entry=1))


def test_complete_cover_examples():
    assert check_complete_cover(builtin_fan("p2"))
    assert not check_complete_cover(builtin_fan("c2"))
    assert check_complete_cover(complete_fan(builtin_fan("c2")).completed_fan)
    for f in corpus():
        assert check_complete_cover(f) == is_complete(f)


@given(random_fans)
def test_complete_cover_agrees(f):
    assert check_complete_cover(f) == is_complete(f)
