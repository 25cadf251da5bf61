from math import gcd

import numpy as np
import pytest
from hypothesis import strategies as st

from toricoh.corpus import corpus, random_sl2, random_smooth_fan
from toricoh.lattice import vec

coord = st.integers(-20, 20)

primitive_vectors = st.tuples(coord, coord).filter(lambda t: gcd(*t) == 1).map(lambda t: vec(*t))


@st.composite
def convex_pairs(draw, bound=20):
    c = st.integers(-bound, bound)
    v = draw(st.tuples(c, c).filter(lambda t: gcd(*t) == 1))
    w = draw(
        st.tuples(c, c).filter(lambda t: gcd(*t) == 1 and v[0] * t[1] - v[1] * t[0] > 0)
    )
    return vec(*v), vec(*w)


random_fans = st.integers(0, 2**32 - 1).map(lambda s: random_smooth_fan(np.random.default_rng(s)))

sl2_matrices = st.integers(0, 2**32 - 1).map(lambda s: random_sl2(np.random.default_rng(s), 10))


@pytest.fixture(scope="session")
def builtin_corpus():
    return corpus()


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
