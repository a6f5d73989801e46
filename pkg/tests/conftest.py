import random

import pytest
from hypothesis import strategies as st

from toricgens.values import ValueSet

_ACCEPTANCE_LINES = []


def random_value_sets(seed, count, n_min, n_max, lo=-15, hi=15):
    """``count`` value sets with n_min <= |V| <= n_max drawn uniformly from [lo, hi]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(ValueSet(tuple(sorted(rng.sample(range(lo, hi + 1), n)))))
    return out


@st.composite
def value_sets(draw, min_size=3, max_size=5, lo=-10, hi=10):
    values = draw(st.lists(st.integers(lo, hi), min_size=min_size, max_size=max_size, unique=True))
    return ValueSet(tuple(sorted(values)))


@pytest.fixture
def acceptance_line():
    def record(line):
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_expansion_input(rng, n_min=3, n_max=7, lo=-15, hi=15):
    """A valid (V, A, C) for expansion_step: |C| = r+s, C avoids the extremes of V."""
    from toricgens.multisets import Multiset
    from toricgens.values import gap_profile

    n = rng.randint(n_min, n_max)
    V = ValueSet(tuple(sorted(rng.sample(range(lo, hi + 1), n))))
    width = gap_profile(V).bound
    inner = V.elements[1:-1]
    C = Multiset(tuple(rng.choice(inner) for _ in range(width)))
    A = Multiset(tuple(rng.choice(V.elements) for _ in range(rng.randint(0, 3))))
    return V, A, C


def criss_cross_pairs(rng, count, n_min=3, n_max=6, lo=-15, hi=15, extra=2, per_cell=1):
    """``count`` disjoint (V, P, P') with min(P+P') only in P and max(P+P') only in P'."""
    from toricgens.complex import enumerate_pi, feasible_c_range
    from toricgens.values import gap_profile

    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        V = ValueSet(tuple(sorted(rng.sample(range(lo, hi + 1), n))))
        q = gap_profile(V).bound + rng.randint(1, extra)
        c_lo, c_hi = feasible_c_range(V, q)
        members = enumerate_pi(V, q, rng.randint(c_lo, c_hi)).members
        eligible = [
            (P, Q)
            for P in members
            for Q in members
            if P.min < Q.min and Q.max > P.max and not set(P.items) & set(Q.items)
        ]
        for P, Q in rng.sample(eligible, min(per_cell, len(eligible))):
            out.append((V, P, Q))
    return out[:count]
