from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgens.complex import (
    DisjointSet,
    component_count,
    components,
    enumerate_pi,
    feasible_c_range,
    is_connected,
    multiplicity_vectors,
    sweep_component_counts,
)
from toricgens.multisets import Multiset, negate
from toricgens.values import ValueSet, gap_profile, reflect

from conftest import value_sets


def V(*xs):
    return ValueSet(xs)


def brute_force_pi(vs, q, c):
    """Independent enumeration: filter all size-q multisets by their sum."""
    return sorted(Multiset(P) for P in combinations_with_replacement(vs.elements, q) if sum(P) == c)


def dp_count(vs, q, c):
    """Number of size-q multisets over vs with sum c, by dynamic programming."""
    table = {(0, 0): 1}
    for a in vs.elements:
        nxt = dict(table)
        for (k, t), n in table.items():
            for j in range(1, q - k + 1):
                key = (k + j, t + j * a)
                nxt[key] = nxt.get(key, 0) + n
        table = nxt
    return table.get((q, c), 0)


def brute_force_k(vs, q, c):
    """Components of the graph on Pi with edges between intersecting members."""
    members = brute_force_pi(vs, q, c)
    seen, k = set(), 0
    for i in range(len(members)):
        if i in seen:
            continue
        k += 1
        stack = [i]
        while stack:
            j = stack.pop()
            if j in seen:
                continue
            seen.add(j)
            stack.extend(
                t for t in range(len(members)) if t not in seen and set(members[j].items) & set(members[t].items)
            )
    return k


class TestEnumeratePi:
    def test_tight_example(self):
        fam = enumerate_pi(V(-2, 0, 3), 5, 0)
        assert fam.members == (Multiset((-2, -2, -2, 3, 3)), Multiset((0, 0, 0, 0, 0)))
        assert list(fam.members) == brute_force_pi(V(-2, 0, 3), 5, 0)

    def test_small(self):
        fam = enumerate_pi(V(0, 1, 3), 3, 3)
        assert fam.members == (Multiset((0, 0, 3)), Multiset((1, 1, 1)))
        assert list(fam.members) == brute_force_pi(V(0, 1, 3), 3, 3)

    def test_infeasible(self):
        assert enumerate_pi(V(0, 1, 3), 2, 5).members == ()
        assert brute_force_pi(V(0, 1, 3), 2, 5) == []

    def test_zero_cardinality(self):
        assert enumerate_pi(V(0, 1, 3), 0, 0).members == (Multiset(),)
        assert enumerate_pi(V(0, 1, 3), 0, 1).members == ()

    def test_negative_cardinality(self):
        with pytest.raises(ValueError):
            enumerate_pi(V(0, 1, 3), -1, 0)

    @settings(max_examples=60, deadline=None)
    @given(value_sets(min_size=2, max_size=5, lo=-6, hi=6), st.integers(0, 6), st.data())
    def test_matches_brute_force(self, vs, q, data):
        lo, hi = feasible_c_range(vs, q)
        c = data.draw(st.integers(lo - 2, hi + 2))
        members = enumerate_pi(vs, q, c).members
        assert list(members) == brute_force_pi(vs, q, c)
        assert len(members) == dp_count(vs, q, c)

    @settings(max_examples=40, deadline=None)
    @given(value_sets(min_size=2, max_size=6), st.integers(0, 9))
    def test_count_matches_dp_over_all_sums(self, vs, q):
        lo, hi = feasible_c_range(vs, q)
        for c in range(lo, hi + 1):
            assert len(multiplicity_vectors(vs.elements, q, c)) == dp_count(vs, q, c)

    @settings(max_examples=40, deadline=None)
    @given(value_sets(), st.integers(0, 7), st.data())
    def test_reflection_symmetry(self, vs, q, data):
        lo, hi = feasible_c_range(vs, q)
        c = data.draw(st.integers(lo, hi))
        mirrored = enumerate_pi(reflect(vs), q, -c).members
        assert sorted(negate(P) for P in mirrored) == list(enumerate_pi(vs, q, c).members)
        assert components(reflect(vs), q, -c).k == components(vs, q, c).k


class TestComponents:
    def test_tight_example_disconnected(self):
        cs = components(V(-2, 0, 3), 5, 0)
        assert cs.k == 2
        assert cs.components() == [[-2, 3], [0]]
        assert cs.member_component == (-2, 0)

    def test_connected_cell(self):
        cs = components(V(0, 1, 3), 4, 6)
        assert cs.k == 1
        assert cs.vertex_set == {0, 1, 3}

    def test_empty_cell(self):
        cs = components(V(0, 1, 3), 2, 5)
        assert cs.k == 0 and cs.vertex_set == frozenset()

    def test_is_connected(self):
        assert not is_connected(V(-2, 0, 3), 5, 0)
        assert is_connected(V(-2, 0, 3), 6, 0)
        assert is_connected(V(0, 1, 3), 2, 5)

    @settings(max_examples=60, deadline=None)
    @given(value_sets(max_size=4, lo=-5, hi=5), st.integers(1, 6), st.data())
    def test_matches_member_graph(self, vs, q, data):
        lo, hi = feasible_c_range(vs, q)
        c = data.draw(st.integers(lo, hi))
        assert components(vs, q, c).k == brute_force_k(vs, q, c) == component_count(vs, q, c)

    @settings(max_examples=40, deadline=None)
    @given(value_sets(), st.integers(1, 8), st.integers(1, 3), st.integers(-5, 5), st.data())
    def test_affine_equivariance(self, vs, q, g, beta, data):
        lo, hi = feasible_c_range(vs, q)
        c = data.draw(st.integers(lo, hi))
        image = ValueSet(tuple(g * v + beta for v in vs.elements))
        assert components(image, q, g * c + q * beta).k == components(vs, q, c).k

    @settings(max_examples=30, deadline=None)
    @given(value_sets(max_size=6), st.integers(0, 12))
    def test_sweep_agrees_with_components(self, vs, q):
        lo, hi = feasible_c_range(vs, q)
        expected = {c: components(vs, q, c).k for c in range(lo, hi + 1)}
        expected = {c: k for c, k in expected.items() if enumerate_pi(vs, q, c).members}
        assert sweep_component_counts(vs, q) == expected

    @settings(max_examples=30, deadline=None)
    @given(value_sets(max_size=5))
    def test_connected_above_bound(self, vs):
        b = gap_profile(vs).bound
        for q in range(b + 1, b + 4):
            lo, hi = feasible_c_range(vs, q)
            assert all(is_connected(vs, q, c) for c in range(lo, hi + 1))


def test_feasible_c_range():
    assert feasible_c_range(V(0, 1, 3), 3) == (0, 9)
    assert feasible_c_range(V(-2, 0, 3), 5) == (-10, 15)
    assert feasible_c_range(V(0, 1, 3), 0) == (0, 0)


def test_disjoint_set():
    ds = DisjointSet(range(5))
    assert ds.union(0, 1) and ds.union(3, 4)
    assert not ds.union(1, 0)
    assert sorted(sorted(g) for g in ds.groups()) == [[0, 1], [2], [3, 4]]
