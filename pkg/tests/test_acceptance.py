"""End-to-end acceptance criteria, each checked at its stated time limit.

Run alone with ``pytest tests/test_acceptance.py -v -s``; a one-line
pass/fail summary per criterion is also printed at the end of the session.
"""

import random
import time

import pytest

from toricgens.cli import parse_args, run
from toricgens.complex import components, enumerate_pi, feasible_c_range, sweep_component_counts
from toricgens.ideal import generator_bidegrees, rank_oracle, render_binomial
from toricgens.multisets import m
from toricgens.values import ValueSet, gap_profile
from toricgens.walks import connect, criss_cross_state, expansion_step, verify_certificate

from conftest import criss_cross_pairs, random_expansion_input, random_value_sets

pytestmark = pytest.mark.acceptance

CORPUS_SEED = 2024


@pytest.fixture(scope="module")
def corpus():
    return random_value_sets(CORPUS_SEED, 200, 3, 7)


@pytest.fixture(scope="module", autouse=True)
def warm_jit():
    # the first call compiles (or loads) the numeric kernels; keep that out of the timings
    rank_oracle(ValueSet((0, 1, 3)), 3, 3)


def report(acceptance_line, number, title, ok, detail, elapsed, limit):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    acceptance_line(f"[{status}] criterion {number}: {title}: {detail} ({elapsed:.2f}s, limit {limit}s)")
    return status == "PASS"


def single_generator(values):
    vs = ValueSet(values)
    rep = generator_bidegrees(vs)
    return rep, [(e.q, e.c, e.count, render_binomial(e.binomials[0], vs)) for e in rep.entries]


def test_criterion_1_tight_examples(acceptance_line):
    t = time.perf_counter()
    rep1, got1 = single_generator((-2, 0, 3))
    rep2, got2 = single_generator((-3, 0, 4))
    bound_text, code = run(parse_args(["bound", "--a", "-2,0,3"]))
    elapsed = time.perf_counter() - t
    ok = (
        got1 == [(5, 0, 1, "z2^5 - z1^3*z3^2")]
        and rep1.bound == 5
        and (bound_text, code) == ("r=3 s=2 bound=5", 0)
        and got2 == [(7, 0, 1, "z2^7 - z1^4*z3^3")]
        and rep2.bound == 7
    )
    assert report(acceptance_line, 1, "tight examples", ok, f"{got1} {got2}", elapsed, 1)


def test_criterion_2_normalization(acceptance_line):
    t = time.perf_counter()
    raw, base = ValueSet((0, 2, 6)), ValueSet((0, 1, 3))
    rep, got = single_generator(raw.elements)
    same_counts = all(
        components(raw, q, 2 * c).k == components(base, q, c).k
        for q in range(0, 7)
        for c in range(feasible_c_range(base, q)[0] - 1, feasible_c_range(base, q)[1] + 2)
    )
    elapsed = time.perf_counter() - t
    ok = rep.bound == 3 and got == [(3, 6, 1, "z2^3 - z1^2*z3")] and same_counts
    detail = f"bound={rep.bound} entries={got} counts match={same_counts}"
    assert report(acceptance_line, 2, "gcd normalization", ok, detail, elapsed, 1)


def test_criterion_3_twisted_cubic(acceptance_line):
    t = time.perf_counter()
    vs = ValueSet((0, 1, 2, 3))
    rep = generator_bidegrees(vs)
    got = [(e.q, e.c, e.count) for e in rep.entries]
    oracle = [rank_oracle(vs, 2, c).min_gen_count for c in (2, 3, 4)]
    elapsed = time.perf_counter() - t
    ok = got == [(2, 2, 1), (2, 3, 1), (2, 4, 1)] and rep.total == 3 and oracle == [1, 1, 1]
    assert report(acceptance_line, 3, "twisted cubic", ok, f"entries={got}", elapsed, 1)


def test_criterion_4_main_theorem_sweep(acceptance_line, corpus):
    t = time.perf_counter()
    cells, bad = 0, []
    for vs in corpus:
        b = gap_profile(vs).bound
        for q in range(b + 1, b + 4):
            lo, hi = feasible_c_range(vs, q)
            counts = sweep_component_counts(vs, q)
            # every c in the feasible range, empty cells included (they have k = 0)
            for c in range(lo, hi + 1):
                cells += 1
                if counts.get(c, 0) > 1:
                    bad.append((vs.elements, q, c, counts[c]))
    elapsed = time.perf_counter() - t
    detail = f"{len(corpus)} value sets, {cells} cells, {len(bad)} counterexamples"
    assert report(acceptance_line, 4, "connectedness above r+s", not bad, detail, elapsed, 60), bad[:5]


def test_criterion_5_oracle_equivalence(acceptance_line, corpus):
    t = time.perf_counter()
    cells, bad = 0, []
    for vs in corpus:
        for q in range(2, gap_profile(vs).bound + 1):
            lo, hi = feasible_c_range(vs, q)
            counts = sweep_component_counts(vs, q)
            for c in range(lo, hi + 1):
                cells += 1
                k = counts.get(c, 0)
                if rank_oracle(vs, q, c).min_gen_count != max(k - 1, 0):
                    bad.append((vs.elements, q, c, k))
    elapsed = time.perf_counter() - t
    detail = f"{cells} cells, {len(bad)} mismatches"
    assert report(acceptance_line, 5, "component count vs rank oracle", not bad, detail, elapsed, 120), bad[:5]


def test_criterion_6_walk_certificates(acceptance_line):
    t = time.perf_counter()
    certs, bad = 0, []
    for vs in random_value_sets(CORPUS_SEED + 6, 50, 3, 6):
        b = gap_profile(vs).bound
        for q in (b + 1, b + 2):
            lo, hi = feasible_c_range(vs, q)
            for c in range(lo, hi + 1):
                fam = enumerate_pi(vs, q, c)
                verts = sorted({x for P in fam.members for x in P.items})
                for x in verts:
                    for y in verts:
                        certs += 1
                        try:
                            ok = verify_certificate(vs, connect(vs, q, c, x, y, family=fam))
                        except Exception as exc:  # recorded, reported below
                            ok = False
                            bad.append((vs.elements, q, c, x, y, repr(exc)))
                            continue
                        if not ok:
                            bad.append((vs.elements, q, c, x, y))
    elapsed = time.perf_counter() - t
    detail = f"{certs} certificates, {len(bad)} failures"
    assert report(acceptance_line, 6, "connect certificates", not bad, detail, elapsed, 120), bad[:5]


def test_criterion_7_expansion_properties(acceptance_line):
    rng = random.Random(CORPUS_SEED + 7)
    inputs = [random_expansion_input(rng) for _ in range(1000)]
    t = time.perf_counter()
    bad = []
    for vs, A, C in inputs:
        r = gap_profile(vs).r
        C_new, trace = expansion_step(vs, A, C)
        directions = {}
        one_way = all(
            directions.setdefault(min(j.value, j.landing), j.direction) == j.direction for j in trace.steps
        )
        if not (
            sum(C_new.items) == sum(C.items)
            and len(C_new) == len(C)
            and m(A + C_new) > m(A + C)
            and all(abs(s) <= r for s in trace.offsets)
            and one_way
        ):
            bad.append((vs.elements, A, C))
    elapsed = time.perf_counter() - t
    detail = f"{len(inputs)} inputs, {len(bad)} violations"
    assert report(acceptance_line, 7, "expansion step properties", not bad, detail, elapsed, 10), bad[:5]


def test_criterion_8_split_cardinality(acceptance_line):
    rng = random.Random(CORPUS_SEED + 8)
    pairs = criss_cross_pairs(rng, 1000, per_cell=10)
    t = time.perf_counter()
    bad = []
    for vs, P, Pp in pairs:
        st = criss_cross_state(P, Pp)
        if not (sum(st.B.items) > sum(st.B_prime.items) and len(st.Y) + len(st.Y_prime) > gap_profile(vs).bound):
            bad.append((vs.elements, P, Pp))
    elapsed = time.perf_counter() - t
    detail = f"{len(pairs)} pairs, {len(bad)} violations"
    assert report(acceptance_line, 8, "split cardinality", not bad, detail, elapsed, 10), bad[:5]
