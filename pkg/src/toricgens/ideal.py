"""Minimal generators of the toric ideal of the 2 x n matrix [[1..1], [a_1..a_n]].

Variable z_j has bidegree (1, a_j). In bidegree (q, c) the ideal is spanned
by differences z^P - z^P' of members of Pi_(q,c); the part coming from lower
degrees is spanned by the differences of intersecting pairs. So the number of
minimal generators in that bidegree is (number of components of Delta) - 1,
which ``rank_oracle`` re-derives by exact elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .complex import (
    components,
    enumerate_pi,
    multiplicity_vectors,
    sweep_component_counts,
)
from .errors import InvariantViolation, ValidationError
from .multisets import Bidegree, Multiset, bidegree, multiplicities
from .values import ValueSet, gap_profile, normalize


@dataclass(frozen=True)
class Binomial:
    """z^plus - z^minus, both sides of one bidegree."""

    plus: Multiset
    minus: Multiset

    def __post_init__(self):
        if bidegree(self.plus) != bidegree(self.minus):
            raise ValidationError(
                f"sides have different bidegrees: {bidegree(self.plus)} vs {bidegree(self.minus)}"
            )
        if self.plus == self.minus:
            raise ValidationError("a binomial needs two distinct monomials")

    @property
    def bidegree(self) -> Bidegree:
        return bidegree(self.plus)


@dataclass(frozen=True)
class GeneratorEntry:
    q: int
    c: int
    k: int
    binomials: tuple[Binomial, ...]

    @property
    def count(self) -> int:
        return self.k - 1


@dataclass(frozen=True)
class GeneratorReport:
    V: ValueSet
    bound: int
    entries: tuple[GeneratorEntry, ...]
    oracle_checked: bool = False
    zero_ideal: bool = False

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries)


@dataclass(frozen=True)
class RankResult:
    dim_I: int
    dim_I_less: int

    @property
    def min_gen_count(self) -> int:
        return self.dim_I - self.dim_I_less


@dataclass(frozen=True)
class VerificationSummary:
    passed: bool
    bound: int
    extra: int
    cells_checked: int
    counterexample: Optional[tuple[int, int, int]] = None


def _python_rank(rows) -> int:
    """Rank over Q of an integer matrix given as sparse rows {column: value}.

    Fraction-free: a row is reduced against the pivot row sharing its last
    non-zero column by cross-multiplying with the cofactors of their gcd,
    then divided by its content, so entries stay integral and small.
    """
    pivots = {}
    for row in rows:
        row = {j: v for j, v in row.items() if v}
        while row:
            lead = max(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break
            a, b = row[lead], pivot[lead]
            if a == b:
                ra = pb = 1
            else:
                g = gcd(a, b)
                ra, pb = b // g, a // g
            new = {j: v * ra for j, v in row.items()} if ra != 1 else dict(row)
            for j, v in pivot.items():
                w = new.get(j, 0) - v * pb
                if w:
                    new[j] = w
                else:
                    del new[j]
            row = new
            content = 0
            for v in row.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                row = {j: v // content for j, v in row.items()}
    return len(pivots)


def integer_rank(rows, backend: str = "auto") -> int:
    """Rank over Q of an integer matrix given as sparse rows {column: value}.

    ``backend="auto"`` uses the compiled int64 kernel and falls back to
    Python integers if an entry could overflow; ``"python"`` forces the
    latter.
    """
    rows = [dict(r) for r in rows]
    if backend == "auto":
        import numpy as np

        from . import _jit

        ncols = 1 + max((j for r in rows for j in r), default=-1)
        if all(abs(v) < _jit._ENTRY_LIMIT and j >= 0 for r in rows for j, v in r.items()):
            indptr = np.zeros(len(rows) + 1, np.int64)
            np.cumsum([len(r) for r in rows], out=indptr[1:])
            ordered = [sorted(r.items()) for r in rows]
            indices = np.fromiter((j for r in ordered for j, _ in r), np.int64, int(indptr[-1]))
            data = np.fromiter((v for r in ordered for _, v in r), np.int64, int(indptr[-1]))
            rank = _jit.rank_csr(indptr, indices, data, ncols)
            if rank >= 0:
                return int(rank)
    elif backend != "python":
        raise ValidationError(f"unknown backend {backend!r}")
    return _python_rank(rows)


def degree_bound(V: ValueSet) -> int:
    """r + s of the gcd-normalized V; 0 when |V| = 2 (the ideal is zero)."""
    if len(V) == 2:
        return 0
    return gap_profile(normalize(V)[0]).bound


def _cell_entry(V: ValueSet, q: int, c: int) -> Optional[GeneratorEntry]:
    family = enumerate_pi(V, q, c)
    structure = components(V, q, c, family=family)
    if structure.k < 2:
        return None
    firsts = {}
    for P, cid in zip(family.members, structure.member_component):
        firsts.setdefault(cid, P)
    reps = list(firsts.values())  # ordered by first appearance
    base = reps[0]
    return GeneratorEntry(q, c, structure.k, tuple(Binomial(plus=R, minus=base) for R in reps[1:]))


def generator_bidegrees(V: ValueSet, check_with_oracle: bool = False) -> GeneratorReport:
    """Every bidegree (q, c) of V carrying minimal generators, with representatives.

    Degrees 2..bound are scanned, where bound is r+s of the normalized V;
    bidegrees are reported in V's own coordinates. With
    ``check_with_oracle`` every non-empty cell is re-counted by
    ``rank_oracle`` and a disagreement raises InvariantViolation.
    """
    if len(V) == 2:
        return GeneratorReport(V=V, bound=0, entries=(), zero_ideal=True)
    bound = degree_bound(V)
    entries = []
    for q in range(2, bound + 1):
        counts = sweep_component_counts(V, q)
        for c, k in counts.items():
            if check_with_oracle:
                oracle = rank_oracle(V, q, c).min_gen_count
                if oracle != max(k - 1, 0):
                    raise InvariantViolation(
                        f"components give {k - 1} generators at ({q},{c}), oracle gives {oracle}"
                    )
            if k >= 2:
                entries.append(_cell_entry(V, q, c))
    return GeneratorReport(V=V, bound=bound, entries=tuple(entries), oracle_checked=check_with_oracle)


def rank_oracle(V: ValueSet, q: int, c: int, backend: str = "auto") -> RankResult:
    """Exact dimensions of I_(q,c) and of its part generated in lower degree.

    Coordinates are indexed by Pi_(q,c). A family of differences spans the
    same space as the differences from one fixed member to the others, so
    the full piece uses one star over Pi and the lower-degree piece uses one
    star per vertex (the members through a common vertex pairwise meet).
    Both ranks come from fraction-free elimination; see ``integer_rank``.
    """
    if q < 0:
        raise ValidationError(f"cardinality must be non-negative, got {q}")
    els = V.elements
    if backend == "auto" and q * max(abs(els[0]), abs(els[-1])) < 1 << 62:
        import numpy as np

        from . import _jit

        _, dim_all, dim_meet = _jit.oracle_cell(np.array(els, np.int64), q, c)
        if dim_all >= 0 and dim_meet >= 0:
            return RankResult(int(dim_all), int(dim_meet))
    elif backend not in ("auto", "python"):
        raise ValidationError(f"unknown backend {backend!r}")
    through = {}
    size = 0
    for i, vec in enumerate(multiplicity_vectors(els, q, c)):
        size += 1
        for v, k in enumerate(vec):
            if k:
                through.setdefault(v, []).append(i)
    if not size:
        return RankResult(0, 0)
    all_rows = [{0: 1, i: -1} for i in range(1, size)]
    meet_rows = [{idx[0]: 1, j: -1} for idx in through.values() for j in idx[1:]]
    return RankResult(_python_rank(all_rows), _python_rank(meet_rows))


def verify_main_theorem(V: ValueSet, extra: int = 2) -> VerificationSummary:
    """Check connectivity of every Delta_(q,c) for bound < q <= bound + extra.

    ``bound`` is the degree bound of the normalized V. A failure is returned
    as data with the first counterexample (q, c, k); it would mean a bug.
    """
    if len(V) < 3:
        raise ValidationError("need |V| >= 3")
    if extra < 0:
        raise ValidationError("extra must be non-negative")
    bound = degree_bound(V)
    cells = 0
    for q in range(bound + 1, bound + extra + 1):
        for c, k in sweep_component_counts(V, q).items():
            cells += 1
            if k > 1:
                return VerificationSummary(False, bound, extra, cells, (q, c, k))
    report = generator_bidegrees(V)
    for e in report.entries:
        if e.q > bound:
            return VerificationSummary(False, bound, extra, cells, (e.q, e.c, e.k))
    return VerificationSummary(True, bound, extra, cells)


def _monomial(P: Multiset, V: ValueSet) -> str:
    exps = multiplicities(P, V.elements)
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"z{i}")
        elif e > 1:
            parts.append(f"z{i}^{e}")
    return "*".join(parts) or "1"


def render_binomial(b: Binomial, V: ValueSet) -> str:
    """Text form such as ``z2^5 - z1^3*z3^2``; z_i is the i-th element of V."""
    return f"{_monomial(b.plus, V)} - {_monomial(b.minus, V)}"

