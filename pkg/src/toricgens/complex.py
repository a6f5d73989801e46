"""Enumeration of Pi_(q,c) and connectivity of the complex Delta_(q,c).

Pi_(q,c) holds every multiset of cardinality q and sum c with support in V;
Delta_(q,c) is the simplicial complex generated by the supports of those
multisets. Its connectivity only depends on which vertex sets occur as
supports, so components are computed with a disjoint-set forest over V
instead of building the complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from .errors import ValidationError
from .multisets import Bidegree, Multiset
from .values import ValueSet


class DisjointSet:
    """Union-find over hashable keys with path halving and union by size."""

    def __init__(self, keys=()):
        self.parent = {}
        self.size = {}
        for k in keys:
            self.add(k)

    def add(self, key):
        if key not in self.parent:
            self.parent[key] = key
            self.size[key] = 1

    def find(self, key):
        parent = self.parent
        while parent[key] != key:
            parent[key] = parent[parent[key]]
            key = parent[key]
        return key

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self) -> list[list]:
        out = {}
        for k in self.parent:
            out.setdefault(self.find(k), []).append(k)
        return list(out.values())


@dataclass(frozen=True)
class PiFamily:
    V: ValueSet
    bidegree: Bidegree
    members: tuple[Multiset, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def containing(self, x: int) -> list[Multiset]:
        return [P for P in self.members if x in P]


@dataclass(frozen=True)
class ComponentStructure:
    vertex_set: frozenset[int]
    component_of: dict[int, int]
    k: int
    member_component: tuple[int, ...]

    def components(self) -> list[list[int]]:
        """Vertex lists of each component, ordered by component id."""
        out = {}
        for v in sorted(self.vertex_set):
            out.setdefault(self.component_of[v], []).append(v)
        return [out[cid] for cid in sorted(out)]


@lru_cache(maxsize=256)
def _suffix_reach(shifted: tuple[int, ...], q: int) -> tuple[tuple[int, ...], ...]:
    """reach[i][k]: bitset of sums of k values drawn from shifted[i:]."""
    n = len(shifted)
    reach = [None] * n
    u = shifted[-1]
    reach[n - 1] = tuple(1 << (k * u) for k in range(q + 1))
    for i in range(n - 2, -1, -1):
        u = shifted[i]
        below = reach[i + 1]
        row = []
        for k in range(q + 1):
            bits = 0
            for j in range(k + 1):
                bits |= below[k - j] << (j * u)
            row.append(bits)
        reach[i] = tuple(row)
    return tuple(reach)


def multiplicity_vectors(elements: tuple[int, ...], q: int, c: int) -> list[tuple[int, ...]]:
    """Every (x_1..x_n) >= 0 with sum x_i = q and sum x_i*a_i = c.

    Vectors come out in decreasing lexicographic order, which is the same
    as increasing lexicographic order of the sorted multisets they encode.
    Only branches that can still be completed are entered.
    """
    if q < 0:
        raise ValidationError(f"cardinality must be non-negative, got {q}")
    n = len(elements)
    base = elements[0]
    t0 = c - q * base
    out = []
    if t0 < 0 or t0 > q * (elements[-1] - base):
        return out
    shifted = tuple(a - base for a in elements)
    reach = _suffix_reach(shifted, q)
    if not reach[0][q] >> t0 & 1:
        return out
    vec = [0] * n
    last = n - 1

    def rec(i, k, t):
        if i == last:
            vec[i] = k
            out.append(tuple(vec))
            return
        u = shifted[i]
        below = reach[i + 1]
        for j in range(k, -1, -1):
            rest = t - j * u
            if rest >= 0 and below[k - j] >> rest & 1:
                vec[i] = j
                rec(i + 1, k - j, rest)
        vec[i] = 0

    rec(0, q, t0)
    return out


def _from_vector(elements, vec) -> Multiset:
    items = []
    for a, k in zip(elements, vec):
        items.extend([a] * k)
    return Multiset(tuple(items))


def enumerate_pi(V: ValueSet, q: int, c: int) -> PiFamily:
    members = tuple(_from_vector(V.elements, vec) for vec in multiplicity_vectors(V.elements, q, c))
    return PiFamily(V=V, bidegree=Bidegree(q, c), members=members)


def _support_components(elements, supports):
    """Union vertices per support; return (vertex->component id, component count)."""
    dsu = DisjointSet()
    for supp in supports:
        if not supp:
            continue
        first = supp[0]
        dsu.add(first)
        for v in supp[1:]:
            dsu.add(v)
            dsu.union(first, v)
    component_of = {}
    for group in dsu.groups():
        cid = min(group)
        for v in group:
            component_of[v] = cid
    return component_of, len(set(component_of.values()))


def components(V: ValueSet, q: int, c: int, family: PiFamily | None = None) -> ComponentStructure:
    """Components of Delta_(q,c); each component is identified by its least vertex."""
    if family is None:
        family = enumerate_pi(V, q, c)
    supports = [tuple(sorted(set(P.items))) for P in family.members]
    component_of, k = _support_components(V.elements, supports)
    return ComponentStructure(
        vertex_set=frozenset(component_of),
        component_of=component_of,
        k=k,
        member_component=tuple(component_of[s[0]] if s else None for s in supports),
    )


def component_count(V: ValueSet, q: int, c: int) -> int:
    """Number of components of Delta_(q,c), without materialising multisets."""
    els = V.elements
    seen = set()
    for vec in multiplicity_vectors(els, q, c):
        seen.add(tuple(a for a, k in zip(els, vec) if k))
    return _support_components(els, seen)[1]


def is_connected(V: ValueSet, q: int, c: int) -> bool:
    return component_count(V, q, c) <= 1


def _count_mask_components(masks) -> int:
    comps = []
    for mask in masks:
        merged = mask
        keep = []
        for comp in comps:
            if comp & merged:
                merged |= comp
            else:
                keep.append(comp)
        keep.append(merged)
        comps = keep
    return len(comps)


def sweep_component_counts(V: ValueSet, q: int) -> dict[int, int]:
    """Component count of Delta_(q,c) for every c with Pi_(q,c) non-empty.

    Works on supports directly: for each vertex subset S the sums reachable
    by a multiset of size q with support exactly S are kept as a bitset, so
    no individual multiset is ever built. Intended for large sweeps; agrees
    with ``components`` cell by cell.
    """
    if q < 0:
        raise ValidationError(f"cardinality must be non-negative, got {q}")
    if q == 0:
        return {0: 0}
    base = V.min
    shifted = [v - base for v in V.elements]
    n = len(shifted)
    by_sum = {}
    for mask in range(1, 1 << n):
        us = [shifted[i] for i in range(n) if mask >> i & 1]
        if len(us) > q:
            continue
        reach = 1
        for _ in range(q - len(us)):
            nxt = 0
            for u in us:
                nxt |= reach << u
            reach = nxt
        reach <<= sum(us)
        while reach:
            low = reach & -reach
            t = low.bit_length() - 1
            by_sum.setdefault(t, []).append(mask)
            reach ^= low
    return {t + q * base: _count_mask_components(masks) for t, masks in sorted(by_sum.items())}


def feasible_c_range(V: ValueSet, q: int) -> tuple[int, int]:
    if q < 0:
        raise ValidationError(f"cardinality must be non-negative, got {q}")
    return q * V.min, q * V.max
