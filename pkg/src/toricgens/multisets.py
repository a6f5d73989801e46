"""Integer multisets, their bidegrees, and the spread statistics m and m~.

A multiset is stored as a sorted tuple with repeats. Equal values are
interchangeable, so "the largest element" is well defined even when it
occurs several times.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ValidationError


class Bidegree(NamedTuple):
    q: int
    c: int


@dataclass(frozen=True, order=True)
class Multiset:
    items: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(sorted(self.items)))

    @classmethod
    def of(cls, *values: int) -> "Multiset":
        return cls(values)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __contains__(self, x) -> bool:
        return x in self.items

    def __add__(self, other: "Multiset") -> "Multiset":
        return add(self, other)

    def __sub__(self, other: "Multiset") -> "Multiset":
        return subtract(self, other)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.items)) + "}"

    @property
    def min(self) -> int:
        return self.items[0]

    @property
    def max(self) -> int:
        return self.items[-1]

    def count(self, x: int) -> int:
        return self.items.count(x)

    def replace(self, old: int, new: int) -> "Multiset":
        """Swap one copy of ``old`` for ``new``."""
        items = list(self.items)
        try:
            items.remove(old)
        except ValueError:
            raise ValidationError(f"{old} not in {self!r}") from None
        items.append(new)
        return Multiset(items)


def bidegree(P: Multiset) -> Bidegree:
    return Bidegree(len(P.items), sum(P.items))


def m(P: Multiset) -> int:
    """sum_i i * x_i over the sorted items, 1-based."""
    return sum(i * x for i, x in enumerate(P.items, start=1))


def m_tilde(D: Multiset) -> int:
    """sum_i (p + 1 - i) * x_i over the sorted items, p = |D|."""
    p = len(D.items)
    return sum((p + 1 - i) * x for i, x in enumerate(D.items, start=1))


def add(P: Multiset, Q: Multiset) -> Multiset:
    return Multiset(P.items + Q.items)


def subtract(P: Multiset, Q: Multiset) -> Multiset:
    have = Counter(P.items)
    have.subtract(Q.items)
    if any(v < 0 for v in have.values()):
        raise ValidationError(f"{Q!r} is not a sub-multiset of {P!r}")
    return Multiset(tuple(have.elements()))


def intersects(P: Multiset, Q: Multiset) -> bool:
    return not support(P).isdisjoint(Q.items)


def support(P: Multiset) -> frozenset[int]:
    return frozenset(P.items)


def negate(P: Multiset) -> Multiset:
    return Multiset(tuple(-x for x in P.items))


def multiplicities(P: Multiset, elements: Iterable[int]) -> tuple[int, ...]:
    """Multiplicity vector of P over ``elements`` (P's support must lie inside)."""
    elements = tuple(elements)
    counts = Counter(P.items)
    extra = set(counts) - set(elements)
    if extra:
        raise ValidationError(f"{sorted(extra)} outside {list(elements)}")
    return tuple(counts.get(v, 0) for v in elements)
