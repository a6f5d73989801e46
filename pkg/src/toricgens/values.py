"""The exponent set V = {a_1 < ... < a_n} and its gap structure."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional

from .errors import ValidationError


@dataclass(frozen=True)
class ValueSet:
    """A strictly increasing tuple of at least two integers."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if len(elements) < 2:
            raise ValidationError(f"need at least 2 values, got {len(elements)}")
        for v in elements:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValidationError(f"values must be integers, got {v!r}")
        for a, b in zip(elements, elements[1:]):
            if a == b:
                raise ValidationError(f"duplicate value {a}")
            if a > b:
                raise ValidationError(f"values must be strictly increasing: {a} > {b}")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        i = bisect.bisect_left(self.elements, x)
        return i < len(self.elements) and self.elements[i] == x

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def index(self, x: int) -> int:
        """Zero-based position of ``x`` in V."""
        i = bisect.bisect_left(self.elements, x)
        if i == len(self.elements) or self.elements[i] != x:
            raise ValidationError(f"{x} is not an element of V={list(self.elements)}")
        return i

    def gaps(self) -> tuple[int, ...]:
        e = self.elements
        return tuple(b - a for a, b in zip(e, e[1:]))


@dataclass(frozen=True)
class GapProfile:
    gaps: tuple[int, ...]
    r: int
    s: int

    @property
    def bound(self) -> int:
        return self.r + self.s


def new_value_set(values: Iterable[int]) -> ValueSet:
    return ValueSet(tuple(values))


def gap_profile(V: ValueSet) -> GapProfile:
    """Successive gaps of V with the largest gap ``r`` and the runner-up ``s``.

    ``s`` is taken after removing a single copy of ``r``, so ``r == s``
    whenever the largest gap occurs twice.
    """
    gaps = V.gaps()
    if len(gaps) < 2:
        raise ValidationError("need at least two gaps (|V| >= 3)")
    top = sorted(gaps, reverse=True)
    return GapProfile(gaps=gaps, r=top[0], s=top[1])


def next_above(V: ValueSet, x: int) -> Optional[int]:
    """Least element of V strictly greater than ``x`` (``None`` at the top)."""
    i = V.index(x)
    return V.elements[i + 1] if i + 1 < len(V.elements) else None


def next_below(V: ValueSet, x: int) -> Optional[int]:
    """Greatest element of V strictly less than ``x`` (``None`` at the bottom)."""
    i = V.index(x)
    return V.elements[i - 1] if i > 0 else None


def reflect(V: ValueSet) -> ValueSet:
    return ValueSet(tuple(-v for v in reversed(V.elements)))


def normalize(V: ValueSet) -> tuple[ValueSet, int, int]:
    """Translate V to start at 0 and divide out the gcd of its gaps.

    Returns ``(W, scale, offset)`` with ``V == {scale*w + offset : w in W}``.
    """
    offset = V.min
    scale = reduce(gcd, V.gaps())
    W = ValueSet(tuple((v - offset) // scale for v in V.elements))
    return W, scale, offset
