"""Constructive connectivity: expansion moves, criss-cross moves, certificates.

Picture the elements of a multiset as stones on the number line that may
only sit on elements of V. Every move below jumps a stone to the adjacent
element of V. A run of jumps is stopped as soon as the running change of
the sum repeats a value; replaying only the jumps between the two equal
offsets gives a new multiset with the same sum and cardinality.

The public entry point is ``connect``, which returns a ``WalkCertificate``
that ``verify_certificate`` can check without trusting any of this code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complex import PiFamily, enumerate_pi
from .errors import InvariantViolation, ValidationError
from .multisets import Bidegree, Multiset, bidegree, intersects, m, m_tilde, negate
from .values import ValueSet, gap_profile, next_above, next_below, reflect

UP = 1
DOWN = -1


@dataclass(frozen=True)
class Jump:
    value: int
    direction: int
    landing: int
    offset: int


@dataclass(frozen=True)
class ExpansionTrace:
    steps: tuple[Jump, ...]
    offsets: tuple[int, ...]
    repeat: tuple[int, int]
    intermediates: tuple[Multiset, ...]

    def replayed(self) -> tuple[Jump, ...]:
        j, l = self.repeat
        return self.steps[j:l]


@dataclass(frozen=True)
class CrissCrossState:
    B: Multiset
    B_prime: Multiset
    X: Multiset
    Y: Multiset
    X_prime: Multiset
    Y_prime: Multiset
    f: int
    f_prime: int


@dataclass(frozen=True)
class MeetingWalk:
    """Output of ``multiple_expansion`` and ``criss_cross``.

    ``chain`` runs from ``chain[0]`` to ``meet`` and every member contains
    ``anchor``. ``chain[0]`` is the first input unless ``reflected`` is set,
    in which case the walk was built from the second input.
    ``progress`` holds m(P_i) for expansions and m~(Y) per round for
    criss-cross.
    """

    meet: Multiset
    chain: tuple[Multiset, ...]
    anchor: int
    reflected: bool = False
    progress: tuple[int, ...] = ()
    rounds: tuple[ExpansionTrace, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class WalkCertificate:
    chain: tuple[Multiset, ...]
    x: int
    y: int
    bidegree: Bidegree


class _OutOfStones(Exception):
    """A criss-cross pass needed a stone that was not available."""


def _run_until_repeat(V: ValueSet, start: Multiset, pick, limit: Optional[int]) -> ExpansionTrace:
    """Jump stones chosen by ``pick(offset)`` until an offset repeats."""
    current = start
    base = sum(start.items)
    offsets = [0]
    seen = {0: 0}
    steps = []
    states = [start]
    i = 0
    while True:
        i += 1
        if limit is not None and i > limit:
            raise InvariantViolation(
                f"no repeated offset within {limit} jumps", trace=(tuple(steps), tuple(offsets))
            )
        x, direction = pick(offsets[-1])
        y = next_above(V, x) if direction == UP else next_below(V, x)
        if y is None:
            raise _OutOfStones(f"cannot jump {x} {'up' if direction == UP else 'down'}")
        current = current.replace(x, y)
        s = sum(current.items) - base
        steps.append(Jump(x, direction, y, s))
        offsets.append(s)
        states.append(current)
        if s in seen:
            return ExpansionTrace(tuple(steps), tuple(offsets), (seen[s], i), tuple(states))
        seen[s] = i


def _replay(start: Multiset, jumps) -> Multiset:
    out = start
    for jump in jumps:
        out = out.replace(jump.value, jump.landing)
    return out


def _check_in_v(V: ValueSet, P: Multiset, name: str):
    bad = sorted({x for x in P.items if x not in V})
    if bad:
        raise ValidationError(f"{name} has elements {bad} outside V")


def expansion_step(V: ValueSet, A: Multiset, C: Multiset) -> tuple[Multiset, ExpansionTrace]:
    """Replace C by an equal-sum C' of the same size with m(A+C') > m(A+C).

    While the running offset is <= 0 the largest unmoved stone jumps up,
    otherwise the smallest unmoved stone jumps down. The run stops at the
    first repeated offset s_j == s_l, and C' is C with jumps j+1..l applied.
    """
    profile = gap_profile(V)
    width = profile.r + profile.s
    _check_in_v(V, A, "A")
    _check_in_v(V, C, "C")
    if len(C) != width:
        raise ValidationError(f"|C| must be r+s={width}, got {len(C)}")
    if V.min in C or V.max in C:
        raise ValidationError("C must not contain the least or greatest element of V")

    active = list(C.items)

    def pick(offset):
        if offset <= 0:
            return active.pop(), UP
        return active.pop(0), DOWN

    try:
        trace = _run_until_repeat(V, C, pick, limit=width)
    except (_OutOfStones, IndexError) as exc:
        raise InvariantViolation(f"expansion ran out of moves: {exc}") from exc
    C_new = _replay(C, trace.replayed())
    if sum(C_new.items) != sum(C.items) or m(A + C_new) <= m(A + C):
        raise InvariantViolation("expansion did not spread the multiset", trace=trace)
    return C_new, trace


def _check_pair(V: ValueSet, P: Multiset, P_prime: Multiset) -> int:
    """Validate a pair of members of one Pi_(q,c); return r+s."""
    profile = gap_profile(V)
    _check_in_v(V, P, "P")
    _check_in_v(V, P_prime, "P'")
    if bidegree(P) != bidegree(P_prime):
        raise ValidationError(f"bidegrees differ: {bidegree(P)} vs {bidegree(P_prime)}")
    if len(P) <= profile.bound:
        raise ValidationError(f"need q > r+s={profile.bound}, got q={len(P)}")
    return profile.bound


def _spread_cap(V: ValueSet, q: int) -> int:
    # m ranges over an interval of this length on multisets of size q in V
    return q * (q + 1) // 2 * (V.max - V.min) + 1


def multiple_expansion(V: ValueSet, P: Multiset, P_prime: Multiset, anchor: int) -> MeetingWalk:
    """Expand P with a fixed core A until it meets P'.

    Requires both extremes of P+P' to occur in P'. A holds ``anchor`` plus
    the largest remaining elements of P, so every chain member contains A.
    """
    width = _check_pair(V, P, P_prime)
    if anchor not in P:
        raise ValidationError(f"anchor {anchor} is not in P")
    if intersects(P, P_prime):
        return MeetingWalk(meet=P, chain=(P,), anchor=anchor, progress=(m(P),))
    if not (P_prime.max > P.max and P_prime.min < P.min):
        raise ValidationError("the largest and smallest elements of P+P' must occur in P'")

    rest = (P - Multiset.of(anchor)).items
    keep = len(P) - width - 1
    A = Multiset((anchor,) + (rest[len(rest) - keep:] if keep else ()))
    current = P
    chain = [P]
    progress = [m(P)]
    traces = []
    cap = _spread_cap(V, len(P))
    while not intersects(current, P_prime):
        if len(chain) > cap:
            raise InvariantViolation("multiple expansion exceeded its iteration cap", trace=tuple(chain))
        C_new, trace = expansion_step(V, A, current - A)
        current = A + C_new
        chain.append(current)
        progress.append(m(current))
        traces.append(trace)
    return MeetingWalk(
        meet=current, chain=tuple(chain), anchor=anchor, progress=tuple(progress), rounds=tuple(traces)
    )


def split_for_size_lemma(B: Multiset, B_prime: Multiset) -> tuple[Multiset, Multiset, Multiset, Multiset]:
    """Return (X, Y, X', Y').

    X is the part of B below every element of B', X' the part of B' above
    every element of B; Y and Y' are the remainders.
    """
    if not B.items or not B_prime.items:
        raise ValidationError("B and B' must be non-empty")
    lo, hi = B_prime.min, B.max
    X = Multiset(tuple(b for b in B.items if b < lo))
    Y = Multiset(tuple(b for b in B.items if b >= lo))
    X_prime = Multiset(tuple(b for b in B_prime.items if b > hi))
    Y_prime = Multiset(tuple(b for b in B_prime.items if b <= hi))
    return X, Y, X_prime, Y_prime


def criss_cross_state(P: Multiset, P_prime: Multiset) -> CrissCrossState:
    """Anchors f = min(P), f' = max(P') and the four-way split of the rest."""
    f, f_prime = P.min, P_prime.max
    B = P - Multiset.of(f)
    B_prime = P_prime - Multiset.of(f_prime)
    X, Y, X_prime, Y_prime = split_for_size_lemma(B, B_prime)
    return CrissCrossState(B, B_prime, X, Y, X_prime, Y_prime, f, f_prime)


def _criss_cross_side(V: ValueSet, P: Multiset, P_prime: Multiset) -> MeetingWalk:
    """Run the Y-side passes; raise _OutOfStones if this side is not viable."""
    state = criss_cross_state(P, P_prime)
    f = state.f
    floor = state.B_prime.min
    B = state.B
    chain = [P]
    history = []
    traces = []
    cap = None
    while not intersects(chain[-1], P_prime):
        X = [b for b in B.items if b < floor]
        Y = Multiset(tuple(b for b in B.items if b >= floor))
        mt = m_tilde(Y)
        if history and mt >= history[-1]:
            raise InvariantViolation(
                f"m~(Y) did not decrease: {history[-1]} -> {mt}", trace=tuple(chain)
            )
        history.append(mt)
        if cap is None:
            # Y never drops below min(B') before meeting it, so m~(Y) is bounded below
            p = len(Y)
            cap = mt - p * (p + 1) // 2 * floor + 1
        if len(history) > cap:
            raise InvariantViolation("criss-cross exceeded its round cap", trace=tuple(chain))
        active_x = list(X)
        active_y = list(Y.items)

        def pick(offset):
            if offset <= 0:
                if active_x:
                    return active_x.pop(), UP
                if active_y:
                    return active_y.pop(), UP
                raise _OutOfStones("no unmoved stones left to raise")
            if not active_y:
                raise _OutOfStones("no unmoved stone of Y left to lower")
            return active_y.pop(0), DOWN

        trace = _run_until_repeat(V, B, pick, limit=None)
        B = _replay(B, trace.replayed())
        traces.append(trace)
        chain.append(B + Multiset.of(f))
    return MeetingWalk(
        meet=chain[-1], chain=tuple(chain), anchor=f, progress=tuple(history), rounds=tuple(traces)
    )


def criss_cross(V: ValueSet, P: Multiset, P_prime: Multiset) -> MeetingWalk:
    """Find a member of Pi meeting both P and P' when min(P+P') is in P and max(P+P') in P'.

    The Y-side passes move B = P - {min P}; if they run out of stones the
    mirrored passes move B' = P' - {max P'} instead (computed on the
    reflected value set), and the returned walk starts at P'.
    """
    _check_pair(V, P, P_prime)
    if intersects(P, P_prime):
        return MeetingWalk(meet=P, chain=(P,), anchor=P.min)
    if not (P.min < P_prime.min and P_prime.max > P.max):
        raise ValidationError("min(P+P') must occur only in P and max(P+P') only in P'")
    failures = []
    try:
        return _criss_cross_side(V, P, P_prime)
    except _OutOfStones as exc:
        failures.append(str(exc))
    try:
        walk = _criss_cross_side(reflect(V), negate(P_prime), negate(P))
    except _OutOfStones as exc:
        failures.append(str(exc))
        raise InvariantViolation(
            "criss-cross failed on both sides", trace=(P, P_prime, tuple(failures))
        ) from exc
    return MeetingWalk(
        meet=negate(walk.meet),
        chain=tuple(negate(D) for D in walk.chain),
        anchor=-walk.anchor,
        reflected=True,
        progress=walk.progress,
        rounds=walk.rounds,
    )


def check_meeting_walk(V: ValueSet, P: Multiset, P_prime: Multiset, walk: MeetingWalk) -> bool:
    """Postcondition shared by ``multiple_expansion`` and ``criss_cross``."""
    deg = bidegree(P)
    start = P_prime if walk.reflected else P
    members = walk.chain
    if not members or members[0] != start or members[-1] != walk.meet:
        return False
    for D in members:
        if bidegree(D) != deg or any(x not in V for x in D.items) or walk.anchor not in D:
            return False
    return intersects(walk.meet, P) and intersects(walk.meet, P_prime)


def _first_containing(family: PiFamily, x: int) -> Optional[Multiset]:
    for P in family.members:
        if x in P:
            return P
    return None


def connect(
    V: ValueSet, q: int, c: int, x: int, y: int, family: Optional[PiFamily] = None
) -> WalkCertificate:
    """Certificate that vertices x and y of Delta_(q,c) lie in one component.

    P is the first member (in canonical order) containing x; P' is the first
    member containing y that is disjoint from P, if there is one. Disjoint pairs are joined through a multiset meeting both, found by
    multiple expansion when one of them holds both extremes of P+P', and by
    criss-cross otherwise.
    """
    profile = gap_profile(V)
    if q <= profile.bound:
        raise ValidationError(f"need q > r+s={profile.bound}, got q={q}")
    if family is None:
        family = enumerate_pi(V, q, c)
    elif family.V != V or family.bidegree != (q, c):
        raise ValidationError("family does not match (V, q, c)")
    P = _first_containing(family, x)
    if P is None:
        raise ValidationError(f"{x} is not a vertex of Delta_({q},{c})")
    if y in P:
        return WalkCertificate((P,), x, y, Bidegree(q, c))
    with_y = [D for D in family.members if y in D]
    if not with_y:
        raise ValidationError(f"{y} is not a vertex of Delta_({q},{c})")
    # prefer a P' disjoint from P so the certificate exercises the walks
    P_prime = next((D for D in with_y if not intersects(P, D)), with_y[0])

    if intersects(P, P_prime):
        chain = (P, P_prime)
    elif P_prime.max > P.max and P_prime.min < P.min:
        walk = multiple_expansion(V, P, P_prime, anchor=x)
        chain = walk.chain + (P_prime,)
    elif P.max > P_prime.max and P.min < P_prime.min:
        walk = multiple_expansion(V, P_prime, P, anchor=y)
        chain = (P,) + walk.chain[::-1]
    elif P_prime.max > P.max:
        chain = _criss_cross_chain(V, P, P_prime)
    else:
        chain = _criss_cross_chain(V, P_prime, P)[::-1]
    return WalkCertificate(tuple(chain), x, y, Bidegree(q, c))


def _criss_cross_chain(V, P, P_prime):
    walk = criss_cross(V, P, P_prime)
    if walk.reflected:
        return (P,) + walk.chain[::-1]
    return walk.chain + (P_prime,)


def verify_certificate(V: ValueSet, cert: WalkCertificate) -> bool:
    """Check a certificate from scratch; never raises."""
    try:
        q, c = cert.bidegree
        chain = tuple(cert.chain)
        if not chain:
            return False
        for D in chain:
            items = tuple(D.items)
            if len(items) != q or sum(items) != c or any(v not in V for v in items):
                return False
        for a, b in zip(chain, chain[1:]):
            if set(a.items).isdisjoint(b.items):
                return False
        return cert.x in chain[0].items and cert.y in chain[-1].items
    except Exception:
        return False
