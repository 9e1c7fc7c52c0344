"""Structural predicates with certificates and counterexample witnesses.

Each decision returns a :class:`Verdict`; ``evidence`` is a certificate
when the property holds and a counterexample when it does not, so every
verdict can be replayed independently.

Planarity is decided through order dimension: a finite lattice is planar
exactly when its order is the intersection of two linear extensions
(Baker, Fishburn and Roberts).  Graph planarity of the undirected Hasse
diagram is a different, weaker notion and is not used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import NotDoublyIrreducible, NotRanked, SizeLimitExceeded
from .lattice import Lattice, bits, delete_elements, hasse_subgraph, rank_function

PLANAR_SEARCH_LIMIT = 20


@dataclass(frozen=True)
class Verdict:
    holds: bool
    evidence: Any = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class RankFailure:
    """Two maximal chains of different lengths."""

    chains: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LevelSplit:
    """The cover graph on ranks ``level`` and ``level + 1`` is disconnected."""

    level: int
    components: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class IntervalSplit:
    x: int
    y: int
    components: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class DismantlingSequence:
    order: tuple[int, ...]


@dataclass(frozen=True)
class StuckSublattice:
    """A sublattice (of more than two elements) with no doubly irreducible element."""

    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CornerWitness:
    x: int
    w: int
    z: int
    y: int


@dataclass(frozen=True)
class ConjugateOrder:
    """``sigma`` is a linear extension; reversing it on incomparable
    pairs gives the second linear extension ``tau``."""

    sigma: tuple[int, ...]
    tau: tuple[int, ...]


@dataclass(frozen=True)
class PlanarSearchExhausted:
    states: int


@dataclass(frozen=True)
class PairWitness:
    x: int
    y: int


def join_irreducibles(L: Lattice) -> frozenset[int]:
    return frozenset(x for x in range(L.n) if len(L.lower[x]) == 1)


def meet_irreducibles(L: Lattice) -> frozenset[int]:
    return frozenset(x for x in range(L.n) if len(L.upper[x]) == 1)


def doubly_irreducibles(L: Lattice) -> frozenset[int]:
    return frozenset(x for x in range(L.n) if len(L.lower[x]) == 1 and len(L.upper[x]) == 1)


def is_rank_connected(L: Lattice) -> Verdict:
    try:
        r = rank_function(L)
    except NotRanked as exc:
        return Verdict(False, RankFailure(exc.chains))
    levels = r.levels
    for i in range(len(levels) - 1):
        g = hasse_subgraph(L, levels[i] + levels[i + 1])
        if not g.connected:
            return Verdict(False, LevelSplit(i, g.components[:2]))
    return Verdict(True)


def is_interval_connected(L: Lattice, min_gap: int = 2) -> Verdict:
    """Open intervals of every rank gap ``>= min_gap`` have connected Hasse graphs.

    ``min_gap=2`` is the literal definition, under which even the
    four-element diamond fails; ``min_gap=3`` is offered as the variant
    that only inspects intervals of length three or more.
    """
    r = rank_function(L)
    for x in range(L.n):
        for y in bits(L.up[x]):
            if r[y] - r[x] < min_gap:
                continue
            inner = bits(L.up[x] & L.down[y] & ~(1 << x) & ~(1 << y))
            g = hasse_subgraph(L, inner)
            if not g.connected:
                return Verdict(False, IntervalSplit(x, y, g.components[:2]))
    return Verdict(True)


def dismantling_sequence(L: Lattice) -> Verdict:
    """Greedily strip doubly irreducible elements, smallest id first.

    Removing a doubly irreducible element leaves a sublattice, and every
    sublattice of a dismantlable lattice is again dismantlable (every
    non-trivial sublattice has a doubly irreducible element), so the
    greedy order can never get stuck on a dismantlable lattice.  A stuck
    state is therefore a witness of non-dismantlability.
    """
    alive = set(range(L.n))
    lower = {x: set(L.lower[x]) for x in alive}
    upper = {x: set(L.upper[x]) for x in alive}
    order = []
    while len(alive) > 2:
        x = next(
            (e for e in sorted(alive) if len(lower[e]) == 1 and len(upper[e]) == 1),
            None,
        )
        if x is None:
            covers = tuple(sorted((a, b) for a in alive for b in upper[a]))
            return Verdict(False, StuckSublattice(tuple(sorted(alive)), covers))
        (z,), (y,) = lower[x], upper[x]
        alive.remove(x)
        upper[z].discard(x)
        lower[y].discard(x)
        del lower[x], upper[x]
        # z < y stays a non-cover iff another survivor sits strictly between
        between = L.up[z] & L.down[y] & ~(1 << z) & ~(1 << y)
        if not any(e in alive for e in bits(between)):
            upper[z].add(y)
            lower[y].add(z)
        order.append(x)
    return Verdict(True, DismantlingSequence(tuple(order)))


def replay_dismantling(L: Lattice, seq: DismantlingSequence) -> bool:
    """Check a dismantling sequence step by step through :func:`delete_elements`."""
    removed = []
    for x in seq.order:
        if x in (L.bottom, L.top) or x in removed:
            return False
        d = delete_elements(L, removed)
        if not d.is_sublattice:
            return False
        below = [a for a, b in d.covers if b == x]
        above = [b for a, b in d.covers if a == x]
        if len(below) != 1 or len(above) != 1:
            return False
        removed.append(x)
    rest = delete_elements(L, removed)
    return rest.is_sublattice and len(rest.elements) == min(L.n, 2)


def find_corner(L: Lattice, x: int) -> CornerWitness | None:
    if not (len(L.lower[x]) == 1 and len(L.upper[x]) == 1):
        raise NotDoublyIrreducible(x)
    (z,), (y,) = L.lower[x], L.upper[x]
    for w in L.upper[z]:
        if w != x and y in L.upper[w]:
            return CornerWitness(x, w, z, y)
    return None


def replay_corner(L: Lattice, c: CornerWitness) -> bool:
    return (
        c.w != c.x
        and all(L.is_cover(a, b) for a, b in ((c.z, c.x), (c.x, c.y), (c.z, c.w), (c.w, c.y)))
        and L.lower[c.x] == (c.z,)
        and L.upper[c.x] == (c.y,)
    )


def is_planar(L: Lattice, max_size: int = PLANAR_SEARCH_LIMIT) -> Verdict:
    """Decide planarity by searching for a conjugate pair of linear extensions.

    ``sigma`` is built one minimal element at a time.  The companion order
    ``tau`` (agree with ``sigma`` on comparable pairs, disagree on
    incomparable ones) is maintained as a list: a new element must follow
    every placed element below it and precede every placed element
    incomparable to it, so those must already form a prefix/suffix split.
    Failed (placed set, tau) states are memoised.
    """
    n = L.n
    if n > max_size:
        raise SizeLimitExceeded(f"planarity search limited to {max_size} elements, got {n}")
    strict_down = [L.down[x] & ~(1 << x) for x in range(n)]
    sigma: list[int] = []
    tau: list[int] = []
    dead: set = set()

    def extend(placed: int) -> bool:
        if len(sigma) == n:
            return True
        key = (placed, tuple(tau))
        if key in dead:
            return False
        for v in range(n):
            if (placed >> v) & 1 or strict_down[v] & ~placed:
                continue
            k = bin(placed & strict_down[v]).count("1")
            if any(not (strict_down[v] >> t) & 1 for t in tau[:k]):
                continue
            sigma.append(v)
            tau.insert(k, v)
            if extend(placed | (1 << v)):
                return True
            sigma.pop()
            del tau[k]
        dead.add(key)
        return False

    if extend(0):
        return Verdict(True, ConjugateOrder(tuple(sigma), tuple(tau)))
    return Verdict(False, PlanarSearchExhausted(len(dead)))


def replay_conjugate(L: Lattice, cert: ConjugateOrder) -> bool:
    """Brute-force check of a planarity certificate.

    The relation ``x < y or (x || y and sigma(y) < sigma(x))`` must be
    antisymmetric, transitive and total, ``sigma`` must extend the order,
    and ``tau`` must list that relation.
    """
    n = L.n
    if sorted(cert.sigma) != list(range(n)):
        return False
    pos = {x: i for i, x in enumerate(cert.sigma)}
    if any(pos[a] > pos[b] for a, b in L.covers):
        return False

    def rel(x, y):
        if L.lt(x, y):
            return True
        return not L.comparable(x, y) and pos[y] < pos[x]

    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if rel(x, y) == rel(y, x):  # antisymmetric and total
                return False
            for z in range(n):
                if z not in (x, y) and rel(x, y) and rel(y, z) and not rel(x, z):
                    return False
    tpos = {x: i for i, x in enumerate(cert.tau)}
    return len(tpos) == n and all(rel(x, y) == (tpos[x] < tpos[y]) for x in range(n) for y in range(n) if x != y)


def is_upper_semimodular(L: Lattice) -> Verdict:
    """Whenever ``x ^ y`` is covered by ``x``, ``y`` is covered by ``x v y``."""
    for x in range(L.n):
        for y in range(L.n):
            if L.is_cover(L.meet(x, y), x) and not L.is_cover(y, L.join(x, y)):
                return Verdict(False, PairWitness(x, y))
    return Verdict(True)


def is_lower_semimodular(L: Lattice) -> Verdict:
    for x in range(L.n):
        for y in range(L.n):
            if L.is_cover(x, L.join(x, y)) and not L.is_cover(L.meet(x, y), y):
                return Verdict(False, PairWitness(x, y))
    return Verdict(True)

