"""Finite lattices given by their cover relation.

Elements are dense integer ids ``0..n-1``.  The order is cached as
per-element up-sets and down-sets packed into Python ints, so meets,
joins and interval membership reduce to bit operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    CycleDetected,
    InvalidInput,
    MultipleMaxima,
    MultipleMinima,
    NotALattice,
    NotComparable,
    NotRanked,
    RedundantCover,
)


def bits(mask: int) -> list[int]:
    """Element ids present in a bit-vector, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


class Lattice:
    """An immutable finite lattice.

    Build instances with :func:`build_lattice`, which validates the input;
    the constructor itself trusts its arguments.
    """

    __slots__ = (
        "n", "covers", "lower", "upper", "up", "down", "bottom", "top",
        "height", "order", "_join", "_meet", "__dict__",
    )

    def __init__(self, n, covers, lower, upper, up, down, join, meet, height, order):
        self.n = n
        self.covers = covers
        self.lower = lower
        self.upper = upper
        self.up = up
        self.down = down
        self._join = join
        self._meet = meet
        self.height = height
        self.order = order
        self.bottom = order[0]
        self.top = order[-1]

    def __repr__(self):
        return f"Lattice(n={self.n}, covers={self.cover_list()})"

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))

    @property
    def elements(self) -> range:
        return range(self.n)

    def cover_list(self) -> list[tuple[int, int]]:
        return sorted(self.covers)

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def is_cover(self, a: int, b: int) -> bool:
        return (a, b) in self.covers

    def join(self, x: int, y: int) -> int:
        return self._join[x * self.n + y]

    def meet(self, x: int, y: int) -> int:
        return self._meet[x * self.n + y]

    def is_chain(self) -> bool:
        return all(len(u) <= 1 for u in self.upper)

    def atoms(self) -> tuple[int, ...]:
        return self.upper[self.bottom]

    def coatoms(self) -> tuple[int, ...]:
        return self.lower[self.top]

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def _topological_order(n, lower, upper):
    indeg = [len(lower[x]) for x in range(n)]
    ready = [x for x in range(n) if indeg[x] == 0]
    order = []
    while ready:
        x = ready.pop()
        order.append(x)
        for y in upper[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    if len(order) == n:
        return order
    # walk backwards through unfinished elements until one repeats
    stuck = [x for x in range(n) if indeg[x] > 0]
    x = stuck[0]
    seen = {}
    path = []
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = next(c for c in lower[x] if indeg[c] > 0)
    cycle = path[seen[x]:] + [x]
    raise CycleDetected(reversed(cycle))


def build_lattice(cover_pairs: Iterable[Sequence[int]], n: int | None = None) -> Lattice:
    """Validate a cover relation and return the lattice it generates.

    ``n`` defaults to one more than the largest id used; an empty list
    with ``n`` unset gives the one-element lattice.
    """
    pairs = [tuple(p) for p in cover_pairs]
    for p in pairs:
        if len(p) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in p):
            raise InvalidInput(f"cover pair must be two integer ids, got {p!r}")
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=0)
    if n < 1:
        raise InvalidInput("a lattice needs at least one element")
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidInput(f"cover ({a}, {b}) uses an id outside 0..{n - 1}")
        if a == b:
            raise CycleDetected([a, a])
    covers = frozenset(pairs)
    if len(covers) != len(pairs):
        seen = set()
        for p in pairs:
            if p in seen:
                raise RedundantCover(p, "listed twice")
            seen.add(p)

    lower_l = [[] for _ in range(n)]
    upper_l = [[] for _ in range(n)]
    for a, b in sorted(covers):
        upper_l[a].append(b)
        lower_l[b].append(a)
    lower = tuple(tuple(sorted(v)) for v in lower_l)
    upper = tuple(tuple(sorted(v)) for v in upper_l)

    topo = _topological_order(n, lower, upper)
    up, down = kernels.transitive_closure(n, topo, lower)

    for a, b in sorted(covers):
        for c in upper[a]:
            if c != b and (down[b] >> c) & 1:
                raise RedundantCover((a, b), f"{a} < {c} < {b}")

    join, meet, defect = kernels.bound_tables(n, up, down)
    if defect is not None:
        x, y, side, found = defect
        if not found:
            if side == 0:
                raise MultipleMaxima([e for e in range(n) if up[e] == 1 << e])
            raise MultipleMinima([e for e in range(n) if down[e] == 1 << e])
        raise NotALattice(x, y, found, "join" if side == 0 else "meet")
    if n > 1 and not covers:
        raise MultipleMinima(range(n))

    height = [0] * n
    for x in topo:
        if lower[x]:
            height[x] = 1 + max(height[c] for c in lower[x])
    order = tuple(sorted(range(n), key=lambda e: (height[e], e)))
    return Lattice(n, covers, lower, upper, tuple(up), tuple(down), join, meet, tuple(height), order)


def relabel(L: Lattice, perm: Sequence[int]) -> Lattice:
    """Isomorphic copy in which element ``x`` becomes ``perm[x]``."""
    return build_lattice([(perm[a], perm[b]) for a, b in L.covers], L.n)


def induced_covers(L: Lattice, mask: int) -> list[tuple[int, int]]:
    """Cover pairs of the subposet on ``mask`` (ids of ``L``)."""
    out = []
    for a in bits(mask):
        above = L.up[a] & mask & ~(1 << a)
        for b in bits(above):
            between = above & L.down[b]
            if between == 1 << b:
                out.append((a, b))
    return out


def induced_lattice(L: Lattice, elements: Iterable[int]) -> tuple[Lattice, tuple[int, ...]]:
    """Relabel the subposet on ``elements`` to ``0..k-1`` and validate it.

    Returns the lattice and the tuple mapping local ids back to ids of ``L``.
    """
    members = tuple(sorted(set(elements)))
    local = {e: i for i, e in enumerate(members)}
    pairs = [(local[a], local[b]) for a, b in induced_covers(L, mask_of(members))]
    return build_lattice(pairs, len(members)), members


# ----------------------------------------------------------------------
# rank


@dataclass(frozen=True)
class RankFunction:
    r: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.r[x]

    def __len__(self) -> int:
        return len(self.r)

    @property
    def length(self) -> int:
        return max(self.r)

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.length + 1)]
        for x, k in enumerate(self.r):
            out[k].append(x)
        return tuple(tuple(v) for v in out)


def _longest_chain_to(L: Lattice, x: int) -> list[int]:
    chain = [x]
    while chain[-1] != L.bottom:
        z = chain[-1]
        chain.append(next(c for c in L.lower[z] if L.height[c] == L.height[z] - 1))
    return chain[::-1]


def _chain_to_top(L: Lattice, x: int) -> list[int]:
    chain = [x]
    while chain[-1] != L.top:
        chain.append(L.upper[chain[-1]][0])
    return chain


def rank_function(L: Lattice) -> RankFunction:
    """The rank function of a ranked lattice; raises :class:`NotRanked`.

    Every maximal bottom-top chain has the same length iff every cover
    raises the longest-chain height by exactly one.  If some cover
    ``a < b`` jumps by more, splicing the longest chain to ``a`` (then
    ``b``) and the longest chain to ``b`` onto a common chain from ``b`` to
    the top gives two maximal chains of different lengths, which is the
    witness carried by the exception.
    """
    h = L.height
    for a, b in L.cover_list():
        if h[b] != h[a] + 1:
            tail = _chain_to_top(L, b)
            long_chain = _longest_chain_to(L, b) + tail[1:]
            short_chain = _longest_chain_to(L, a) + tail
            raise NotRanked([short_chain, long_chain])
    return RankFunction(h)


def is_ranked(L: Lattice) -> bool:
    return all(L.height[b] == L.height[a] + 1 for a, b in L.covers)


# ----------------------------------------------------------------------
# intervals, deletions, induced Hasse subgraphs


@dataclass(frozen=True)
class IntervalView:
    base: Lattice
    lo: int
    hi: int
    members: tuple[int, ...]

    @cached_property
    def mask(self) -> int:
        return mask_of(self.members)

    @cached_property
    def lattice(self) -> Lattice:
        """The interval as a standalone lattice on local ids ``0..k-1``."""
        return induced_lattice(self.base, self.members)[0]

    def to_base(self, local: int) -> int:
        return self.members[local]

    def to_local(self, element: int) -> int:
        return self.members.index(element)


def interval(L: Lattice, x: int, y: int) -> IntervalView:
    if not L.leq(x, y):
        raise NotComparable(x, y)
    return IntervalView(L, x, y, tuple(bits(L.up[x] & L.down[y])))


@dataclass(frozen=True)
class Deletion:
    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    is_sublattice: bool


def delete_elements(L: Lattice, removed: Iterable[int]) -> Deletion:
    """Remove elements and recompute the induced cover relation.

    ``is_sublattice`` reports whether the survivors are closed under the
    meets and joins of ``L``.
    """
    removed = set(removed)
    if L.bottom in removed or L.top in removed:
        raise InvalidInput("cannot delete the bottom or top element")
    keep = [x for x in range(L.n) if x not in removed]
    mask = mask_of(keep)
    closed = all(
        (mask >> L.join(x, y)) & 1 and (mask >> L.meet(x, y)) & 1
        for i, x in enumerate(keep)
        for y in keep[i + 1:]
    )
    return Deletion(tuple(keep), tuple(induced_covers(L, mask)), closed)


@dataclass(frozen=True)
class HasseSubgraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def components_of(vertices: Sequence[int], edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def hasse_subgraph(L: Lattice, elements: Iterable[int]) -> HasseSubgraph:
    """Undirected subgraph of the Hasse diagram induced by ``elements``."""
    vs = tuple(sorted(set(elements)))
    inside = set(vs)
    edges = tuple(sorted((a, b) for a, b in L.covers if a in inside and b in inside))
    return HasseSubgraph(vs, edges, components_of(vs, edges))
