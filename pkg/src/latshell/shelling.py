"""Lexicographic shellings (EL-labelings) of ranked lattices.

A labeling maps every cover pair ``(a, b)`` to a :class:`~fractions.Fraction`.
It is an EL-labeling when every interval ``[x, y]`` has exactly one
maximal chain with weakly increasing labels, and the first label of that
chain is strictly smaller than the label of every other atom of ``[x, y]``.

Labels are exact rationals throughout: the second condition is a strict
inequality and must not depend on a tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import kernels
from .canonical import automorphisms
from .errors import (
    ExtensionSearchExhausted,
    NotComparable,
    NotRanked,
    PartialLabeling,
    PreconditionFailed,
    SizeLimitExceeded,
)
from .lattice import Lattice, induced_lattice, interval, rank_function
from .predicates import (
    CornerWitness,
    dismantling_sequence,
    doubly_irreducibles,
    find_corner,
    is_rank_connected,
)

EdgeLabeling = dict  # (a, b) -> Fraction, one entry per cover

SEARCH_COVER_LIMIT = 12


@dataclass(frozen=True)
class NoRisingChain:
    x: int
    y: int


@dataclass(frozen=True)
class MultipleRisingChains:
    x: int
    y: int
    chain1: tuple[int, ...]
    chain2: tuple[int, ...]


@dataclass(frozen=True)
class NotLexFirst:
    x: int
    y: int
    x1: int
    z: int


@dataclass(frozen=True)
class ELVerdict:
    ok: bool
    violation: NoRisingChain | MultipleRisingChains | NotLexFirst | None = None

    def __bool__(self):
        return self.ok


def rising_chains(L: Lattice, f: Mapping, x: int, y: int) -> list[tuple[int, ...]]:
    """All maximal chains of ``[x, y]`` with weakly increasing labels.

    Plain depth-first enumeration, trying steps in (label, id) order.
    """
    if not L.leq(x, y):
        raise NotComparable(x, y)
    out = []

    def walk(chain, last):
        z = chain[-1]
        if z == y:
            out.append(tuple(chain))
            return
        steps = sorted((f[(z, w)], w) for w in L.upper[z] if L.leq(w, y))
        for lab, w in steps:
            if last is None or lab >= last:
                chain.append(w)
                walk(chain, lab)
                chain.pop()

    walk([x], None)
    return out


def _label_ranks(L: Lattice, f: Mapping) -> list[list[int]]:
    missing = [c for c in L.cover_list() if c not in f]
    if missing:
        raise PartialLabeling(missing[0])
    values = sorted(set(f[c] for c in L.covers))
    rank = {v: i for i, v in enumerate(values)}
    return [[rank[f[(z, w)]] for w in L.upper[z]] for z in range(L.n)]


def _require_ranked(L: Lattice):
    try:
        return rank_function(L)
    except NotRanked as exc:
        raise PreconditionFailed(f"lexicographic shellings need a ranked lattice: {exc}") from exc


def _scan(L, f, sources, target_mask, cond2):
    labels = f if isinstance(f, list) else _label_ranks(L, f)
    return kernels.rising_scan(
        L.n, L.order, L.up, L.down, L.upper, labels, list(sources), target_mask, cond2
    )


def _to_violation(L: Lattice, f: Mapping, hit) -> NoRisingChain | MultipleRisingChains | NotLexFirst:
    kind, x, y, a, b = hit
    if kind == kernels.NO_RISING:
        return NoRisingChain(x, y)
    if kind == kernels.MULTIPLE_RISING:
        c1, c2 = rising_chains(L, f, x, y)[:2]
        return MultipleRisingChains(x, y, c1, c2)
    return NotLexFirst(x, y, a, b)


def verify_el(L: Lattice, f: Mapping) -> ELVerdict:
    """Check both EL conditions on every interval.

    Intervals are scanned per lower end ``x`` in (rank, id) order with a
    dynamic program over the up-set of ``x`` that counts rising chains by
    their last label; the reported violation is the one with smallest
    ``(rank(x), x, y)``.
    """
    _require_ranked(L)
    hit = _scan(L, f, L.order, -1, True)
    if hit is None:
        return ELVerdict(True)
    return ELVerdict(False, _to_violation(L, f, hit))


# ----------------------------------------------------------------------
# construction along the dismantling induction


def _chain_labels(L):
    return {c: Fraction(1) for c in L.covers}


def _rank_two_labels(L):
    f = {}
    for i, a in enumerate(L.atoms(), start=1):
        f[(L.bottom, a)] = Fraction(i)
        f[(a, L.top)] = Fraction(1)
    return f


def _lift(f_local, members):
    return {(members[a], members[b]): v for (a, b), v in f_local.items()}


def _seeded(values, seed):
    gaps = [b - a for a, b in zip(values, values[1:])]
    eps = (min(gaps) if gaps else Fraction(1)) / 4
    return [seed - eps, seed, seed + eps]


def extend_at_corner(L: Lattice, f: dict, corner: CornerWitness) -> dict:
    """Label the two covers through a re-inserted doubly irreducible element.

    ``f`` is an EL-labeling of ``L - x``.  Because ``x`` has a corner, the
    covers of ``L - x`` are exactly those of ``L`` minus the two through
    ``x``, so every maximal chain of ``L - x`` is still maximal in ``L`` and
    only intervals containing ``x`` need checking.

    Candidates copy the labels of ``z < w < y`` nudged by a quarter of the
    smallest label gap, then fall back to labeling ``z < x`` above all
    other labels and ``x < y`` below all of them.  That last pair always
    works:

    * in ``[u, x]`` the rising chain is that of ``[u, z]`` followed by the
      top label, and the atoms are unchanged (or only ``x`` when ``u = z``);
    * ``[x, v]`` has a single first step, and the bottom label followed by
      the rising chain of ``[y, v]`` is rising;
    * any other chain through ``x`` descends at ``x``, so rising chains of
      intervals around ``x`` are unchanged, and the new atom ``x`` of
      ``[z, v]`` carries the largest label, so it never beats the first
      step of the rising chain.
    """
    x, z, y = corner.x, corner.z, corner.y
    values = sorted(set(f.values()))
    candidates = list(
        itertools.product(_seeded(values, f[(z, corner.w)]), _seeded(values, f[(corner.w, y)]))
    )
    candidates.append((values[-1] + 1, values[0] - 1))
    sources = [e for e in L.order if L.leq(e, x)]
    for lo, hi in candidates:
        trial = dict(f)
        trial[(z, x)] = lo
        trial[(x, y)] = hi
        if _scan(L, trial, sources, L.up[x], True) is None:
            return trial
    raise ExtensionSearchExhausted(f"no labels for covers ({z}, {x}), ({x}, {y})")


def _construct(L: Lattice) -> dict:
    if L.is_chain():
        return _chain_labels(L)
    levels = rank_function(L).levels
    for level in levels[1:-1]:
        if len(level) == 1:
            (x,) = level
            lower = interval(L, L.bottom, x)
            upper = interval(L, x, L.top)
            f_lo = _lift(_construct(lower.lattice), lower.members)
            f_hi = _lift(_construct(upper.lattice), upper.members)
            shift = max(f_lo.values()) - min(f_hi.values()) + 1
            f_lo.update({c: v + shift for c, v in f_hi.items()})
            return f_lo
    if len(levels) == 3:
        return _rank_two_labels(L)
    for x in sorted(doubly_irreducibles(L)):
        corner = find_corner(L, x)
        if corner is not None:
            sub, members = induced_lattice(L, [e for e in range(L.n) if e != x])
            return extend_at_corner(L, _lift(_construct(sub), members), corner)
    raise ExtensionSearchExhausted("no doubly irreducible element with a corner")


def construct_el(L: Lattice) -> dict:
    """EL-labeling of a rank-connected dismantlable lattice.

    Follows the induction: chains get a constant labeling; a middle rank
    with a single element ``x`` splits the lattice into ``[0, x]`` and
    ``[x, 1]``, labeled separately with the upper block shifted above the
    lower one; rank-two lattices label atoms ``1..k`` and their covers by
    the top ``1``; otherwise a doubly irreducible element with a corner is
    removed, the rest labeled recursively, and the labeling extended.
    The result is returned with labels renumbered ``1..k``.
    """
    rc = is_rank_connected(L)
    if not rc:
        raise PreconditionFailed(f"lattice is not rank-connected: {rc.evidence}")
    dm = dismantling_sequence(L)
    if not dm:
        raise PreconditionFailed(f"lattice is not dismantlable: {dm.evidence}")
    return dense_labels(_construct(L))


def dense_labels(f: Mapping) -> dict:
    """Replace labels by their rank ``1..k``; both EL conditions only compare labels."""
    rank = {v: Fraction(i) for i, v in enumerate(sorted(set(f.values())), start=1)}
    return {c: rank[v] for c, v in f.items()}


# ----------------------------------------------------------------------
# exhaustive oracle


def _symmetry_pairs(L: Lattice, covers: list) -> list[list[int]]:
    """``before[j]``: steps ``i < j`` whose label may be assumed <= step ``j``.

    Automorphisms permute EL-labelings, so some labeling in each orbit is
    lexicographically least among its images.  For an automorphism moving
    step ``i`` first, that labeling has ``label[i] <= label[sigma(i)]``.
    """
    index = {c: i for i, c in enumerate(covers)}
    before = [set() for _ in covers]
    for p in automorphisms(L):
        for i, (a, b) in enumerate(covers):
            j = index[(p[a], p[b])]
            if j != i:
                before[j].add(i)
                break
    return [sorted(b) for b in before]


def search_el(L: Lattice, max_labels: int | None = None, max_covers: int = SEARCH_COVER_LIMIT) -> dict | None:
    """Exhaustive search for an EL-labeling with labels in ``1..max_labels``.

    Label vectors are enumerated up to order-equivalence (as weak orders
    on the covers, the labels returned being ``1..k``), covers in order of
    the rank of their upper end.  After each assignment the intervals through the new cover are
    rescanned with unlabeled covers ignored: two rising chains, or a rising
    chain beaten by an already labeled atom, cannot be repaired later, and
    an interval whose covers are all labeled must have its rising chain.
    Returns ``None`` when no labeling exists in range.  ``max_labels``
    defaults to the number of covers, which is always enough.
    """
    if len(L.covers) > max_covers:
        raise SizeLimitExceeded(f"search limited to {max_covers} covers, got {len(L.covers)}")
    r = _require_ranked(L)
    covers = sorted(L.covers, key=lambda c: (r[c[1]], c[1], c[0]))
    m = max_labels if max_labels is not None else max(1, len(covers))
    total = len(covers)
    slot = [(a, L.upper[a].index(b)) for a, b in covers]
    # intervals [u, y] are fully labeled once the last cover into y is
    completes = [0] * total
    for i, (_, b) in enumerate(covers):
        completes[i] = 1 << b
        if i:
            completes[i - 1] &= ~(1 << b)
    # rescan intervals through the new cover, or every [u, y] it completes
    sources = [
        [u for u in L.order if L.leq(u, b if completes[i] else a) and u != b]
        for i, (a, b) in enumerate(covers)
    ]
    targets = [L.up[b] for _, b in covers]
    labels = kernels.search_labelings(
        L.n, L.order, L.up, L.down, L.upper, slot, sources, targets, completes,
        _symmetry_pairs(L, covers), m,
    )
    if labels is None:
        return None
    return {(z, w): Fraction(labels[z][k] + 1) for z in range(L.n) for k, w in enumerate(L.upper[z])}
