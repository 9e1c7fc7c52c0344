"""Fixture lattices, small-lattice enumeration, random dismantlable lattices
and the implication cross-check harness.

Fixture cover lists were read off hand-drawn Hasse diagrams and are frozen
below.  Elements are numbered bottom to top, left to right within a level.
The properties each fixture is claimed to have are the ground truth, so a
mistake in a cover list shows up as a failed claim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from . import admissibility as adm
from .canonical import canonical_labeling
from .errors import ImplicationViolated, InvalidInput, PreconditionFailed, SizeLimitExceeded
from .lattice import Lattice, bits, build_lattice, is_ranked, relabel
from .predicates import (
    DismantlingSequence,
    dismantling_sequence,
    is_interval_connected,
    is_lower_semimodular,
    is_planar,
    is_rank_connected,
    is_upper_semimodular,
    join_irreducibles,
    replay_dismantling,
)
from .shelling import SEARCH_COVER_LIMIT, construct_el, search_el, verify_el

ENUMERATION_LIMIT = 10


def _f1a():
    # 0; atoms a0..a4 = 1..5; c0..c4 = 6..10; d0..d3 = 11..14; top 15
    a = lambda i: 1 + i  # noqa: E731
    c = lambda i: 6 + i  # noqa: E731
    d = lambda i: 11 + i  # noqa: E731
    covers = [(0, a(i)) for i in range(5)]
    covers += [(a(i), c(i)) for i in range(5)]
    covers += [(a(1), c(2)), (a(2), c(3)), (a(3), c(4)), (a(4), c(0))]
    covers += [(c(i), d(i)) for i in range(4)] + [(c(i + 1), d(i)) for i in range(4)]
    covers += [(d(i), 15) for i in range(4)]
    names = ["0"] + [f"a{i}" for i in range(5)] + [f"c{i}" for i in range(5)] + [f"d{i}" for i in range(4)] + ["1"]
    return covers, names


_F1B = [
    (0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (2, 5), (2, 6), (2, 7), (3, 8),
    (4, 8), (4, 9), (5, 9), (6, 9), (6, 10), (7, 10), (8, 11), (9, 11), (10, 11),
]

_F1C = [
    (0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6),
    (5, 7), (5, 8), (6, 9), (7, 9), (7, 10), (8, 10), (9, 11), (10, 11),
]

# 0; atoms a, b, c = 1, 2, 3; d, e, f, g = 4..7; top 8
_F1D = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 6), (2, 5), (2, 6), (3, 6), (3, 7),
    (4, 8), (5, 8), (6, 8), (7, 8),
]

FIXTURE_NAMES = ("F1a", "F1b", "F1c", "F1d")


@dataclass(frozen=True)
class Fixture:
    name: str
    lattice: Lattice
    claims: tuple[tuple[str, bool], ...]
    names: tuple[str, ...] = ()


def fixture(name: str) -> Fixture:
    if name == "F1a":
        covers, names = _f1a()
        claims = (("rank_connected", True), ("interval_connected", False), ("planar", False))
        return Fixture(name, build_lattice(covers), claims, tuple(names))
    if name == "F1b":
        claims = (
            ("planar", True), ("rank_connected", True), ("el_shellable", True), ("admissible", False),
        )
        return Fixture(name, build_lattice(_F1B), claims, tuple(map(str, range(12))))
    if name == "F1c":
        claims = (
            ("planar", True), ("rank_connected", True),
            ("upper_semimodular", False), ("lower_semimodular", False),
        )
        return Fixture(name, build_lattice(_F1C), claims, tuple(map(str, range(12))))
    if name == "F1d":
        claims = (("dismantlable", True), ("planar", False))
        names = ("0", "a", "b", "c", "d", "e", "f", "g", "1")
        return Fixture(name, build_lattice(_F1D), claims, names)
    raise InvalidInput(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")


def _el_shellable(L: Lattice) -> bool:
    return bool(verify_el(L, construct_el(L)))


CLAIM_CHECKS = {
    "rank_connected": lambda L: bool(is_rank_connected(L)),
    "interval_connected": lambda L: bool(is_interval_connected(L)),
    "planar": lambda L: bool(is_planar(L)),
    "dismantlable": lambda L: bool(dismantling_sequence(L)),
    "upper_semimodular": lambda L: bool(is_upper_semimodular(L)),
    "lower_semimodular": lambda L: bool(is_lower_semimodular(L)),
    "el_shellable": _el_shellable,
    "admissible": lambda L: bool(adm.is_admissible(L)),
}


def check_claims(fx: Fixture) -> dict[str, tuple[bool, bool]]:
    """``claim -> (expected, observed)`` for every stated property."""
    return {claim: (want, CLAIM_CHECKS[claim](fx.lattice)) for claim, want in fx.claims}


# ----------------------------------------------------------------------
# enumeration


def _antichains(L: Lattice, pool: list[int]) -> Iterator[int]:
    def rec(i, chosen, blocked):
        if i == len(pool):
            if chosen:
                yield chosen
            return
        yield from rec(i + 1, chosen, blocked)
        e = pool[i]
        if not (blocked >> e) & 1:
            yield from rec(i + 1, chosen | (1 << e), blocked | L.up[e] | L.down[e])

    yield from rec(0, 0, 0)


def _atom_extensions(L: Lattice) -> Iterator[Lattice]:
    """Every lattice obtained by adding one new atom below a filter of ``L``.

    Removing an atom from a lattice with at least three elements leaves a
    lattice, so every ``n``-element lattice arises this way from some
    ``(n-1)``-element one.  The new atom ``a`` sits below the up-closed set
    ``F`` generated by an antichain; the result is a lattice iff every
    non-bottom ``x`` has a least element in ``up(x) & F`` (that element is
    ``a v x``).
    """
    pool = [e for e in range(L.n) if e != L.bottom]
    new = L.n
    for anti in _antichains(L, pool):
        F = 0
        for e in bits(anti):
            F |= L.up[e]
        ok = True
        for x in pool:
            common = L.up[x] & F
            if not any(L.up[m] & common == common for m in bits(common)):
                ok = False
                break
        if not ok:
            continue
        tops = bits(anti)
        covers = [c for c in L.covers if not (c[0] == L.bottom and c[1] in tops)]
        covers += [(L.bottom, new)] + [(new, t) for t in tops]
        yield build_lattice(covers, L.n + 1)


@lru_cache(maxsize=None)
def _lattices(n: int) -> tuple[Lattice, ...]:
    if n == 1:
        return (build_lattice([], 1),)
    if n == 2:
        return (build_lattice([(0, 1)]),)
    found = {}
    for parent in _lattices(n - 1):
        for child in _atom_extensions(parent):
            form, perm = canonical_labeling(child)
            if form not in found:
                found[form] = relabel(child, perm)
    return tuple(found[k] for k in sorted(found))


def enumerate_lattices(n: int) -> Iterator[Lattice]:
    """One lattice per isomorphism class of ``n``-element lattices.

    Lattices come canonically labeled (bottom 0, top ``n - 1``) and sorted
    by canonical form, so the stream is identical on every run.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise SizeLimitExceeded(f"enumeration supports 1 <= n <= {ENUMERATION_LIMIT}, got {n}")
    return iter(_lattices(n))


def lattice_counts(up_to: int) -> dict[int, int]:
    return {n: sum(1 for _ in enumerate_lattices(n)) for n in range(1, up_to + 1)}


def random_dismantlable(n: int, seed: int, corner_bias: float = 0.5) -> tuple[Lattice, DismantlingSequence]:
    """Grow a lattice by inserting doubly irreducible elements.

    Starting from the 2-chain, each new element either subdivides a cover
    ``u < v`` or becomes a new corner between ``u`` and ``v`` two covers
    apart (``corner_bias`` is the probability of the latter when both are
    possible; corner insertions keep ranked lattices ranked).  The new
    element is always doubly irreducible, so the reverse insertion order is
    a dismantling sequence.
    """
    if n < 2:
        raise InvalidInput("random_dismantlable needs n >= 2")
    rng = random.Random(seed)
    L = build_lattice([(0, 1)])
    inserted = []
    while L.n < n:
        cover_sites = L.cover_list()
        corner_sites = sorted({(u, v) for u, w in L.covers for v in L.upper[w]})
        if corner_sites and rng.random() < corner_bias:
            u, v = rng.choice(corner_sites)
            covers = list(L.covers)
        else:
            u, v = rng.choice(cover_sites)
            covers = [c for c in L.covers if c != (u, v)]
        x = L.n
        L = build_lattice(covers + [(u, x), (x, v)], x + 1)
        inserted.append(x)
    return L, DismantlingSequence(tuple(reversed(inserted)))


# ----------------------------------------------------------------------
# cross-check harness


@dataclass
class CrossCheckReport:
    records: list[dict] = field(default_factory=list)
    summary: dict[str, int] = field(default_factory=dict)

    def bump(self, key: str, by: int = 1) -> None:
        self.summary[key] = self.summary.get(key, 0) + by


SUMMARY_KEYS = (
    "lattices",
    "ranked",
    "interval_connected_instances",
    "el_constructed",
    "rank_connected_not_interval_connected",
    "interval_connected_gap3",
    "gap3_not_rank_connected",
    "planar",
    "bfr_instances",
    "admissible",
    "admissible_unranked",
    "admissible_el_checked",
    "admissible_el_unchecked",
    "el_not_admissible",
    "gamma_el_pass",
    "gamma_el_fail",
    "search_checked",
    "search_found",
    "search_only",
    "admissibility_skipped",
    "violations",
)


def _yn(v):
    return None if v is None else bool(v)


def analyse(
    L: Lattice,
    index: int = 0,
    *,
    admissibility: bool = True,
    search: bool = False,
    report: CrossCheckReport | None = None,
) -> dict:
    """Compute every predicate for one lattice and assert the implications.

    Raises :class:`ImplicationViolated` if any of: rank-connected and
    dismantlable => constructed labeling verifies; ranked and
    interval-connected => rank-connected; planar => dismantlable;
    ranked and admissible => EL-shellable.  With ``search`` the exhaustive
    oracle also runs on every ranked lattice with few enough covers; it
    must find a labeling whenever the construction succeeds, and whatever
    it finds must verify.
    """
    rep = report if report is not None else CrossCheckReport()
    rep.bump("lattices")
    ranked = is_ranked(L)
    rc = bool(is_rank_connected(L))
    ic = ic3 = None
    if ranked:
        rep.bump("ranked")
        ic = bool(is_interval_connected(L, 2))
        ic3 = bool(is_interval_connected(L, 3))
    dm = dismantling_sequence(L)
    if dm and not replay_dismantling(L, dm.evidence):
        raise ImplicationViolated("dismantling certificate replays", L)
    planar = bool(is_planar(L)) if L.n <= 20 else None

    el = None
    if rc and dm:
        try:
            ok = bool(verify_el(L, construct_el(L)))
        except (PreconditionFailed, RuntimeError) as exc:
            raise ImplicationViolated(f"rank-connected and dismantlable => EL (construction failed: {exc})", L) from exc
        if not ok:
            raise ImplicationViolated("rank-connected and dismantlable => EL (constructed labeling rejected)", L)
        rep.bump("el_constructed")
        el = "constructed"
    if ic:
        rep.bump("interval_connected_instances")
        if not rc:
            raise ImplicationViolated("interval-connected => rank-connected", L)
    if ic3:
        rep.bump("interval_connected_gap3")
        if not rc:
            rep.bump("gap3_not_rank_connected")
    if rc and ic is False:
        rep.bump("rank_connected_not_interval_connected")
    if planar:
        rep.bump("planar")
        rep.bump("bfr_instances")
        if not dm:
            raise ImplicationViolated("planar => dismantlable", L)

    searched = None
    if search and ranked and len(L.covers) <= SEARCH_COVER_LIMIT:
        rep.bump("search_checked")
        found = search_el(L)
        searched = found is not None
        if searched:
            rep.bump("search_found")
            if not verify_el(L, found):
                raise ImplicationViolated("search result replays", L)
            if el is None:
                rep.bump("search_only")
                el = "searched"
        elif el == "constructed":
            raise ImplicationViolated("search finds every constructed case", L)
        else:
            el = "not-found"

    admissible = gamma_el = None
    if admissibility and len(join_irreducibles(L)) <= adm.JOIN_IRREDUCIBLE_LIMIT:
        verdict = adm.is_admissible(L)
        admissible = bool(verdict)
        if admissible and not ranked:
            rep.bump("admissible_unranked")
        if admissible and ranked:
            rep.bump("admissible")
            gamma_el = bool(verify_el(L, adm.gamma_labeling(L, verdict.evidence)))
            rep.bump("gamma_el_pass" if gamma_el else "gamma_el_fail")
            if el is None and searched is None and len(L.covers) <= SEARCH_COVER_LIMIT:
                el = "searched" if search_el(L) is not None else "not-found"
            if el is None:
                rep.bump("admissible_el_unchecked")
            else:
                rep.bump("admissible_el_checked")
                if el == "not-found":
                    raise ImplicationViolated("admissible => EL-shellable", L)
        if not admissible and el in ("constructed", "searched"):
            rep.bump("el_not_admissible")
    elif admissibility:
        rep.bump("admissibility_skipped")

    record = {
        "index": index,
        "n": L.n,
        "covers": [list(c) for c in L.cover_list()],
        "ranked": ranked,
        "rank_connected": rc,
        "interval_connected": ic,
        "interval_connected_gap3": ic3,
        "dismantlable": bool(dm),
        "planar": _yn(planar),
        "admissible": admissible,
        "gamma_el": gamma_el,
        "el": el,
        "search": searched,
    }
    rep.records.append(record)
    return record


def cross_check(lattices: Iterable[Lattice], *, admissibility: bool = True, search: bool = False) -> CrossCheckReport:
    rep = CrossCheckReport(summary={k: 0 for k in SUMMARY_KEYS})
    for i, L in enumerate(lattices):
        analyse(L, i, admissibility=admissibility, search=search, report=rep)
    return rep


def corpus(up_to: int) -> Iterator[Lattice]:
    """All lattices with at most ``up_to`` elements, smallest first."""
    for n in range(1, up_to + 1):
        yield from enumerate_lattices(n)
