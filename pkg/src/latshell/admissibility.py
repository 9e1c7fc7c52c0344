"""Admissibility: natural labelings of join-irreducibles and their gamma labels.

A natural labeling ``omega`` sends every join-irreducible to a positive
integer, weakly order-preserving.  The derived label of a cover ``x < y``
is the least ``omega(z)`` over join-irreducibles ``z`` with
``x v z == y``.  The lattice is admissible when some ``omega`` makes every
interval have exactly one weakly rising maximal chain.  Only that
uniqueness condition is checked; the strict first-step condition of
EL-labelings is not part of the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from . import kernels
from .errors import InvalidInput, SizeLimitExceeded
from .lattice import Lattice
from .predicates import Verdict, join_irreducibles
from .shelling import rising_chains

JOIN_IRREDUCIBLE_LIMIT = 8


@dataclass(frozen=True)
class RisingChainDefect:
    """``[x, y]`` has zero or several rising chains (the first two listed)."""

    x: int
    y: int
    chains: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Exhausted:
    candidates: int


def _check_size(J, max_size):
    if len(J) > max_size:
        raise SizeLimitExceeded(f"{len(J)} join-irreducibles exceed the bound {max_size}")


def validate_omega(L: Lattice, omega: Mapping[int, int]) -> None:
    J = join_irreducibles(L)
    if set(omega) != set(J):
        raise InvalidInput(f"omega must be defined exactly on the join-irreducibles {sorted(J)}")
    for z in J:
        if not isinstance(omega[z], int) or omega[z] < 1:
            raise InvalidInput(f"omega({z}) must be a positive integer")
        for w in J:
            if L.leq(z, w) and omega[z] > omega[w]:
                raise InvalidInput(f"omega is not order-preserving: {z} <= {w} but {omega[z]} > {omega[w]}")


def enumerate_natural_labelings(L: Lattice, max_size: int = JOIN_IRREDUCIBLE_LIMIT) -> Iterator[dict]:
    """All order-preserving maps from the join-irreducibles into ``{1..|J|}``.

    Injective maps (linear extensions) come first, then the maps with ties,
    each group in lexicographic order of the values listed by element id.
    """
    J = sorted(join_irreducibles(L))
    _check_size(J, max_size)
    k = len(J)
    values = [0] * k

    def fill(i):
        if i == k:
            yield list(values)
            return
        zi = J[i]
        lo, hi = 1, k
        for j in range(i):
            if L.leq(J[j], zi):
                lo = max(lo, values[j])
            elif L.leq(zi, J[j]):
                hi = min(hi, values[j])
        for v in range(lo, hi + 1):
            values[i] = v
            yield from fill(i + 1)

    for vals in fill(0):
        if len(set(vals)) == k:
            yield dict(zip(J, vals))
    for vals in fill(0):
        if len(set(vals)) < k:
            yield dict(zip(J, vals))


def gamma_labeling(L: Lattice, omega: Mapping[int, int]) -> dict:
    """Label each cover ``x < y`` by ``min omega(z)`` over ``z`` with ``x v z == y``."""
    f = {}
    for x, y in L.covers:
        f[(x, y)] = Fraction(min(v for z, v in omega.items() if L.join(x, z) == y))
    return f


def _gamma_ranks(L, omega):
    return [[min(v for z, v in omega.items() if L.join(x, z) == y) for y in L.upper[x]] for x in range(L.n)]


def check_admissible_with(L: Lattice, omega: Mapping[int, int]) -> Verdict:
    hit = kernels.rising_scan(
        L.n, L.order, L.up, L.down, L.upper, _gamma_ranks(L, omega), list(L.order), -1, False
    )
    if hit is None:
        return Verdict(True, dict(omega))
    _, x, y, _, _ = hit
    chains = rising_chains(L, gamma_labeling(L, omega), x, y)[:2]
    return Verdict(False, RisingChainDefect(x, y, tuple(chains)))


def _pattern(omega):
    keys = sorted(omega)
    dense = {v: i for i, v in enumerate(sorted(set(omega.values())))}
    return tuple(dense[omega[k]] for k in keys)


def is_admissible(L: Lattice, max_size: int = JOIN_IRREDUCIBLE_LIMIT) -> Verdict:
    """First natural labeling (enumeration order) whose gamma labels work.

    The verdict for ``omega`` depends only on the relative order of its
    values, so results are cached per order pattern; the exhaustion count
    still counts every enumerated map.
    """
    seen = {}
    count = 0
    for omega in enumerate_natural_labelings(L, max_size):
        count += 1
        key = _pattern(omega)
        if key not in seen:
            seen[key] = bool(check_admissible_with(L, omega))
        if seen[key]:
            return Verdict(True, omega)
    return Verdict(False, Exhausted(count))
