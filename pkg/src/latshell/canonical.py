"""Canonical forms for isomorphism dedup.

Colour refinement starts from (height, up-degree, down-degree) and
repeatedly splits colour classes by the multisets of neighbouring colours.
Remaining symmetry is resolved by individualising one element of the
first non-singleton class and refining again; every leaf of that search
is a labeling, and the lexicographically smallest encoding wins.
Elements with identical lower and upper covers ("twins") are
interchangeable by an automorphism, so only one per twin class is tried.
"""

from __future__ import annotations

from .lattice import Lattice


def _refine(L: Lattice, colors: list[int]) -> list[int]:
    ncls = len(set(colors))
    while True:
        sigs = [
            (
                colors[x],
                tuple(sorted(colors[c] for c in L.upper[x])),
                tuple(sorted(colors[c] for c in L.lower[x])),
            )
            for x in range(L.n)
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [index[s] for s in sigs]
        if len(index) == ncls:
            return colors
        ncls = len(index)


def _encode(L: Lattice, perm: list[int]) -> bytes:
    width = 1 if L.n < 256 else 2
    pairs = sorted((perm[a], perm[b]) for a, b in L.covers)
    out = bytearray(L.n.to_bytes(2, "big"))
    for a, b in pairs:
        out += a.to_bytes(width, "big") + b.to_bytes(width, "big")
    return bytes(out)


def canonical_labeling(L: Lattice) -> tuple[bytes, list[int]]:
    """Return ``(form, perm)``: relabeling ``x -> perm[x]`` realises ``form``.

    Because height leads the initial colour, ``perm`` sorts elements by
    height; in particular the bottom becomes 0 and the top ``n - 1``.
    """
    start = [(L.height[x], len(L.upper[x]), len(L.lower[x])) for x in range(L.n)]
    index = {s: i for i, s in enumerate(sorted(set(start)))}
    colors = _refine(L, [index[s] for s in start])
    twin_key = [(L.lower[x], L.upper[x]) for x in range(L.n)]
    best: list = [None, None]

    def search(colors):
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == L.n:
            code = _encode(L, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, list(colors)
            return
        target = min(c for c, k in counts.items() if k > 1)
        tried = set()
        for v in range(L.n):
            if colors[v] != target or twin_key[v] in tried:
                continue
            tried.add(twin_key[v])
            split = [2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(colors)]
            search(_refine(L, split))

    search(colors)
    return best[0], best[1]


def canonical_form(L: Lattice) -> bytes:
    """Byte string equal for two lattices iff they are isomorphic."""
    return canonical_labeling(L)[0]


def automorphisms(L: Lattice):
    """Yield every cover-preserving permutation of ``L`` as a list ``x -> p[x]``.

    Plain backtracking in (height, id) order, mapping each element to an
    unused element of the same height and degrees whose covers towards the
    already mapped elements agree.
    """
    key = [(L.height[x], len(L.upper[x]), len(L.lower[x])) for x in range(L.n)]
    order = list(L.order)
    p = [-1] * L.n
    used = [False] * L.n

    def fits(x, y):
        for u in L.lower[x]:
            if p[u] < 0 or (p[u], y) not in L.covers:
                return False
        return True

    def extend(i):
        if i == L.n:
            yield list(p)
            return
        x = order[i]
        for y in range(L.n):
            if used[y] or key[y] != key[x] or not fits(x, y):
                continue
            p[x] = y
            used[y] = True
            yield from extend(i + 1)
            used[y] = False
            p[x] = -1

    yield from extend(0)
