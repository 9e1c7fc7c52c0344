"""Brute-force reference implementations used only by the tests.

Everything here works from an explicit ``leq`` matrix or from plain
enumeration of chains and permutations, sharing no code with ``latshell``.
"""

import itertools
from functools import lru_cache


def leq_matrix(n, covers):
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return leq


def covers_from_leq(n, leq):
    out = []
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b]:
                if not any(c not in (a, b) and leq[a][c] and leq[c][b] for c in range(n)):
                    out.append((a, b))
    return sorted(out)


def join(n, leq, x, y):
    ub = [u for u in range(n) if leq[x][u] and leq[y][u]]
    least = [u for u in ub if all(leq[u][v] for v in ub)]
    return least[0] if len(least) == 1 else None


def meet(n, leq, x, y):
    lb = [u for u in range(n) if leq[u][x] and leq[u][y]]
    great = [u for u in lb if all(leq[v][u] for v in lb)]
    return great[0] if len(great) == 1 else None


def is_lattice(n, leq):
    return all(join(n, leq, x, y) is not None and meet(n, leq, x, y) is not None for x in range(n) for y in range(n))


def natural_posets(n):
    """Every poset on ``0..n-1`` in which ``i < j`` in the order implies ``i < j`` as integers.

    Each poset is returned as its ``leq`` matrix.  Element ``j`` picks a
    down-closed subset of ``0..j-1`` as its strict down-set.
    """

    def rec(j, downs):
        if j == n:
            leq = [[i == k or i in downs[k] for k in range(n)] for i in range(n)]
            yield leq
            return
        for mask in range(1 << j):
            chosen = {i for i in range(j) if (mask >> i) & 1}
            if all(downs[i] <= chosen for i in chosen):
                yield from rec(j + 1, downs + [frozenset(chosen)])

    yield from rec(0, [])


def canonical_brute(n, covers):
    """Smallest relabeled cover list over all ``n!`` permutations."""
    best = None
    for perm in itertools.permutations(range(n)):
        code = tuple(sorted((perm[a], perm[b]) for a, b in covers))
        if best is None or code < best:
            best = code
    return best


def brute_lattice_classes(n):
    """Canonical cover lists of all lattices with ``n`` elements, up to isomorphism."""
    seen = set()
    for leq in natural_posets(n):
        if is_lattice(n, leq):
            seen.add(canonical_brute(n, covers_from_leq(n, leq)))
    return seen


def maximal_chains(n, covers, x, y, leq):
    up = {a: [b for (c, b) in covers if c == a] for a in range(n)}
    out = []

    def walk(chain):
        z = chain[-1]
        if z == y:
            out.append(tuple(chain))
            return
        for w in up[z]:
            if leq[w][y]:
                walk(chain + [w])

    walk([x])
    return out


def brute_rank(n, covers, bottom, top):
    leq = leq_matrix(n, covers)
    lengths = {len(c) for c in maximal_chains(n, covers, bottom, top, leq)}
    if len(lengths) != 1:
        return None
    r = {}
    for x in range(n):
        r[x] = max(len(c) for c in maximal_chains(n, covers, bottom, x, leq)) - 1
    return r


def components(vertices, edges):
    vertices = set(vertices)
    adj = {v: set() for v in vertices}
    for a, b in edges:
        if a in vertices and b in vertices:
            adj[a].add(b)
            adj[b].add(a)
    comps = []
    left = set(vertices)
    while left:
        stack = [left.pop()]
        comp = set(stack)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def brute_rank_connected(n, covers, bottom, top):
    r = brute_rank(n, covers, bottom, top)
    if r is None:
        return False
    for i in range(r[top]):
        vs = [x for x in range(n) if r[x] in (i, i + 1)]
        if len(components(vs, covers)) != 1:
            return False
    return True


def brute_interval_connected(n, covers, bottom, top, min_gap=2):
    r = brute_rank(n, covers, bottom, top)
    leq = leq_matrix(n, covers)
    for x in range(n):
        for y in range(n):
            if leq[x][y] and r[y] - r[x] >= min_gap:
                inside = [z for z in range(n) if leq[x][z] and leq[z][y] and z not in (x, y)]
                if len(components(inside, covers)) != 1:
                    return False
    return True


def brute_dismantlable(n, covers):
    """Search over every removal order (memoised on the remaining set)."""
    leq = leq_matrix(n, covers)

    @lru_cache(maxsize=None)
    def ok(remaining):
        if len(remaining) <= 2:
            return True
        rem = sorted(remaining)
        sub = [(a, b) for a in rem for b in rem if a != b and leq[a][b]
               and not any(c not in (a, b) and leq[a][c] and leq[c][b] for c in rem)]
        for x in rem:
            lower = [a for a, b in sub if b == x]
            upper = [b for a, b in sub if a == x]
            if len(lower) == 1 and len(upper) == 1 and ok(remaining - {x}):
                return True
        return False

    return ok(frozenset(range(n)))


def brute_dimension_at_most_two(n, leq):
    """Transitive orientation of the incomparability graph (Dushnik-Miller).

    The order has dimension at most two iff its incomparability graph is a
    comparability graph; orientations are searched edge by edge.
    """
    inc = [(a, b) for a in range(n) for b in range(a + 1, n) if not leq[a][b] and not leq[b][a]]
    edge = {frozenset(e) for e in inc}
    arrow = {}

    def consistent(a, b):
        # a -> b was just set; every 2-path through it must close transitively
        for c in range(n):
            if arrow.get((b, c)):
                if frozenset((a, c)) not in edge or arrow.get((c, a)):
                    return False
            if arrow.get((c, a)):
                if frozenset((c, b)) not in edge or arrow.get((b, c)):
                    return False
        return True

    def rec(i):
        if i == len(inc):
            return True
        a, b = inc[i]
        for s, t in ((a, b), (b, a)):
            arrow[(s, t)] = True
            if consistent(s, t) and rec(i + 1):
                return True
            del arrow[(s, t)]
        return False

    return rec(0)


def brute_semimodular(n, covers, upper=True):
    leq = leq_matrix(n, covers)
    cov = set(covers)
    for x in range(n):
        for y in range(n):
            m, j = meet(n, leq, x, y), join(n, leq, x, y)
            if upper and (m, x) in cov and (y, j) not in cov:
                return False
            if not upper and (x, j) in cov and (m, y) not in cov:
                return False
    return True


def brute_el(n, covers, f):
    """Both EL conditions by listing every maximal chain of every interval."""
    leq = leq_matrix(n, covers)
    for x in range(n):
        for y in range(n):
            if x == y or not leq[x][y]:
                continue
            chains = maximal_chains(n, covers, x, y, leq)
            rising = [c for c in chains if all(f[(c[i], c[i + 1])] <= f[(c[i + 1], c[i + 2])] for i in range(len(c) - 2))]
            if len(rising) != 1:
                return False
            x1 = rising[0][1]
            for c in chains:
                if c[1] != x1 and not f[(x, x1)] < f[(x, c[1])]:
                    return False
    return True


def brute_unique_rising(n, covers, f):
    leq = leq_matrix(n, covers)
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y]:
                chains = maximal_chains(n, covers, x, y, leq)
                rising = [c for c in chains if all(f[(c[i], c[i + 1])] <= f[(c[i + 1], c[i + 2])] for i in range(len(c) - 2))]
                if len(rising) != 1:
                    return False
    return True
