"""Pure-Python implementations of the hot kernels.

These are the reference versions: ``_ckernels.pyx`` mirrors every function
here with the same signature and the same results, and ``kernels`` picks
one of the two at import time.  Sets of elements are Python ints used as
bit-vectors (bit ``i`` set <=> element ``i`` present).
"""

# violation kinds returned by rising_scan
NO_RISING = 0
MULTIPLE_RISING = 1
NOT_LEX_FIRST = 2


def transitive_closure(n, order, lower):
    """Return ``(up, down)`` bit-vectors of the order generated by covers.

    ``order`` must list all elements so that every element comes after
    the elements it covers; ``lower[x]`` lists the elements ``x`` covers.
    """
    down = [0] * n
    for x in order:
        m = 1 << x
        for c in lower[x]:
            m |= down[c]
        down[x] = m
    up = [0] * n
    for y in range(n):
        m = down[y]
        bit = 1 << y
        while m:
            low = m & -m
            up[low.bit_length() - 1] |= bit
            m ^= low
    return up, down


def _extremes(common, cone):
    # elements m of `common` with cone[m] & common == {m}
    out = []
    m = common
    while m:
        low = m & -m
        i = low.bit_length() - 1
        if cone[i] & common == low:
            out.append(i)
        m ^= low
    return out


def bound_tables(n, up, down):
    """Join and meet tables (flat, row-major) plus the first defect.

    The defect is ``None`` for a lattice, else ``(x, y, side, bounds)``
    for the lexicographically first pair ``x < y`` whose minimal upper
    bounds (``side == 0``) or maximal lower bounds (``side == 1``) are not
    a single element.
    """
    join = [0] * (n * n)
    meet = [0] * (n * n)
    for x in range(n):
        join[x * n + x] = x
        meet[x * n + x] = x
        for y in range(x + 1, n):
            mins = _extremes(up[x] & up[y], down)
            if len(mins) != 1:
                return join, meet, (x, y, 0, tuple(mins))
            maxs = _extremes(down[x] & down[y], up)
            if len(maxs) != 1:
                return join, meet, (x, y, 1, tuple(maxs))
            join[x * n + y] = join[y * n + x] = mins[0]
            meet[x * n + y] = meet[y * n + x] = maxs[0]
    return join, meet, None


def rising_scan(n, order, up, down, upper, labels, sources, target_mask, cond2, complete_mask):
    """Scan intervals ``[x, y]`` for rising-chain violations.

    ``labels[z][k]`` is the integer label of the cover ``z < upper[z][k]``,
    or -1 if that cover is not labeled yet; chains through unlabeled
    covers are ignored.  For every ``x`` in ``sources`` (scanned in the
    given order) and every ``y > x`` whose bit is in ``target_mask``,
    counts weakly rising maximal chains of ``[x, y]`` (saturating at 2)
    and, when ``cond2``, also requires the rising chain to start with a
    label strictly below that of every other labeled atom of ``[x, y]``.
    A missing rising chain is only reported when ``y`` is in
    ``complete_mask``; the other two violations can only get worse as more
    covers are labeled, so they are reported for partial labelings too.

    Returns ``None`` or ``(kind, x, y, a, b)``: the violation with the
    smallest ``y`` for the first offending ``x``.  For ``NOT_LEX_FIRST``
    ``a`` is the first step of the rising chain and ``b`` the competing
    atom; otherwise both are -1.
    """
    for x in sources:
        reach = up[x]
        # states[z]: label -> [count (saturated at 2), first atom]
        states = {}
        for k, w in enumerate(upper[x]):
            if labels[x][k] >= 0:
                states[w] = {labels[x][k]: [1, w]}
        for z in order:
            if z == x or not (reach >> z) & 1:
                continue
            st = states.get(z)
            if not st:
                continue
            items = sorted(st.items())
            for k, w in enumerate(upper[z]):
                lab = labels[z][k]
                if lab < 0:
                    continue
                cnt = 0
                first = -1
                for l, (c, f) in items:
                    if l > lab:
                        break
                    if c and cnt == 0:
                        first = f
                    cnt += c
                if cnt == 0:
                    continue
                dst = states.setdefault(w, {})
                slot = dst.get(lab)
                if slot is None:
                    dst[lab] = [min(cnt, 2), first]
                else:
                    if slot[0] == 0:
                        slot[1] = first
                    slot[0] = min(slot[0] + cnt, 2)
        targets = (reach & target_mask) & ~(1 << x)
        y = 0
        while targets:
            if not (targets >> y) & 1:
                y += 1
                continue
            targets ^= 1 << y
            total = 0
            first = -1
            for c, f in (states.get(y) or {}).values():
                if c and total == 0:
                    first = f
                total += c
            if total == 0:
                if (complete_mask >> y) & 1:
                    return (NO_RISING, x, y, -1, -1)
                y += 1
                continue
            if total > 1:
                return (MULTIPLE_RISING, x, y, -1, -1)
            if cond2:
                first_label = labels[x][upper[x].index(first)]
                for k, a in enumerate(upper[x]):
                    if a != first and (down[y] >> a) & 1 and 0 <= labels[x][k] <= first_label:
                        return (NOT_LEX_FIRST, x, y, first, a)
            y += 1
    return None


def search_labelings(n, order, up, down, upper, slots, sources, targets, completes, before, max_labels):
    """Backtracking search for an integer EL-labeling.

    ``slots[i] = (z, k)`` is the ``i``-th cover to label, ``z < upper[z][k]``.
    After labeling it, intervals from ``sources[i]`` to ``targets[i]`` are
    rescanned with :func:`rising_scan`; ``completes[i]`` adds the elements
    whose intervals become fully labeled at that step.  Every step ``j``
    in ``before[i]`` (all ``j < i``) must carry a label no larger than
    step ``i``; the caller uses this for symmetry breaking.  Labels are built as
    a weak order: each new label equals an existing value or opens a new
    value in one of the gaps, so every order pattern with at most
    ``max_labels`` distinct values is visited once.  Returns the labels
    (ranks ``0..d-1``) as lists parallel to ``upper``, or ``None``.
    """
    labels = [[-1] * len(u) for u in upper]
    total = len(slots)
    assigned = []

    def shift(p, delta):
        for z, k in assigned:
            if labels[z][k] >= p:
                labels[z][k] += delta

    def rec(i, d, done):
        if i == total:
            return True
        z, k = slots[i]
        done |= completes[i]
        for pos in range(2 * d + 1):
            p = pos >> 1
            fresh = not pos & 1
            if fresh:
                if d >= max_labels:
                    continue
                shift(p, 1)
            labels[z][k] = p
            assigned.append((z, k))
            ordered = all(labels[slots[j][0]][slots[j][1]] <= p for j in before[i])
            hit = ordered and rising_scan(n, order, up, down, upper, labels, sources[i], targets[i], True, done)
            if ordered and hit is None and rec(i + 1, d + fresh, done):
                return True
            assigned.pop()
            labels[z][k] = -1
            if fresh:
                shift(p + 1, -1)
        return False

    return labels if rec(0, 0, 0) else None
