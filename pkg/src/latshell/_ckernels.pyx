# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, one for one with ``_pykernels``.

Element sets are packed into ``uint64_t`` words, so every function here
requires ``n <= 64``; ``kernels`` routes larger inputs to Python.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

NO_RISING = 0
MULTIPLE_RISING = 1
NOT_LEX_FIRST = 2


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline uint64_t bit(int i) nogil:
    return (<uint64_t>1) << i


cdef inline int lowest(uint64_t m) nogil:
    return __builtin_ctzll(m)


def transitive_closure(int n, order, lower):
    cdef uint64_t *down = <uint64_t *>calloc(max(n, 1), sizeof(uint64_t))
    cdef uint64_t *up = <uint64_t *>calloc(max(n, 1), sizeof(uint64_t))
    cdef uint64_t m
    cdef int x, y, c
    try:
        for x in order:
            m = bit(x)
            for c in lower[x]:
                m |= down[c]
            down[x] = m
        for y in range(n):
            m = down[y]
            while m:
                up[lowest(m)] |= bit(y)
                m &= m - 1
        return [up[i] for i in range(n)], [down[i] for i in range(n)]
    finally:
        free(down)
        free(up)


cdef list extremes(uint64_t common, uint64_t *cone):
    cdef list out = []
    cdef uint64_t m = common
    cdef int i
    while m:
        i = lowest(m)
        if cone[i] & common == bit(i):
            out.append(i)
        m &= m - 1
    return out


def bound_tables(int n, up, down):
    cdef uint64_t *u = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    cdef uint64_t *d = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    cdef int x, y
    cdef list join = [0] * (n * n)
    cdef list meet = [0] * (n * n)
    cdef list mins, maxs
    try:
        for x in range(n):
            u[x] = up[x]
            d[x] = down[x]
        for x in range(n):
            join[x * n + x] = x
            meet[x * n + x] = x
            for y in range(x + 1, n):
                mins = extremes(u[x] & u[y], d)
                if len(mins) != 1:
                    return join, meet, (x, y, 0, tuple(mins))
                maxs = extremes(d[x] & d[y], u)
                if len(maxs) != 1:
                    return join, meet, (x, y, 1, tuple(maxs))
                join[x * n + y] = join[y * n + x] = mins[0]
                meet[x * n + y] = meet[y * n + x] = maxs[0]
        return join, meet, None
    finally:
        free(u)
        free(d)


cdef struct Ctx:
    int n
    int width          # label values are 0 .. width-1
    int *order
    uint64_t *up
    uint64_t *down
    int *uptr          # covers out of z are uidx[uptr[z] .. uptr[z+1]]
    int *uidx
    int *lab           # -1 = unlabeled
    int *cnt           # n * width, rising chain counts saturated at 2
    int *first         # n * width, first atom of the counted chains
    char *has


cdef int ctx_init(Ctx *c, int n, order, up, down, upper, int width) except -1:
    cdef int z, k, total = 0
    c.n = n
    c.width = max(width, 1)
    for z in range(n):
        total += len(upper[z])
    c.order = <int *>malloc(max(n, 1) * sizeof(int))
    c.up = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    c.down = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    c.uptr = <int *>malloc((n + 1) * sizeof(int))
    c.uidx = <int *>malloc(max(total, 1) * sizeof(int))
    c.lab = <int *>malloc(max(total, 1) * sizeof(int))
    c.cnt = <int *>malloc(max(n, 1) * c.width * sizeof(int))
    c.first = <int *>malloc(max(n, 1) * c.width * sizeof(int))
    c.has = <char *>malloc(max(n, 1))
    if not (c.order and c.up and c.down and c.uptr and c.uidx and c.lab and c.cnt and c.first and c.has):
        ctx_free(c)
        raise MemoryError()
    for z in range(n):
        c.order[z] = order[z]
        c.up[z] = up[z]
        c.down[z] = down[z]
    total = 0
    for z in range(n):
        c.uptr[z] = total
        for k in range(len(upper[z])):
            c.uidx[total] = upper[z][k]
            c.lab[total] = -1
            total += 1
    c.uptr[n] = total
    return 0


cdef void ctx_free(Ctx *c):
    free(c.order)
    free(c.up)
    free(c.down)
    free(c.uptr)
    free(c.uidx)
    free(c.lab)
    free(c.cnt)
    free(c.first)
    free(c.has)


cdef int scan(Ctx *c, int *sources, int ns, uint64_t target, bint cond2,
              uint64_t complete, int *out) nogil:
    """Same contract as the Python rising_scan; returns 1 and fills ``out``."""
    cdef int n = c.n, W = c.width
    cdef int s, x, z, w, e, j, l, lab, pc, pf, total, f, flab, a
    cdef uint64_t reach, targets
    cdef int *row
    cdef int *frow
    for s in range(ns):
        x = sources[s]
        reach = c.up[x]
        memset(c.has, 0, n)
        memset(c.cnt, 0, n * W * sizeof(int))
        for e in range(c.uptr[x], c.uptr[x + 1]):
            lab = c.lab[e]
            if lab >= 0:
                w = c.uidx[e]
                c.cnt[w * W + lab] = 1
                c.first[w * W + lab] = w
                c.has[w] = 1
        for j in range(n):
            z = c.order[j]
            if z == x or not (reach >> z) & 1 or not c.has[z]:
                continue
            row = c.cnt + z * W
            frow = c.first + z * W
            for e in range(c.uptr[z], c.uptr[z + 1]):
                lab = c.lab[e]
                if lab < 0:
                    continue
                pc = 0
                pf = -1
                for l in range(lab + 1):
                    if row[l]:
                        if pc == 0:
                            pf = frow[l]
                        pc += row[l]
                        if pc >= 2:
                            pc = 2
                if pc == 0:
                    continue
                w = c.uidx[e]
                if c.cnt[w * W + lab] == 0:
                    c.first[w * W + lab] = pf
                pc += c.cnt[w * W + lab]
                c.cnt[w * W + lab] = 2 if pc >= 2 else pc
                c.has[w] = 1
        targets = reach & target & ~bit(x)
        while targets:
            z = lowest(targets)
            targets &= targets - 1
            total = 0
            f = -1
            if c.has[z]:
                row = c.cnt + z * W
                for l in range(W):
                    if row[l]:
                        if total == 0:
                            f = c.first[z * W + l]
                        total += row[l]
            if total == 0:
                if (complete >> z) & 1:
                    out[0] = 0; out[1] = x; out[2] = z; out[3] = -1; out[4] = -1
                    return 1
                continue
            if total > 1:
                out[0] = 1; out[1] = x; out[2] = z; out[3] = -1; out[4] = -1
                return 1
            if cond2:
                flab = -1
                for e in range(c.uptr[x], c.uptr[x + 1]):
                    if c.uidx[e] == f:
                        flab = c.lab[e]
                for e in range(c.uptr[x], c.uptr[x + 1]):
                    a = c.uidx[e]
                    if a != f and (c.down[z] >> a) & 1 and 0 <= c.lab[e] <= flab:
                        out[0] = 2; out[1] = x; out[2] = z; out[3] = f; out[4] = a
                        return 1
    return 0


cdef int max_label(labels):
    cdef int m = 0
    for row in labels:
        for v in row:
            if v > m:
                m = v
    return m


def rising_scan(int n, order, up, down, upper, labels, sources, uint64_t target_mask,
                bint cond2, uint64_t complete_mask):
    cdef Ctx c
    cdef int out[5]
    cdef int z, k, hit, ns = len(sources)
    cdef int *src = <int *>malloc(max(ns, 1) * sizeof(int))
    if src == NULL:
        raise MemoryError()
    try:
        ctx_init(&c, n, order, up, down, upper, max_label(labels) + 1)
    except BaseException:
        free(src)
        raise
    try:
        for z in range(n):
            for k in range(len(upper[z])):
                c.lab[c.uptr[z] + k] = labels[z][k]
        for k in range(ns):
            src[k] = sources[k]
        with nogil:
            hit = scan(&c, src, ns, target_mask, cond2, complete_mask, out)
        if not hit:
            return None
        return (out[0], out[1], out[2], out[3], out[4])
    finally:
        free(src)
        ctx_free(&c)


cdef struct Search:
    int total
    int max_labels
    int *slot          # flat cover index per step
    int *sptr          # sources of step i are src[sptr[i] .. sptr[i+1]]
    int *src
    uint64_t *target
    uint64_t *complete
    int *stack         # flat indices of labeled covers, in order
    int *bptr          # step i must not be below steps bef[bptr[i] .. bptr[i+1]]
    int *bef


cdef void shift(Ctx *c, Search *s, int depth, int p, int delta) nogil:
    cdef int j, e
    for j in range(depth):
        e = s.stack[j]
        if c.lab[e] >= p:
            c.lab[e] += delta


cdef bint rec(Ctx *c, Search *s, int i, int d, uint64_t done) nogil:
    cdef int pos, p, e, j
    cdef bint fresh, ordered
    cdef int out[5]
    if i == s.total:
        return True
    e = s.slot[i]
    done |= s.complete[i]
    for pos in range(2 * d + 1):
        p = pos >> 1
        fresh = not (pos & 1)
        if fresh:
            if d >= s.max_labels:
                continue
            shift(c, s, i, p, 1)
        c.lab[e] = p
        s.stack[i] = e
        ordered = True
        for j in range(s.bptr[i], s.bptr[i + 1]):
            if c.lab[s.slot[s.bef[j]]] > p:
                ordered = False
                break
        if ordered and not scan(c, s.src + s.sptr[i], s.sptr[i + 1] - s.sptr[i], s.target[i], True, done, out):
            if rec(c, s, i + 1, d + fresh, done):
                return True
        c.lab[e] = -1
        if fresh:
            shift(c, s, i, p + 1, -1)
    return False


def search_labelings(int n, order, up, down, upper, slots, sources, targets, completes, before,
                     int max_labels):
    cdef Ctx c
    cdef Search s
    cdef int i, j, total = len(slots), nsrc = 0, nbef = 0
    cdef bint found
    for i in range(total):
        nsrc += len(sources[i])
        nbef += len(before[i])
    ctx_init(&c, n, order, up, down, upper, max_labels)
    s.total = total
    s.max_labels = max_labels
    s.slot = <int *>malloc(max(total, 1) * sizeof(int))
    s.sptr = <int *>malloc((total + 1) * sizeof(int))
    s.src = <int *>malloc(max(nsrc, 1) * sizeof(int))
    s.target = <uint64_t *>malloc(max(total, 1) * sizeof(uint64_t))
    s.complete = <uint64_t *>malloc(max(total, 1) * sizeof(uint64_t))
    s.stack = <int *>malloc(max(total, 1) * sizeof(int))
    s.bptr = <int *>malloc((total + 1) * sizeof(int))
    s.bef = <int *>malloc(max(nbef, 1) * sizeof(int))
    try:
        if not (s.slot and s.sptr and s.src and s.target and s.complete and s.stack and s.bptr and s.bef):
            raise MemoryError()
        nsrc = 0
        nbef = 0
        for i in range(total):
            s.bptr[i] = nbef
            for j in before[i]:
                s.bef[nbef] = j
                nbef += 1
            s.slot[i] = c.uptr[slots[i][0]] + slots[i][1]
            s.sptr[i] = nsrc
            for j in sources[i]:
                s.src[nsrc] = j
                nsrc += 1
            s.target[i] = targets[i]
            s.complete[i] = completes[i]
        s.sptr[total] = nsrc
        s.bptr[total] = nbef
        with nogil:
            found = rec(&c, &s, 0, 0, 0)
        if not found:
            return None
        return [[c.lab[c.uptr[z] + k] for k in range(c.uptr[z + 1] - c.uptr[z])] for z in range(n)]
    finally:
        free(s.slot)
        free(s.sptr)
        free(s.src)
        free(s.target)
        free(s.complete)
        free(s.stack)
        free(s.bptr)
        free(s.bef)
        ctx_free(&c)
