# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts as ``wmp._pykernels``."""

from libc.stdint cimport uint64_t


cdef extern from *:
    """
    static inline int wmp_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int wmp_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int wmp_popcount(unsigned long long x) nogil
    int wmp_ctz(unsigned long long x) nogil


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef inline uint64_t full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return bit(n) - 1


cdef int load(object rows, int n, uint64_t* out) except -1:
    cdef int i
    if n < 0 or n > 64:
        raise ValueError("kernels handle at most 64 vertices")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


# ---------------------------------------------------------------- odd holes

cdef int grow(const uint64_t* adj, int s, int* path, int length,
              uint64_t blocked, uint64_t above) nogil:
    """Returns the cycle length written into ``path`` or 0."""
    cdef int end = path[length - 1]
    cdef uint64_t cand = adj[end] & above & ~blocked
    cdef uint64_t s_bit = bit(s)
    cdef int v, k, found
    while cand:
        v = wmp_ctz(cand)
        cand &= cand - 1
        if adj[v] & s_bit:
            k = length + 1
            if k >= 5 and (k & 1) and v > path[1]:
                path[length] = v
                return k
            continue
        path[length] = v
        found = grow(adj, s, path, length + 1, blocked | adj[end] | bit(v), above)
        if found:
            return found
    return 0


def odd_hole(rows, int n):
    cdef uint64_t adj[64]
    cdef int path[64]
    cdef int s, p1, k
    cdef uint64_t above, first
    load(rows, n, adj)
    for s in range(n):
        above = full_mask(n) & ~(bit(s) | (bit(s) - 1))
        first = adj[s] & above
        while first:
            p1 = wmp_ctz(first)
            first &= first - 1
            path[0] = s
            path[1] = p1
            k = grow(adj, s, path, 2, bit(s) | bit(p1), above)
            if k:
                return [path[i] for i in range(k)]
    return None


# ---------------------------------------------------------------- cliques

cdef int color_classes(const uint64_t* adj, uint64_t cand, int* order, int* bounds) nogil:
    cdef int color = 0, count = 0, v
    cdef uint64_t rest = cand, q
    while rest:
        color += 1
        q = rest
        while q:
            v = wmp_ctz(q)
            q &= ~adj[v] & ~bit(v)
            rest &= ~bit(v)
            order[count] = v
            bounds[count] = color
            count += 1
    return count


cdef void expand(const uint64_t* adj, int size, uint64_t cand, int* best) nogil:
    cdef int order[64]
    cdef int bounds[64]
    cdef int count = color_classes(adj, cand, order, bounds)
    cdef int idx, v
    cdef uint64_t sub
    idx = count - 1
    while idx >= 0:
        if size + bounds[idx] <= best[0]:
            return
        v = order[idx]
        sub = cand & adj[v]
        if sub:
            expand(adj, size + 1, sub, best)
        elif size + 1 > best[0]:
            best[0] = size + 1
        cand &= ~bit(v)
        idx -= 1


cdef int first_clique(const uint64_t* adj, uint64_t chosen, uint64_t cand,
                      int need, uint64_t* out) nogil:
    cdef int order[64]
    cdef int bounds[64]
    cdef int count, v
    if need == 0:
        out[0] = chosen
        return 1
    while cand:
        if wmp_popcount(cand) < need:
            return 0
        count = color_classes(adj, cand, order, bounds)
        if bounds[count - 1] < need:
            return 0
        v = wmp_ctz(cand)
        cand &= ~bit(v)
        if first_clique(adj, chosen | bit(v), cand & adj[v], need - 1, out):
            return 1
    return 0


def clique_number(rows, int n):
    cdef uint64_t adj[64]
    cdef int best = 0
    load(rows, n, adj)
    expand(adj, 0, full_mask(n), &best)
    return best


def max_clique(rows, int n):
    cdef uint64_t adj[64]
    cdef int best = 0
    cdef uint64_t out = 0
    load(rows, n, adj)
    expand(adj, 0, full_mask(n), &best)
    first_clique(adj, 0, full_mask(n), best, &out)
    return out


# ---------------------------------------------------------------- embeddings

cdef int place(const uint64_t* adj, const uint64_t* padj, const int* hdeg,
               const int* pdeg, int pn, uint64_t full, int x, uint64_t used,
               int* image) nogil:
    cdef uint64_t cand
    cdef int prev, y
    if x == pn:
        return 1
    cand = full & ~used
    for prev in range(x):
        if (padj[x] >> prev) & 1:
            cand &= adj[image[prev]]
        else:
            cand &= ~adj[image[prev]]
    while cand:
        y = wmp_ctz(cand)
        cand &= cand - 1
        if hdeg[y] < pdeg[x]:
            continue
        image[x] = y
        if place(adj, padj, hdeg, pdeg, pn, full, x + 1, used | bit(y), image):
            return 1
    return 0


def induced_embedding(rows, int n, prows, int pn):
    cdef uint64_t adj[64]
    cdef uint64_t padj[64]
    cdef int hdeg[64]
    cdef int pdeg[64]
    cdef int image[64]
    cdef int i
    if pn > n:
        return None
    load(rows, n, adj)
    load(prows, pn, padj)
    for i in range(n):
        hdeg[i] = wmp_popcount(adj[i])
    for i in range(pn):
        pdeg[i] = wmp_popcount(padj[i])
    if place(adj, padj, hdeg, pdeg, pn, full_mask(n), 0, 0, image):
        return [image[i] for i in range(pn)]
    return None


# ---------------------------------------------------------------- canonical codes

cdef void canon(const uint64_t* adj, int n, int total, const int* block_end,
                const int* block_start, int pos, uint64_t used, int* order,
                uint64_t prefix, uint64_t* best, bint* have) nogil:
    cdef int v, i, bits
    cdef uint64_t code, avail, row
    if pos == n:
        if not have[0] or prefix < best[0]:
            best[0] = prefix
            have[0] = True
        return
    avail = 0
    for v in range(block_start[pos], block_end[pos]):
        avail |= bit(order[n + v])
    avail &= ~used
    while avail:
        v = wmp_ctz(avail)
        avail &= avail - 1
        code = prefix
        row = adj[v]
        for i in range(pos):
            code = (code << 1) | ((row >> order[i]) & 1)
        bits = (pos + 1) * pos // 2
        if have[0] and bits > 0 and code > (best[0] >> (total - bits)):
            continue
        order[pos] = v
        canon(adj, n, total, block_end, block_start, pos + 1, used | bit(v),
              order, code, best, have)


def canonical_code(rows, int n):
    """Minimum upper-triangle code over degree-ascending vertex orders."""
    cdef uint64_t adj[64]
    cdef int order[128]
    cdef int block_start[64]
    cdef int block_end[64]
    cdef int k, start
    cdef uint64_t best = 0
    cdef bint have = False
    if n > 11:
        from ._pykernels import canonical_code as slow
        return slow(rows, n)
    load(rows, n, adj)
    # order[n:] lists vertices sorted by degree; each position draws from its block
    by_degree = sorted(range(n), key=lambda v: (wmp_popcount(adj[v]), v))
    for k in range(n):
        order[n + k] = by_degree[k]
    start = 0
    for k in range(n):
        if k > 0 and wmp_popcount(adj[by_degree[k]]) != wmp_popcount(adj[by_degree[k - 1]]):
            start = k
        block_start[k] = start
    for k in range(n - 1, -1, -1):
        if k == n - 1 or block_start[k + 1] != block_start[k]:
            block_end[k] = k + 1
        else:
            block_end[k] = block_end[k + 1]
    canon(adj, n, n * (n - 1) // 2, block_end, block_start, 0, 0, order, 0, &best, &have)
    return best
