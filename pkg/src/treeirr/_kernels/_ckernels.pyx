# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Semantics mirror ``_pykernels`` exactly; the test
suite holds both backends to identical outputs."""

from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy

from . import _pykernels

BACKEND = "cython"

# Rooted-code buffers grow like n^2 in the worst case; orders this large
# are never on the hot path, so hand them to the pure twin instead.
cdef int MAX_C_ORDER = 4096


cdef int _second_one(int *layout, int n) noexcept nogil:
    cdef int i
    for i in range(2, n):
        if layout[i] == 1:
            return i
    return n


cdef bint _advance(int *layout, int n, int p) noexcept nogil:
    # Beyer-Hedetniemi successor of a rooted level sequence, in place.
    cdef int q, i
    if p < 0:
        p = n - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return False
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    for i in range(p, n):
        layout[i] = layout[i - p + q]
    return True


cdef bint _is_free(int *layout, int n, int m) noexcept nogil:
    # Free-tree test: first root subtree vs. the rest (height, then size,
    # then lexicographic order).
    cdef int lh = 0, rh = 0, i, a, b
    cdef int len_l = m - 1, len_r = n - m + 1
    for i in range(1, m):
        if layout[i] - 1 > lh:
            lh = layout[i] - 1
    for i in range(m, n):
        if layout[i] > rh:
            rh = layout[i]
    if rh != lh:
        return rh > lh
    if len_l != len_r:
        return len_l < len_r
    for i in range(1, len_l):
        a = layout[1 + i] - 1
        b = layout[m + i - 1]
        if a != b:
            return a < b
    return True


def level_sequences(int n):
    """Canonical level sequences of all free trees on ``n`` vertices."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return [(0,)]
    if n == 2:
        return [(0, 1)]
    cdef int *layout = <int *> malloc(n * sizeof(int))
    if layout is NULL:
        raise MemoryError()
    cdef list out = []
    cdef int i, k, m, p, old, m2, h
    cdef bint alive = True
    try:
        k = 0
        for i in range(n // 2 + 1):
            layout[k] = i
            k += 1
        for i in range(1, (n + 1) // 2):
            layout[k] = i
            k += 1
        while alive:
            m = _second_one(layout, n)
            if not _is_free(layout, n, m):
                p = m - 1
                old = layout[p]
                if not _advance(layout, n, p):
                    break
                if old > 2:
                    m2 = _second_one(layout, n)
                    h = 0
                    for i in range(1, m2):
                        if layout[i] - 1 > h:
                            h = layout[i] - 1
                    for i in range(h + 1):
                        layout[n - h - 1 + i] = i + 1
            out.append(tuple([layout[i] for i in range(n)]))
            alive = _advance(layout, n, -1)
    finally:
        free(layout)
    return out


cdef struct _Adj:
    int *deg
    int *offset
    int *nbr


cdef bint _build_adj(_Adj *adj, int n, object flat_edges) except False:
    cdef int m = n - 1
    cdef int k, u, v
    adj.deg = <int *> malloc(n * sizeof(int))
    adj.offset = <int *> malloc((n + 1) * sizeof(int))
    adj.nbr = <int *> malloc(2 * m * sizeof(int))
    if adj.deg is NULL or adj.offset is NULL or adj.nbr is NULL:
        _free_adj(adj)
        raise MemoryError()
    for k in range(n):
        adj.deg[k] = 0
    for k in range(2 * m):
        u = flat_edges[k]
        adj.deg[u] += 1
    adj.offset[0] = 0
    for k in range(n):
        adj.offset[k + 1] = adj.offset[k] + adj.deg[k]
        adj.deg[k] = 0
    for k in range(0, 2 * m, 2):
        u = flat_edges[k]
        v = flat_edges[k + 1]
        adj.nbr[adj.offset[u] + adj.deg[u]] = v
        adj.deg[u] += 1
        adj.nbr[adj.offset[v] + adj.deg[v]] = u
        adj.deg[v] += 1
    return True


cdef void _free_adj(_Adj *adj) noexcept:
    free(adj.deg)
    free(adj.offset)
    free(adj.nbr)


cdef int _find_centers(_Adj *adj, int n, int *centers) noexcept:
    # Leaf peeling; returns 1 or 2 center ids.
    cdef int *work = <int *> malloc(2 * n * sizeof(int))
    cdef int *layer = work
    cdef int *nxt = work + n
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int v, w, i, j, ln, nn, remaining
    if work is NULL or deg is NULL:
        free(work)
        free(deg)
        return -1
    ln = 0
    for v in range(n):
        deg[v] = adj.deg[v]
        if deg[v] <= 1:
            layer[ln] = v
            ln += 1
    remaining = n
    while remaining > 2:
        remaining -= ln
        nn = 0
        for i in range(ln):
            v = layer[i]
            for j in range(adj.offset[v], adj.offset[v + 1]):
                w = adj.nbr[j]
                deg[w] -= 1
                if deg[w] == 1:
                    nxt[nn] = w
                    nn += 1
        layer, nxt = nxt, layer
        ln = nn
    for i in range(ln):
        centers[i] = layer[i]
    free(work)
    free(deg)
    return ln


cdef bint _code_less(char *a, int la, char *b, int lb) noexcept nogil:
    cdef int l = la if la < lb else lb
    cdef int c = memcmp(a, b, l)
    if c != 0:
        return c < 0
    return la < lb


cdef bytes _rooted_code(_Adj *adj, int n, int root):
    cdef int *parent = <int *> malloc(n * sizeof(int))
    cdef int *order = <int *> malloc(n * sizeof(int))
    cdef int *size = <int *> malloc(n * sizeof(int))
    cdef long *start = <long *> malloc(n * sizeof(long))
    cdef char *arena = NULL
    cdef int i, j, v, w, head, kids, ki, kj
    cdef long total, pos
    cdef int *kid = NULL
    cdef bytes result
    if parent is NULL or order is NULL or size is NULL or start is NULL:
        raise MemoryError()
    try:
        for i in range(n):
            parent[i] = -1
        parent[root] = root
        order[0] = root
        head = 1
        i = 0
        while i < head:
            v = order[i]
            for j in range(adj.offset[v], adj.offset[v + 1]):
                w = adj.nbr[j]
                if parent[w] < 0:
                    parent[w] = v
                    order[head] = w
                    head += 1
            i += 1
        for i in range(n):
            size[i] = 1
        for i in range(n - 1, 0, -1):
            v = order[i]
            size[parent[v]] += size[v]
        total = 0
        for i in range(n):
            start[i] = total
            total += 2 * size[i]
        arena = <char *> malloc(total if total > 0 else 1)
        kid = <int *> malloc(n * sizeof(int))
        if arena is NULL or kid is NULL:
            raise MemoryError()
        for i in range(n - 1, -1, -1):
            v = order[i]
            kids = 0
            for j in range(adj.offset[v], adj.offset[v + 1]):
                w = adj.nbr[j]
                if parent[w] == v and w != v:
                    kid[kids] = w
                    kids += 1
            # insertion sort by code bytes; child lists are tiny
            for ki in range(1, kids):
                w = kid[ki]
                kj = ki - 1
                while kj >= 0 and _code_less(
                    arena + start[w], 2 * size[w],
                    arena + start[kid[kj]], 2 * size[kid[kj]],
                ):
                    kid[kj + 1] = kid[kj]
                    kj -= 1
                kid[kj + 1] = w
            pos = start[v]
            arena[pos] = b'('
            pos += 1
            for ki in range(kids):
                w = kid[ki]
                memcpy(arena + pos, arena + start[w], 2 * size[w])
                pos += 2 * size[w]
            arena[pos] = b')'
        result = arena[start[root]:start[root] + 2 * size[root]]
        return result
    finally:
        free(parent)
        free(order)
        free(size)
        free(start)
        free(arena)
        free(kid)


def canon_code(int n, flat_edges):
    """Relabeling-invariant code; bicentral trees take the smaller rooting."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return b"()"
    if n > MAX_C_ORDER:
        return _pykernels.canon_code(n, flat_edges)
    cdef _Adj adj
    cdef int centers[2]
    cdef int ncenters
    cdef bytes first, second
    centers[0] = 0
    centers[1] = 0
    _build_adj(&adj, n, flat_edges)
    try:
        ncenters = _find_centers(&adj, n, centers)
        if ncenters < 0:
            raise MemoryError()
        first = _rooted_code(&adj, n, centers[0])
        if ncenters == 2:
            second = _rooted_code(&adj, n, centers[1])
            if second < first:
                return second
        return first
    finally:
        _free_adj(&adj)


def index_bundle(int n, flat_edges):
    """(irr, irr_T, sigma, M1, M2), exact in 64-bit (orders up to 10^4)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    cdef int m = n - 1
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *edges = <int *> malloc((2 * m if m > 0 else 1) * sizeof(int))
    cdef long long irr = 0, irr_t = 0, sigma = 0, m1 = 0, m2 = 0
    cdef long long d
    cdef int k, i, j, du, dv
    if deg is NULL or edges is NULL:
        free(deg)
        free(edges)
        raise MemoryError()
    try:
        for k in range(n):
            deg[k] = 0
        for k in range(2 * m):
            edges[k] = flat_edges[k]
            deg[edges[k]] += 1
        for k in range(0, 2 * m, 2):
            du = deg[edges[k]]
            dv = deg[edges[k + 1]]
            d = du - dv if du >= dv else dv - du
            irr += d
            sigma += d * d
            m2 += <long long> du * dv
        for i in range(n):
            m1 += <long long> deg[i] * deg[i]
            for j in range(i + 1, n):
                irr_t += deg[i] - deg[j] if deg[i] >= deg[j] else deg[j] - deg[i]
        return (irr, irr_t, sigma, m1, m2)
    finally:
        free(deg)
        free(edges)
