# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirror of the pure Python graph canonizer.

Same search, same results, for graphs on at most 63 vertices: adjacency
and vertex sets live in 64-bit words and the candidate row codes are
maintained incrementally instead of being recomputed per node.
"""

from libc.stdlib cimport free, realloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Search:
    int n
    u64 masks[63]
    int order[63]
    u64 codes[63]
    u64 curcode[63]
    u64 best[63]
    int best_perm[63]
    bint have_best
    bint have_perm
    u64 unplaced
    unsigned char *gens
    unsigned char *stabflag
    int ngens
    int capgens


cdef int _append_gen(Search *s, unsigned char *g) except -1:
    cdef int gi, i
    cdef bint same
    for gi in range(s.ngens):
        same = True
        for i in range(s.n):
            if s.gens[gi * s.n + i] != g[i]:
                same = False
                break
        if same:
            return 0
    if s.ngens == s.capgens:
        s.capgens = s.capgens * 2 if s.capgens else 64
        s.gens = <unsigned char *>realloc(s.gens, s.capgens * s.n)
        s.stabflag = <unsigned char *>realloc(s.stabflag, s.capgens)
        if s.gens == NULL or s.stabflag == NULL:
            raise MemoryError()
    for i in range(s.n):
        s.gens[s.ngens * s.n + i] = g[i]
    s.ngens += 1
    return 0


cdef bint _in_orbit(Search *s, int v, u64 tried, int k):
    cdef int gi, i, u, w, nstab
    cdef u64 seen, frontier
    cdef unsigned char *g
    cdef bint fixed
    if tried == 0 or s.ngens == 0:
        return False
    nstab = 0
    for gi in range(s.ngens):
        g = s.gens + gi * s.n
        fixed = True
        for i in range(k):
            if g[s.order[i]] != <unsigned char>s.order[i]:
                fixed = False
                break
        s.stabflag[gi] = 1 if fixed else 0
        if fixed:
            nstab += 1
    if nstab == 0:
        return False
    seen = tried
    frontier = tried
    while frontier != 0:
        u = __builtin_ctzll(frontier)
        frontier &= frontier - 1
        for gi in range(s.ngens):
            if not s.stabflag[gi]:
                continue
            w = s.gens[gi * s.n + u]
            if w == v:
                return True
            if not ((seen >> w) & 1):
                seen |= (<u64>1) << w
                frontier |= (<u64>1) << w
    return False


cdef void _dfs(Search *s, int k) except *:
    cdef int i, v, w
    cdef u64 cmin, tried, rem, rem2, bitv
    cdef unsigned char gbuf[63]
    cdef bint first, ident
    if k == s.n:
        if not s.have_perm:
            for i in range(s.n):
                s.best[i] = s.codes[i]
                s.best_perm[i] = s.order[i]
            s.have_best = True
            s.have_perm = True
        else:
            for i in range(s.n):
                gbuf[s.best_perm[i]] = <unsigned char>s.order[i]
            ident = True
            for i in range(s.n):
                if gbuf[i] != <unsigned char>i:
                    ident = False
                    break
            if not ident:
                _append_gen(s, gbuf)
        return
    cmin = 0
    first = True
    rem = s.unplaced
    while rem != 0:
        v = __builtin_ctzll(rem)
        rem &= rem - 1
        if first or s.curcode[v] < cmin:
            cmin = s.curcode[v]
            first = False
    if s.have_best:
        if cmin > s.best[k]:
            return
        if cmin < s.best[k]:
            s.have_best = False
            s.have_perm = False
    tried = 0
    rem = s.unplaced
    while rem != 0:
        v = __builtin_ctzll(rem)
        rem &= rem - 1
        if s.curcode[v] != cmin:
            continue
        bitv = (<u64>1) << v
        if not _in_orbit(s, v, tried, k):
            s.order[k] = v
            s.codes[k] = cmin
            s.unplaced ^= bitv
            rem2 = s.unplaced
            while rem2 != 0:
                w = __builtin_ctzll(rem2)
                rem2 &= rem2 - 1
                s.curcode[w] = (s.curcode[w] << 1) | ((s.masks[w] >> v) & 1)
            _dfs(s, k + 1)
            rem2 = s.unplaced
            while rem2 != 0:
                w = __builtin_ctzll(rem2)
                rem2 &= rem2 - 1
                s.curcode[w] >>= 1
            s.unplaced |= bitv
        tried |= bitv


def canonical_order(n, masks, bound=None):
    """Compiled counterpart of :func:`seidel._canon_py.canonical_order`."""
    if n == 0:
        return (), (), []
    if n > 63:
        raise ValueError("compiled kernel handles at most 63 vertices")
    cdef Search s
    cdef int i, gi
    s.n = n
    s.unplaced = 0
    for i in range(n):
        s.masks[i] = masks[i]
        s.curcode[i] = 0
        s.unplaced |= (<u64>1) << i
    s.have_best = False
    s.have_perm = False
    if bound is not None:
        for i in range(n):
            s.best[i] = bound[i]
        s.have_best = True
    s.gens = NULL
    s.stabflag = NULL
    s.ngens = 0
    s.capgens = 0
    try:
        _dfs(&s, 0)
        if not s.have_perm:
            return None
        key = tuple(s.best[i] for i in range(n))
        perm = tuple(s.best_perm[i] for i in range(n))
        gens = [
            tuple(s.gens[gi * s.n + i] for i in range(n)) for gi in range(s.ngens)
        ]
        return key, perm, gens
    finally:
        if s.gens != NULL:
            free(s.gens)
        if s.stabflag != NULL:
            free(s.stabflag)
