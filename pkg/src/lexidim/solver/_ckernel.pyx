# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled multicover search kernels for graphs of order <= 64.

Same contracts as ``_pykernel``; sets are uint64 bitsets.
"""

from libc.stdlib cimport malloc, realloc, free

ctypedef unsigned long long u64


cdef extern from *:
    """
    static inline int lexi_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int lexi_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int lexi_popcount(u64 x) nogil
    int lexi_ctz(u64 x) nogil


cdef struct BnB:
    u64 *cons
    int ncons
    int k
    int best
    u64 best_mask
    long long nodes


cdef void bnb_rec(BnB *st, u64 S, u64 X, int size) noexcept nogil:
    cdef int i, d, a, maxdef = 0, pick_avail = 0, packed = 0
    cdef u64 c, avail, pick = 0, free_ = ~(S | X), low, cand, used = 0
    st.nodes += 1
    for i in range(st.ncons):
        c = st.cons[i]
        d = st.k - lexi_popcount(c & S)
        if d <= 0:
            continue
        avail = c & free_
        a = lexi_popcount(avail)
        if a < d:
            return
        if d > maxdef or (d == maxdef and a < pick_avail):
            maxdef = d
            pick = avail
            pick_avail = a
        if (avail & used) == 0:
            packed += d
            used |= avail
    if maxdef == 0:
        if size < st.best:
            st.best = size
            st.best_mask = S
        return
    if size + (maxdef if maxdef > packed else packed) >= st.best:
        return
    cand = pick
    while lexi_popcount(cand) >= maxdef:
        low = cand & (~cand + 1)
        bnb_rec(st, S | low, X, size + 1)
        if size + maxdef >= st.best:
            return
        X |= low
        cand ^= low


cdef u64 *_pack(list cons) except NULL:
    cdef int m = len(cons)
    cdef u64 *arr = <u64 *> malloc((m if m > 0 else 1) * sizeof(u64))
    if arr == NULL:
        raise MemoryError()
    for i in range(m):
        arr[i] = <u64> cons[i]
    return arr


def branch_and_bound(list cons, int k, int n, forced, int upper, upper_mask):
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    cdef BnB st
    cdef u64 f = <u64> forced
    st.cons = _pack(cons)
    st.ncons = len(cons)
    st.k = k
    st.best = upper
    st.best_mask = <u64> upper_mask
    st.nodes = 0
    try:
        with nogil:
            bnb_rec(&st, f, 0, lexi_popcount(f))
        return st.best, int(st.best_mask), st.nodes
    finally:
        free(st.cons)


cdef struct Lex:
    u64 *cons
    int ncons
    int k
    int n
    int target
    long long limit
    long long found
    long long cap
    bint oom
    u64 *out


cdef bint lex_rec(Lex *st, int i, u64 S, int size) noexcept nogil:
    cdef u64 full = (<u64> -1) if st.n == 64 else ((<u64> 1 << st.n) - 1)
    cdef u64 below = 0 if i == 0 else ((<u64> -1) if i >= 64 else ((<u64> 1 << i) - 1))
    cdef u64 und = full & ~below & ~S
    cdef u64 c, low, avail, used = 0
    cdef u64 *grown
    cdef int j, d, maxdef = 0, nxt, packed = 0
    for j in range(st.ncons):
        c = st.cons[j]
        d = st.k - lexi_popcount(c & S)
        if d > 0:
            avail = c & und
            if lexi_popcount(avail) < d:
                return False
            if d > maxdef:
                maxdef = d
            if (avail & used) == 0:
                packed += d
                used |= avail
    if size + (maxdef if maxdef > packed else packed) > st.target:
        return False
    if maxdef == 0 and size == st.target:
        if st.found == st.cap:
            grown = <u64 *> realloc(st.out, 2 * st.cap * sizeof(u64))
            if grown == NULL:
                st.oom = True
                return True
            st.out = grown
            st.cap *= 2
        st.out[st.found] = S
        st.found += 1
        return st.found >= st.limit
    if lexi_popcount(und) < st.target - size:
        return False
    low = und & (~und + 1)
    nxt = lexi_ctz(low) + 1
    if size < st.target and lex_rec(st, nxt, S | low, size + 1):
        return True
    return lex_rec(st, nxt, S, size)


def lex_solutions(list cons, int k, int n, forced, int target, long long limit):
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    cdef Lex st
    cdef u64 f = <u64> forced
    st.cons = _pack(cons)
    st.ncons = len(cons)
    st.k = k
    st.n = n
    st.target = target
    st.limit = limit
    st.found = 0
    st.cap = 64
    st.oom = False
    st.out = <u64 *> malloc(st.cap * sizeof(u64))
    if st.out == NULL:
        free(st.cons)
        raise MemoryError()
    try:
        with nogil:
            lex_rec(&st, 0, f, lexi_popcount(f))
        if st.oom:
            raise MemoryError()
        return [int(st.out[i]) for i in range(st.found)]
    finally:
        free(st.cons)
        free(st.out)
