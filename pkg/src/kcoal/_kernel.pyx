# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search core: maximum coalition partitions by pruned
restricted-growth-string enumeration.

Must stay behaviorally identical to ``_kernel_py.solve``; the test suite
compares the two on (value, rgs, explored).
"""

cdef extern from *:
    int __builtin_popcount(unsigned int x)


cdef struct SearchState:
    int n
    int k
    bint total
    unsigned int adj[16]
    unsigned int blocks[16]
    int cur[16]
    int best[16]
    int best_value
    bint found
    unsigned long long explored


cdef bint _dominates(SearchState* st, unsigned int s) noexcept:
    cdef int v
    for v in range(st.n):
        if st.total or not (s >> v) & 1:
            if __builtin_popcount(st.adj[v] & s) < st.k:
                return False
    return True


cdef bint _valid(SearchState* st, int b) noexcept:
    cdef bint dom[16]
    cdef int i, j
    cdef bint found
    for i in range(b):
        dom[i] = _dominates(st, st.blocks[i])
        if dom[i] and (st.total or __builtin_popcount(st.blocks[i]) != st.k):
            return False
    for i in range(b):
        if dom[i]:
            continue
        found = False
        for j in range(b):
            if j != i and not dom[j] and _dominates(st, st.blocks[i] | st.blocks[j]):
                found = True
                break
        if not found:
            return False
    return True


cdef void _search(SearchState* st, int pos, int b) noexcept:
    cdef int t
    cdef unsigned int bit
    if b + (st.n - pos) <= st.best_value:
        return
    if pos == st.n:
        st.explored += 1
        if _valid(st, b):
            st.best_value = b
            st.found = True
            for t in range(st.n):
                st.best[t] = st.cur[t]
        return
    bit = 1u << pos
    for t in range(b + 1):
        st.cur[pos] = t
        if t == b:
            st.blocks[b] = bit
            _search(st, pos + 1, b + 1)
        else:
            st.blocks[t] |= bit
            _search(st, pos + 1, b)
            st.blocks[t] &= ~bit


def solve(adj, int k, bint total):
    """Same contract as _kernel_py.solve: (value, rgs or None, explored)."""
    cdef SearchState st
    cdef int n = len(adj)
    cdef int i
    if n == 0:
        return 0, None, 0
    if n > 16:
        raise ValueError(f"kernel supports at most 16 vertices, got {n}")
    st.n = n
    st.k = k
    st.total = total
    st.best_value = 0
    st.found = False
    st.explored = 0
    for i in range(n):
        st.adj[i] = adj[i]
    _search(&st, 0, 0)
    if not st.found:
        return 0, None, st.explored
    return st.best_value, [st.best[i] for i in range(n)], st.explored
