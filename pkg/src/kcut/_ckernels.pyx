# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_pykernels`` operation for operation."""
import numpy as np

from libc.math cimport INFINITY
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


def near_cuts(W, double bound):
    cdef const double[:, ::1] a = np.ascontiguousarray(W, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0]
    cdef double[::1] deg = np.zeros(n)
    cdef double[::1] acc = np.zeros(n)
    cdef unsigned char[::1] inside = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t u, v
    cdef long long i, total = (<long long>1) << (n - 1)
    cdef double w = 0.0, s
    cdef int bit
    out_m = []
    out_w = []
    for v in range(n):
        s = 0.0
        for u in range(n):
            s += a[v, u]
        deg[v] = s
    for i in range(1, total):
        bit = __builtin_ctzll(i)
        v = bit + 1
        if inside[v]:
            inside[v] = 0
            for u in range(n):
                acc[u] -= a[v, u]
            w -= deg[v] - 2.0 * acc[v]
        else:
            w += deg[v] - 2.0 * acc[v]
            inside[v] = 1
            for u in range(n):
                acc[u] += a[v, u]
        if w <= bound:
            out_m.append(i ^ (i >> 1))
            out_w.append(w)
    return np.array(out_m, dtype=np.int64), np.array(out_w, dtype=np.float64)


def stoer_wagner(W):
    cdef double[:, ::1] a = np.array(W, dtype=np.float64, order="C")
    cdef Py_ssize_t n = a.shape[0]
    if n < 2:
        raise ValueError("need at least two vertices")
    cdef long[::1] active = np.arange(n, dtype=np.int_)
    cdef long[::1] member_of = np.arange(n, dtype=np.int_)
    cdef double[::1] key = np.zeros(n)
    cdef unsigned char[::1] used = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t na = n, j, idx, remaining
    cdef long v, s, t, prev, last, start
    cdef double best = INFINITY, kw, bk
    cdef long best_group = -1
    best_members = None
    # members tracked as group labels: member_of[x] = representative
    while na > 1:
        start = active[0]
        for j in range(na):
            used[active[j]] = 0
        used[start] = 1
        for j in range(1, na):
            key[active[j]] = a[start, active[j]]
        prev = start
        last = start
        remaining = na - 1
        while remaining > 0:
            bk = -INFINITY
            last = -1
            for j in range(na):
                v = active[j]
                if not used[v] and key[v] > bk:
                    bk = key[v]
                    last = v
            kw = key[last]
            used[last] = 1
            remaining -= 1
            if remaining == 0:
                if kw < best:
                    best = kw
                    best_members = [x for x in range(n) if member_of[x] == last]
                break
            for j in range(na):
                v = active[j]
                if not used[v]:
                    key[v] += a[last, v]
            prev = last
        s = prev
        t = last
        for j in range(n):
            if member_of[j] == t:
                member_of[j] = s
        for j in range(na):
            v = active[j]
            a[s, v] += a[t, v]
            a[v, s] = a[s, v]
        a[s, s] = 0.0
        idx = 0
        for j in range(na):
            if active[j] != t:
                active[idx] = active[j]
                idx += 1
        na -= 1
    side = np.zeros(n, dtype=bool)
    side[best_members] = True
    return best, side


cdef struct BBState:
    int n
    int k
    double *w          # n*n
    double *blockw     # k*n
    double *assigned   # n
    int *labels
    int *best_labels
    double best


cdef double _lower_bound(BBState *st, int i, int used) noexcept nogil:
    cdef double lb = 0.0, au, m, c
    cdef int u, b
    for u in range(i, st.n):
        au = st.assigned[u]
        m = au
        for b in range(used):
            c = au - st.blockw[b * st.n + u]
            if c < m:
                m = c
        lb += m
    return lb


cdef void _rec(BBState *st, int i, int used, double cost) noexcept nogil:
    cdef int n = st.n, k = st.k
    cdef int b, top, new_used, u
    cdef double au, c
    cdef double *row
    cdef double *bw
    if i == n:
        if used == k and cost < st.best:
            st.best = cost
            for u in range(n):
                st.best_labels[u] = st.labels[u]
        return
    if cost + _lower_bound(st, i, used) >= st.best:
        return
    au = st.assigned[i]
    row = st.w + i * n
    top = used + 1 if used < k else used
    for b in range(top):
        new_used = used + 1 if b == used else used
        if k - new_used > n - i - 1:
            continue
        c = cost + au - st.blockw[b * n + i]
        if c >= st.best:
            continue
        st.labels[i] = b
        bw = st.blockw + b * n
        for u in range(n):
            bw[u] += row[u]
            st.assigned[u] += row[u]
        _rec(st, i + 1, new_used, c)
        for u in range(n):
            bw[u] -= row[u]
            st.assigned[u] -= row[u]
        st.labels[i] = -1


def min_kpartition(W, int k, double upper):
    cdef const double[:, ::1] a = np.ascontiguousarray(W, dtype=np.float64)
    cdef int n = a.shape[0]
    cdef BBState st
    cdef int u
    cdef bint found
    st.n = n
    st.k = k
    st.best = upper
    st.w = <double *> malloc(n * n * sizeof(double))
    st.blockw = <double *> malloc(k * n * sizeof(double))
    st.assigned = <double *> malloc(n * sizeof(double))
    st.labels = <int *> malloc(n * sizeof(int))
    st.best_labels = <int *> malloc(n * sizeof(int))
    try:
        for u in range(n * n):
            st.w[u] = a[u // n, u % n]
        for u in range(k * n):
            st.blockw[u] = 0.0
        for u in range(n):
            st.assigned[u] = 0.0
            st.labels[u] = -1
            st.best_labels[u] = -2
        with nogil:
            _rec(&st, 0, 0, 0.0)
        found = n > 0 and st.best_labels[0] != -2
        if not found:
            return float("inf"), None
        labels = np.array([st.best_labels[u] for u in range(n)], dtype=np.int64)
        return st.best, labels
    finally:
        free(st.w)
        free(st.blockw)
        free(st.assigned)
        free(st.labels)
        free(st.best_labels)


cdef int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef double _coloring_value(int n, unsigned long long red, int m, const long long *eu,
                            const long long *ev, const long long *ew, int k, double tau,
                            int *parent, int *size, double *cost, double *dp) noexcept nogil:
    cdef int e, v, r, ru, rv, j, s
    cdef double c
    for v in range(n):
        parent[v] = v
        size[v] = 0
        cost[v] = 0.0
    for e in range(m):
        if (red >> eu[e]) & 1 and (red >> ev[e]) & 1:
            ru = _find(parent, eu[e])
            rv = _find(parent, ev[e])
            if ru != rv:
                parent[ru] = rv
    for v in range(n):
        if (red >> v) & 1:
            size[_find(parent, v)] += 1
    for e in range(m):
        if (red >> eu[e]) & 1:
            cost[_find(parent, eu[e])] += ew[e]
        elif (red >> ev[e]) & 1:
            cost[_find(parent, ev[e])] += ew[e]
    dp[0] = 0.0
    for j in range(1, k + 1):
        dp[j] = INFINITY
    for v in range(n):
        s = size[v]
        if s == 0 or parent[v] != v:
            continue
        c = cost[v]
        if s > k or c > tau:
            continue
        for j in range(k, s - 1, -1):
            if dp[j - s] + c < dp[j]:
                dp[j] = dp[j - s] + c
    return dp[k]


def pvc_best_coloring(int n, int n_free, eu, ev, ew, int k, double tau, masks=None):
    cdef const long long[::1] u_ = np.ascontiguousarray(eu, dtype=np.int64)
    cdef const long long[::1] v_ = np.ascontiguousarray(ev, dtype=np.int64)
    cdef const long long[::1] w_ = np.ascontiguousarray(ew, dtype=np.int64)
    cdef int m = u_.shape[0]
    cdef const long long[::1] mk
    cdef unsigned long long red, total
    cdef long long i, nm
    cdef double best = INFINITY, val
    cdef long long best_mask = -1
    cdef int *parent = <int *> malloc(n * sizeof(int))
    cdef int *size = <int *> malloc(n * sizeof(int))
    cdef double *cost = <double *> malloc(n * sizeof(double))
    cdef double *dp = <double *> malloc((k + 1) * sizeof(double))
    cdef const long long *pu = &u_[0] if m > 0 else NULL
    cdef const long long *pv = &v_[0] if m > 0 else NULL
    cdef const long long *pw = &w_[0] if m > 0 else NULL
    try:
        if masks is None:
            total = (<unsigned long long>1) << n_free
            with nogil:
                for red in range(total):
                    if __builtin_popcountll(red) < k:
                        continue
                    val = _coloring_value(n, red, m, pu, pv, pw, k, tau,
                                          parent, size, cost, dp)
                    if val < best:
                        best = val
                        best_mask = <long long>red
        else:
            mk = np.ascontiguousarray(masks, dtype=np.int64)
            nm = mk.shape[0]
            with nogil:
                for i in range(nm):
                    red = <unsigned long long>mk[i]
                    if __builtin_popcountll(red) < k:
                        continue
                    val = _coloring_value(n, red, m, pu, pv, pw, k, tau,
                                          parent, size, cost, dp)
                    if val < best:
                        best = val
                        best_mask = <long long>red
        return best, best_mask
    finally:
        free(parent)
        free(size)
        free(cost)
        free(dp)
