"""Compiled int64 kernels for the rank oracle.

Every kernel reports overflow risk instead of wrapping; callers then redo
the computation with Python integers.
"""

import numpy as np
from numba import njit

# entries are kept below this so one cross-multiplication fits in int64
_ENTRY_LIMIT = 1 << 31


@njit(cache=True)
def _gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def rank_csr(indptr, indices, data, ncols):
    """Rank of a sparse integer matrix in CSR form with sorted column indices.

    Returns -1 if an entry would leave the safe int64 range.
    """
    piv_start = np.full(ncols, -1, np.int64)
    piv_len = np.zeros(ncols, np.int64)
    cap = max(16, 2 * len(indices))
    pool_c = np.empty(cap, np.int64)
    pool_v = np.empty(cap, np.int64)
    used = 0
    rank = 0
    cur_c = np.empty(ncols, np.int64)
    cur_v = np.empty(ncols, np.int64)
    nxt_c = np.empty(ncols, np.int64)
    nxt_v = np.empty(ncols, np.int64)
    for r in range(len(indptr) - 1):
        cnt = 0
        for t in range(indptr[r], indptr[r + 1]):
            v = data[t]
            if v != 0:
                if abs(v) >= _ENTRY_LIMIT:
                    return -1
                cur_c[cnt] = indices[t]
                cur_v[cnt] = v
                cnt += 1
        while cnt > 0:
            lead = cur_c[cnt - 1]
            st = piv_start[lead]
            if st < 0:
                if used + cnt > cap:
                    cap = 2 * (used + cnt)
                    grown_c = np.empty(cap, np.int64)
                    grown_v = np.empty(cap, np.int64)
                    grown_c[:used] = pool_c[:used]
                    grown_v[:used] = pool_v[:used]
                    pool_c = grown_c
                    pool_v = grown_v
                pool_c[used:used + cnt] = cur_c[:cnt]
                pool_v[used:used + cnt] = cur_v[:cnt]
                piv_start[lead] = used
                piv_len[lead] = cnt
                used += cnt
                rank += 1
                break
            plen = piv_len[lead]
            a = cur_v[cnt - 1]
            b = pool_v[st + plen - 1]
            g = _gcd(a, b)
            ra = b // g
            pb = a // g
            # row*ra - pivot*pb over the union of columns
            i = 0
            j = 0
            m = 0
            while i < cnt or j < plen:
                if j >= plen or (i < cnt and cur_c[i] < pool_c[st + j]):
                    col = cur_c[i]
                    w = cur_v[i] * ra
                    i += 1
                elif i >= cnt or pool_c[st + j] < cur_c[i]:
                    col = pool_c[st + j]
                    w = -pool_v[st + j] * pb
                    j += 1
                else:
                    col = cur_c[i]
                    w = cur_v[i] * ra - pool_v[st + j] * pb
                    i += 1
                    j += 1
                if w != 0:
                    nxt_c[m] = col
                    nxt_v[m] = w
                    m += 1
            content = 0
            for t in range(m):
                content = _gcd(content, nxt_v[t])
                if content == 1:
                    break
            for t in range(m):
                if content > 1:
                    nxt_v[t] //= content
                if abs(nxt_v[t]) >= _ENTRY_LIMIT:
                    return -1
            cur_c, nxt_c = nxt_c, cur_c
            cur_v, nxt_v = nxt_v, cur_v
            cnt = m
    return rank


@njit(cache=True)
def multiplicity_vectors(vals, q, c):
    """All multiplicity vectors of size q and sum c over sorted ``vals``, in
    decreasing lexicographic order, as a (count, n) array."""
    n = vals.shape[0]
    cap = 64
    out = np.empty((cap, n), np.int64)
    count = 0
    if q * vals[0] > c or c > q * vals[n - 1]:
        return out[:0]
    vec = np.zeros(n, np.int64)
    ks = np.zeros(n + 1, np.int64)
    ts = np.zeros(n + 1, np.int64)
    ks[0] = q
    ts[0] = c
    hi = vals[n - 1]
    # depth-first search; vec[i] counts down from ks[i]
    i = 0
    vec[0] = q + 1
    while i >= 0:
        if i == n - 1:
            k = ks[i]
            if k * vals[i] == ts[i]:
                vec[i] = k
                if count == cap:
                    grown = np.empty((cap * 2, n), np.int64)
                    grown[:cap] = out
                    out = grown
                    cap *= 2
                out[count] = vec
                count += 1
            vec[i] = 0
            i -= 1
            continue
        vec[i] -= 1
        if vec[i] < 0:
            vec[i] = 0
            i -= 1
            continue
        j = vec[i]
        rk = ks[i] - j
        rt = ts[i] - j * vals[i]
        if rk * vals[i + 1] <= rt <= rk * hi:
            ks[i + 1] = rk
            ts[i + 1] = rt
            i += 1
            if i < n - 1:
                vec[i] = rk + 1
    return out[:count]


@njit(cache=True)
def oracle_cell(vals, q, c):
    """(|Pi|, dim I, dim I^<) for one cell; dims are -1 on overflow risk."""
    vecs = multiplicity_vectors(vals, q, c)
    size = vecs.shape[0]
    n = vals.shape[0]
    if size == 0:
        return 0, 0, 0
    # full piece: e_0 - e_i for every other member
    indptr = np.arange(0, 2 * size - 1, 2).astype(np.int64)
    indices = np.empty(2 * (size - 1), np.int64)
    data = np.empty(2 * (size - 1), np.int64)
    for i in range(1, size):
        indices[2 * i - 2] = 0
        indices[2 * i - 1] = i
        data[2 * i - 2] = 1
        data[2 * i - 1] = -1
    dim_all = rank_csr(indptr, indices, data, size)
    # lower-degree piece: one star per vertex over the members through it
    first = np.full(n, -1, np.int64)
    nrows = 0
    for i in range(size):
        for v in range(n):
            if vecs[i, v] > 0:
                if first[v] < 0:
                    first[v] = i
                else:
                    nrows += 1
    indptr = np.arange(0, 2 * nrows + 1, 2).astype(np.int64)
    indices = np.empty(2 * nrows, np.int64)
    data = np.empty(2 * nrows, np.int64)
    r = 0
    for i in range(size):
        for v in range(n):
            if vecs[i, v] > 0 and first[v] != i:
                indices[2 * r] = first[v]
                indices[2 * r + 1] = i
                data[2 * r] = 1
                data[2 * r + 1] = -1
                r += 1
    dim_meet = rank_csr(indptr, indices, data, size)
    return size, dim_all, dim_meet
