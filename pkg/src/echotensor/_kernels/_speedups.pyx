# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the sparse-tensor and graph hot loops.

Same contracts as ``_reference``; selected at import time by the package
``__init__`` when the extension built successfully.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

IMPLEMENTATION = "compiled"


def mttkrp(ii, jj, kk, vals, shape, mode, u, v, w):
    factors = (u, v, w)
    coords = (ii, jj, kk)
    a, b = [np.ascontiguousarray(f, dtype=np.float64)
            for m, f in enumerate(factors) if m != mode]
    ia, ib = [np.ascontiguousarray(c, dtype=np.int64)
              for m, c in enumerate(coords) if m != mode]
    idx = np.ascontiguousarray(coords[mode], dtype=np.int64)
    out = np.zeros((shape[mode], a.shape[1]))
    _mttkrp_loop(idx, ia, ib, np.ascontiguousarray(vals, dtype=np.float64),
                 a, b, out)
    return out


cdef void _mttkrp_loop(cnp.int64_t[::1] idx, cnp.int64_t[::1] ia,
                       cnp.int64_t[::1] ib, cnp.float64_t[::1] vals,
                       cnp.float64_t[:, ::1] a, cnp.float64_t[:, ::1] b,
                       cnp.float64_t[:, ::1] out):
    cdef Py_ssize_t e, r, nnz = vals.shape[0], rank = a.shape[1]
    cdef cnp.int64_t p, q, t
    cdef double val
    for e in range(nnz):
        val = vals[e]
        t = idx[e]
        p = ia[e]
        q = ib[e]
        for r in range(rank):
            out[t, r] += val * a[p, r] * b[q, r]


def ttm_pair(ii, jj, kk, vals, shape, mode, a, b):
    coords = (ii, jj, kk)
    ia, ib = [np.ascontiguousarray(c, dtype=np.int64)
              for m, c in enumerate(coords) if m != mode]
    idx = np.ascontiguousarray(coords[mode], dtype=np.int64)
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    out = np.zeros((shape[mode], a.shape[1], b.shape[1]))
    _ttm_pair_loop(idx, ia, ib, np.ascontiguousarray(vals, dtype=np.float64),
                   a, b, out)
    return out


cdef void _ttm_pair_loop(cnp.int64_t[::1] idx, cnp.int64_t[::1] ia,
                         cnp.int64_t[::1] ib, cnp.float64_t[::1] vals,
                         cnp.float64_t[:, ::1] a, cnp.float64_t[:, ::1] b,
                         cnp.float64_t[:, :, ::1] out):
    cdef Py_ssize_t e, p, q, nnz = vals.shape[0]
    cdef Py_ssize_t ra = a.shape[1], rb = b.shape[1]
    cdef cnp.int64_t t, xa, xb
    cdef double val, va
    for e in range(nnz):
        val = vals[e]
        t = idx[e]
        xa = ia[e]
        xb = ib[e]
        for p in range(ra):
            va = val * a[xa, p]
            for q in range(rb):
                out[t, p, q] += va * b[xb, q]


def cp_inner(ii, jj, kk, vals, u, v, w):
    return _cp_inner_loop(
        np.ascontiguousarray(ii, dtype=np.int64),
        np.ascontiguousarray(jj, dtype=np.int64),
        np.ascontiguousarray(kk, dtype=np.int64),
        np.ascontiguousarray(vals, dtype=np.float64),
        np.ascontiguousarray(u, dtype=np.float64),
        np.ascontiguousarray(v, dtype=np.float64),
        np.ascontiguousarray(w, dtype=np.float64))


cdef double _cp_inner_loop(cnp.int64_t[::1] ii, cnp.int64_t[::1] jj,
                           cnp.int64_t[::1] kk, cnp.float64_t[::1] vals,
                           cnp.float64_t[:, ::1] u, cnp.float64_t[:, ::1] v,
                           cnp.float64_t[:, ::1] w):
    cdef Py_ssize_t e, r, nnz = vals.shape[0], rank = u.shape[1]
    cdef cnp.int64_t i, j, k
    cdef double total = 0.0, dot
    for e in range(nnz):
        i = ii[e]
        j = jj[e]
        k = kk[e]
        dot = 0.0
        for r in range(rank):
            dot += u[i, r] * v[j, r] * w[k, r]
        total += vals[e] * dot
    return total


def edge_betweenness_csr(n, indptr, indices, edge_ids, num_edges):
    scores = np.zeros(num_edges)
    _brandes(n,
             np.ascontiguousarray(indptr, dtype=np.int64),
             np.ascontiguousarray(indices, dtype=np.int64),
             np.ascontiguousarray(edge_ids, dtype=np.int64),
             scores)
    scores /= 2.0
    return scores


cdef void _brandes(Py_ssize_t n, cnp.int64_t[::1] indptr,
                   cnp.int64_t[::1] indices, cnp.int64_t[::1] edge_ids,
                   cnp.float64_t[::1] scores):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sigma = np.zeros(n)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] delta = np.zeros(n)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] dist = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order = np.empty(n, dtype=np.int64)
    cdef cnp.float64_t[::1] sigma_v = sigma, delta_v = delta
    cdef cnp.int64_t[::1] dist_v = dist, order_v = order
    cdef Py_ssize_t s, head, tail, oi, p
    cdef cnp.int64_t x, y, dx
    cdef double c, coeff
    for s in range(n):
        for x in range(n):
            sigma_v[x] = 0.0
            delta_v[x] = 0.0
            dist_v[x] = -1
        sigma_v[s] = 1.0
        dist_v[s] = 0
        order_v[0] = s
        head = 0
        tail = 1
        while head < tail:
            x = order_v[head]
            head += 1
            dx = dist_v[x]
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if dist_v[y] < 0:
                    dist_v[y] = dx + 1
                    order_v[tail] = y
                    tail += 1
                if dist_v[y] == dx + 1:
                    sigma_v[y] += sigma_v[x]
        for oi in range(tail - 1, -1, -1):
            x = order_v[oi]
            coeff = (1.0 + delta_v[x]) / sigma_v[x]
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if dist_v[y] == dist_v[x] - 1:
                    c = sigma_v[y] * coeff
                    scores[edge_ids[p]] += c
                    delta_v[y] += c
