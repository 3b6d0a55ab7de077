"""Reference numpy/pure-Python implementations of the hot kernels.

These are the fallback used when the compiled extension is not available.
Both backends implement the same contracts and are exercised by the same
tests; the benchmark module compares them head to head.
"""

from collections import deque

import numpy as np

IMPLEMENTATION = "reference"


def mttkrp(ii, jj, kk, vals, shape, mode, u, v, w):
    """Matricized-tensor times Khatri-Rao product for a COO 3-mode tensor.

    For ``mode`` 0 returns a (shape[0], R) array whose row i accumulates
    ``val * v[j, :] * w[k, :]`` over the nonzeros; modes 1 and 2 are the
    symmetric variants using the other two factors.
    """
    factors = (u, v, w)
    a, b = [f for m, f in enumerate(factors) if m != mode]
    ia, ib = [c for m, c in enumerate((ii, jj, kk)) if m != mode]
    idx = (ii, jj, kk)[mode]
    rank = a.shape[1]
    out = np.zeros((shape[mode], rank))
    if vals.size == 0:
        return out
    weighted = a[ia] * b[ib]
    for r in range(rank):
        out[:, r] = np.bincount(idx, weights=vals * weighted[:, r],
                                minlength=shape[mode])
    return out


def ttm_pair(ii, jj, kk, vals, shape, mode, a, b):
    """Contract a COO tensor with two factor matrices, keeping ``mode``.

    Result has shape (shape[mode], a.shape[1], b.shape[1]); ``a`` applies to
    the lower of the two contracted modes and ``b`` to the higher one.
    """
    ia, ib = [c for m, c in enumerate((ii, jj, kk)) if m != mode]
    idx = (ii, jj, kk)[mode]
    out = np.zeros((shape[mode], a.shape[1], b.shape[1]))
    chunk = 1 << 15
    for start in range(0, vals.size, chunk):
        sl = slice(start, min(start + chunk, vals.size))
        contrib = (vals[sl, None, None]
                   * a[ia[sl]][:, :, None]
                   * b[ib[sl]][:, None, :])
        np.add.at(out, idx[sl], contrib)
    return out


def cp_inner(ii, jj, kk, vals, u, v, w):
    """Inner product of a COO tensor with the CP model [[u, v, w]]."""
    if vals.size == 0:
        return 0.0
    return float(np.einsum("e,er,er,er->", vals, u[ii], v[jj], w[kk]))


def edge_betweenness_csr(n, indptr, indices, edge_ids, num_edges):
    """Brandes shortest-path edge betweenness on an undirected CSR graph.

    ``edge_ids`` aligns with ``indices`` and maps each adjacency entry to its
    undirected edge id; per-pair credit is shared equally among shortest
    paths and each unordered pair contributes total credit once.
    """
    scores = np.zeros(num_edges)
    sigma = np.zeros(n)
    dist = np.empty(n, dtype=np.int64)
    delta = np.zeros(n)
    for s in range(n):
        sigma.fill(0.0)
        dist.fill(-1)
        delta.fill(0.0)
        sigma[s] = 1.0
        dist[s] = 0
        order = []
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            dx = dist[x]
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if dist[y] < 0:
                    dist[y] = dx + 1
                    queue.append(y)
                if dist[y] == dx + 1:
                    sigma[y] += sigma[x]
        for x in reversed(order):
            coeff = (1.0 + delta[x]) / sigma[x]
            for p in range(indptr[x], indptr[x + 1]):
                y = indices[p]
                if dist[y] == dist[x] - 1:
                    c = sigma[y] * coeff
                    scores[edge_ids[p]] += c
                    delta[y] += c
    # every unordered pair was counted from both endpoints
    scores /= 2.0
    return scores
