"""Sparse 3-mode tensors and the multilinear algebra used by the engines.

Conventions shared by every operation in the package:

* modes are numbered 1, 2, 3;
* matricization orders the columns so that, among the non-matricized
  modes, the lower-numbered mode's index varies fastest;
* all arithmetic is double precision.
"""

from __future__ import annotations

import numpy as np

from . import _kernels


class SparseTensor3:
    """Coordinate-form 3-mode tensor.

    Immutable after construction.  Indices are zero-based, strictly inside
    ``dims``; duplicate coordinates are rejected (not summed) so that
    assembly bugs surface early; stored values are finite and nonzero.
    """

    __slots__ = ("dims", "ii", "jj", "kk", "vals")

    def __init__(self, dims, ii, jj, kk, vals):
        dims = tuple(int(d) for d in dims)
        if len(dims) != 3 or any(d <= 0 for d in dims):
            raise ValueError(f"dims must be three positive integers, got {dims}")
        ii = np.asarray(ii, dtype=np.int64)
        jj = np.asarray(jj, dtype=np.int64)
        kk = np.asarray(kk, dtype=np.int64)
        vals = np.asarray(vals, dtype=np.float64)
        if not (ii.shape == jj.shape == kk.shape == vals.shape) or ii.ndim != 1:
            raise ValueError("coordinate and value arrays must be equal-length 1-D")
        for name, idx, dim in (("i", ii, dims[0]), ("j", jj, dims[1]), ("k", kk, dims[2])):
            if idx.size and (idx.min() < 0 or idx.max() >= dim):
                raise ValueError(f"{name} index out of range for dim {dim}")
        if not np.all(np.isfinite(vals)):
            raise ValueError("tensor values must be finite")
        if np.any(vals == 0.0):
            raise ValueError("explicit zero entries are not stored")
        order = np.lexsort((kk, jj, ii))
        ii, jj, kk, vals = ii[order], jj[order], kk[order], vals[order]
        if ii.size > 1:
            same = (np.diff(ii) == 0) & (np.diff(jj) == 0) & (np.diff(kk) == 0)
            if np.any(same):
                e = int(np.flatnonzero(same)[0])
                raise ValueError(
                    f"duplicate coordinate ({ii[e]}, {jj[e]}, {kk[e]})")
        for arr in (ii, jj, kk, vals):
            arr.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "ii", ii)
        object.__setattr__(self, "jj", jj)
        object.__setattr__(self, "kk", kk)
        object.__setattr__(self, "vals", vals)

    def __setattr__(self, name, value):
        raise AttributeError("SparseTensor3 is immutable")

    @property
    def nnz(self):
        return int(self.vals.size)

    @classmethod
    def from_entries(cls, dims, entries):
        """Build from an iterable of ``(i, j, k, value)`` tuples."""
        entries = list(entries)
        if not entries:
            empty = np.empty(0)
            return cls(dims, empty, empty, empty, empty)
        ii, jj, kk, vals = zip(*entries)
        return cls(dims, ii, jj, kk, vals)

    @classmethod
    def from_dense(cls, array):
        array = np.asarray(array, dtype=np.float64)
        if array.ndim != 3:
            raise ValueError("expected a 3-D array")
        ii, jj, kk = np.nonzero(array)
        return cls(array.shape, ii, jj, kk, array[ii, jj, kk])

    def to_dense(self):
        out = np.zeros(self.dims)
        out[self.ii, self.jj, self.kk] = self.vals
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseTensor3):
            return NotImplemented
        return (self.dims == other.dims
                and np.array_equal(self.ii, other.ii)
                and np.array_equal(self.jj, other.jj)
                and np.array_equal(self.kk, other.kk)
                and np.array_equal(self.vals, other.vals))

    def __repr__(self):
        return f"SparseTensor3(dims={self.dims}, nnz={self.nnz})"


def _check_mode(mode):
    if mode not in (1, 2, 3):
        raise ValueError(f"mode must be 1, 2 or 3, got {mode!r}")
    return mode - 1


def frobenius_norm(x):
    """Frobenius norm of a SparseTensor3 or a dense array."""
    if isinstance(x, SparseTensor3):
        return float(np.sqrt(np.dot(x.vals, x.vals)))
    return float(np.linalg.norm(np.asarray(x, dtype=np.float64)))


def matricize(t: SparseTensor3, mode: int) -> np.ndarray:
    """Mode-``mode`` matricization: fibers of that mode become columns.

    Output shape is ``dims[mode] x prod(other dims)`` with the
    lower-numbered remaining mode's index varying fastest along columns.
    """
    m = _check_mode(mode)
    dims = t.dims
    rest = [d for axis, d in enumerate(dims) if axis != m]
    out = np.zeros((dims[m], rest[0] * rest[1]))
    coords = (t.ii, t.jj, t.kk)
    ra, rb = [c for axis, c in enumerate(coords) if axis != m]
    out[coords[m], ra + rest[0] * rb] = t.vals
    return out


def fold(matrix: np.ndarray, mode: int, dims) -> np.ndarray:
    """Inverse of :func:`matricize` under the same column ordering."""
    m = _check_mode(mode)
    dims = tuple(int(d) for d in dims)
    matrix = np.asarray(matrix, dtype=np.float64)
    rest_axes = [axis for axis in range(3) if axis != m]
    rest = [dims[a] for a in rest_axes]
    if matrix.shape != (dims[m], rest[0] * rest[1]):
        raise ValueError(f"matrix shape {matrix.shape} does not match dims {dims}")
    cube = matrix.reshape(dims[m], rest[1], rest[0]).transpose(0, 2, 1)
    return np.moveaxis(cube, 0, m)


def mode_n_product(t: SparseTensor3, u: np.ndarray, mode: int):
    """Multiply ``t`` by matrix ``u`` along ``mode``.

    ``u`` must have ``dims[mode]`` columns; the result replaces that
    dimension with ``u.shape[0]``.  Returns a dense array when the
    predicted fill exceeds 25%, otherwise a SparseTensor3.
    """
    m = _check_mode(mode)
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 2 or u.shape[1] != t.dims[m]:
        raise ValueError(
            f"matrix with {u.shape} cannot contract mode {mode} of dims {t.dims}")
    new_dims = list(t.dims)
    new_dims[m] = u.shape[0]
    coords = (t.ii, t.jj, t.kk)
    ra, rb = [c for axis, c in enumerate(coords) if axis != m]
    da, db = [d for axis, d in enumerate(new_dims) if axis != m]
    fiber = ra * db + rb
    uniq, inv = np.unique(fiber, return_inverse=True)
    fibers = np.zeros((uniq.size, u.shape[0]))
    np.add.at(fibers, inv, t.vals[:, None] * u[:, coords[m]].T)
    predicted = uniq.size * u.shape[0]
    total = int(np.prod(new_dims))
    dense = np.zeros(new_dims)
    np.moveaxis(dense, m, 0)[:, uniq // db, uniq % db] = fibers.T
    if predicted > 0.25 * total:
        return dense
    return SparseTensor3.from_dense(dense)


def khatri_rao(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Column-wise Kronecker product of two matrices with equal columns."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 2 or y.ndim != 2 or x.shape[1] != y.shape[1]:
        raise ValueError(
            f"khatri_rao needs matching column counts, got {x.shape} and {y.shape}")
    return (x[:, None, :] * y[None, :, :]).reshape(x.shape[0] * y.shape[0],
                                                   x.shape[1])


def kronecker(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Kronecker product with the usual block structure ``x_ij * y``."""
    return np.kron(np.asarray(x, dtype=np.float64),
                   np.asarray(y, dtype=np.float64))


def reconstruct_tucker(g: np.ndarray, u: np.ndarray, v: np.ndarray,
                       w: np.ndarray) -> np.ndarray:
    """Dense tensor ``g x1 u x2 v x3 w`` of the core/factor model."""
    g = np.asarray(g, dtype=np.float64)
    if g.ndim != 3:
        raise ValueError("core must be 3-D")
    for name, f, r in (("u", u, g.shape[0]), ("v", v, g.shape[1]), ("w", w, g.shape[2])):
        if np.asarray(f).ndim != 2 or np.asarray(f).shape[1] != r:
            raise ValueError(f"factor {name} does not match core rank {r}")
    return np.einsum("abc,ia,jb,kc->ijk", g, u, v, w)


def reconstruct_cp(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Dense tensor with entries ``sum_r u_ir v_jr w_kr``."""
    u, v, w = (np.asarray(f, dtype=np.float64) for f in (u, v, w))
    if not (u.ndim == v.ndim == w.ndim == 2) or not (u.shape[1] == v.shape[1] == w.shape[1]):
        raise ValueError("factors must be matrices with equal column counts")
    return np.einsum("ir,jr,kr->ijk", u, v, w)


def write_coo(t: SparseTensor3, path):
    """Write the COO text format: ``# dims I J K`` then TAB-separated rows."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# dims {t.dims[0]} {t.dims[1]} {t.dims[2]}\n")
        for i, j, k, v in zip(t.ii, t.jj, t.kk, t.vals):
            fh.write(f"{i}\t{j}\t{k}\t{v!r}\n")


def read_coo(path) -> SparseTensor3:
    """Read the COO text format written by :func:`write_coo`."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if header[:2] != ["#", "dims"] or len(header) != 5:
            raise ValueError(f"{path}: malformed COO header")
        dims = tuple(int(x) for x in header[2:])
        entries = []
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 TAB-separated fields")
            entries.append((int(parts[0]), int(parts[1]), int(parts[2]),
                            float(parts[3])))
    return SparseTensor3.from_entries(dims, entries)


def write_matrix_csv(matrix: np.ndarray, path):
    """Write a dense matrix as header-less CSV, one row per line."""
    matrix = np.asarray(matrix, dtype=np.float64)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in matrix:
            fh.write(",".join(repr(x) for x in row.tolist()) + "\n")


def read_matrix_csv(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        rows = [[float(x) for x in line.split(",")]
                for line in fh.read().splitlines() if line]
    if not rows:
        return np.zeros((0, 0))
    if len({len(r) for r in rows}) != 1:
        raise ValueError(f"{path}: ragged rows")
    return np.asarray(rows, dtype=np.float64)


def sparse_mttkrp(t: SparseTensor3, mode: int, u, v, w) -> np.ndarray:
    """Matricized tensor times Khatri-Rao of the two other factors.

    Equivalent to ``matricize(t, mode) @ khatri_rao(high, low)`` with the
    factors ordered per the shared column convention, computed from the
    nonzeros only (hot kernel).
    """
    m = _check_mode(mode)
    return _kernels.mttkrp(t.ii, t.jj, t.kk, t.vals, t.dims, m,
                           np.asarray(u, dtype=np.float64),
                           np.asarray(v, dtype=np.float64),
                           np.asarray(w, dtype=np.float64))


def sparse_ttm_pair(t: SparseTensor3, mode: int, a, b) -> np.ndarray:
    """Contract the two non-``mode`` modes with ``a`` and ``b``.

    ``a`` applies to the lower- and ``b`` to the higher-numbered of the
    contracted modes; the result is dense ``(dims[mode], a_cols, b_cols)``.
    """
    m = _check_mode(mode)
    return _kernels.ttm_pair(t.ii, t.jj, t.kk, t.vals, t.dims, m,
                             np.asarray(a, dtype=np.float64),
                             np.asarray(b, dtype=np.float64))


def sparse_cp_inner(t: SparseTensor3, u, v, w) -> float:
    """Inner product of ``t`` with the CP model ``[[u, v, w]]``."""
    return _kernels.cp_inner(t.ii, t.jj, t.kk, t.vals,
                             np.asarray(u, dtype=np.float64),
                             np.asarray(v, dtype=np.float64),
                             np.asarray(w, dtype=np.float64))
