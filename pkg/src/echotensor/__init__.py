"""Community-infused tensor and coupled matrix-tensor factorization toolkit.

News articles are embedded through a <news, user, community> engagement
tensor, optionally coupled with an n-gram content matrix, and the
embeddings feed classification, clustering and recommendation pipelines.
"""

from ._kernels import HAVE_COMPILED, IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .tensor import (
    SparseTensor3,
    fold,
    frobenius_norm,
    khatri_rao,
    kronecker,
    matricize,
    mode_n_product,
    read_coo,
    read_matrix_csv,
    reconstruct_cp,
    reconstruct_tucker,
    write_coo,
    write_matrix_csv,
)

__version__ = "0.1.0"

__all__ = [
    "HAVE_COMPILED",
    "KERNEL_IMPLEMENTATION",
    "SparseTensor3",
    "fold",
    "frobenius_norm",
    "khatri_rao",
    "kronecker",
    "matricize",
    "mode_n_product",
    "read_coo",
    "read_matrix_csv",
    "reconstruct_cp",
    "reconstruct_tucker",
    "write_coo",
    "write_matrix_csv",
    "__version__",
]
