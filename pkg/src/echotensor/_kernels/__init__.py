"""Hot-loop kernels with compiled/pure backends selected at import.

The compiled Cython extension is preferred when it built; setting the
environment variable ``ECHOTENSOR_PURE_PYTHON=1`` forces the numpy/pure
reference backend (used by the kernel benchmark and the cross-backend
tests).
"""

import os

from . import _reference

if os.environ.get("ECHOTENSOR_PURE_PYTHON") == "1":
    _backend = _reference
else:
    try:
        from . import _speedups as _backend
    except ImportError:
        _backend = _reference

IMPLEMENTATION = _backend.IMPLEMENTATION
HAVE_COMPILED = IMPLEMENTATION == "compiled"

mttkrp = _backend.mttkrp
ttm_pair = _backend.ttm_pair
cp_inner = _backend.cp_inner
edge_betweenness_csr = _backend.edge_betweenness_csr

__all__ = [
    "IMPLEMENTATION",
    "HAVE_COMPILED",
    "mttkrp",
    "ttm_pair",
    "cp_inner",
    "edge_betweenness_csr",
]
