"""Kernel backend selection.

The hot inner loops (mod-p Gaussian elimination, polynomial division)
live in a Cython extension when it is built; otherwise the pure-Python
implementations in :mod:`symplocal._kernels.pure` are used.  Set
``SYMPLOCAL_KERNELS=pure`` to force the fallback.

Both backends expose the same functions with identical outputs, so the
choice only affects speed; ``benchmarks/bench_kernels.py`` compares them.
"""

from __future__ import annotations

import os

if os.environ.get("SYMPLOCAL_KERNELS", "").lower() == "pure":
    from symplocal._kernels import pure as _impl
else:
    try:
        from symplocal._kernels import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from symplocal._kernels import pure as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND_NAME

rank_mod_p = _impl.rank_mod_p
rref_mod_p = _impl.rref_mod_p
pack_basis = _impl.pack_basis
poly_reduce = _impl.poly_reduce


def nullspace_vector_mod_p(a, p: int):
    """One nonzero kernel vector of the column space map, or None.

    Cold path (failure witnesses only); built on rref.
    """
    import numpy as np

    A = np.array(a, dtype=np.int64) % p
    m, n = A.shape
    rank, pivots, R = rref_mod_p(A, p)
    if rank == n:
        return None
    pivot_set = set(pivots)
    free = next(j for j in range(n) if j not in pivot_set)
    v = [0] * n
    v[free] = 1
    for row, col in enumerate(pivots):
        v[col] = (-int(R[row, free])) % p
    return v
