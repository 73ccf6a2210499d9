"""Pure-Python kernels for exact mod-p linear algebra and polynomial division.

Same contracts as the compiled backend in ``_core.pyx``; used as the
fallback when the extension is not built.  Matrices are numpy int64
arrays; polynomials are lists of (exponent tuple, coefficient) terms
sorted strictly descending in graded reverse lexicographic order.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def rank_mod_p(a, p: int) -> int:
    """Rank of an integer matrix over F_p (Gaussian elimination)."""
    A = np.array(a, dtype=np.int64, copy=True) % p
    if A.size == 0:
        return 0
    m, n = A.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        rows = np.nonzero(A[rank + 1:, col])[0]
        if rows.size:
            rows = rows + rank + 1
            A[rows] = (A[rows] - np.outer(A[rows, col], A[rank])) % p
        rank += 1
    return rank


def rref_mod_p(a, p: int) -> tuple[int, list[int], np.ndarray]:
    """Reduced row echelon form over F_p; returns (rank, pivot columns, R)."""
    A = np.array(a, dtype=np.int64, copy=True) % p
    m, n = A.shape
    rank = 0
    pivots: list[int] = []
    for col in range(n):
        if rank == m:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = (A[rank] * inv) % p
        others = np.nonzero(A[:, col])[0]
        others = others[others != rank]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, col], A[rank])) % p
        pivots.append(col)
        rank += 1
    return rank, pivots, A


def _cmp_drl(ea, eb) -> int:
    """Graded reverse lexicographic comparison; >0 when ea > eb."""
    da, db = sum(ea), sum(eb)
    if da != db:
        return 1 if da > db else -1
    for j in range(len(ea) - 1, -1, -1):
        if ea[j] != eb[j]:
            return 1 if ea[j] < eb[j] else -1
    return 0


def _divides(d, e) -> bool:
    return all(d[j] <= e[j] for j in range(len(d)))


def pack_basis(basis: list, p: int):
    """Precompute reduction data for a list of descending term lists."""
    lead = [g[0][0] for g in basis]
    inv_lc = [pow(g[0][1] % p, p - 2, p) for g in basis]
    return (list(basis), lead, inv_lc)


def poly_reduce(f_terms, packed, p: int):
    """Full normal form of f modulo the packed basis.

    Reduction strategy is fixed for cross-backend determinism: always
    cancel the largest remaining monomial, always use the first basis
    element whose leading monomial divides it.
    """
    basis, lead, inv_lc = packed
    work = [(e, c % p) for (e, c) in f_terms]
    out = []
    while work:
        exps, coeff = work[0]
        if coeff == 0:
            work = work[1:]
            continue
        red = -1
        for gi, lexps in enumerate(lead):
            if _divides(lexps, exps):
                red = gi
                break
        if red < 0:
            out.append((exps, coeff))
            work = work[1:]
            continue
        g = basis[red]
        mult = (coeff * inv_lc[red]) % p
        shift = tuple(exps[j] - lead[red][j] for j in range(len(exps)))
        merged = []
        i, j = 1, 1
        while i < len(work) and j < len(g):
            ge = tuple(g[j][0][k] + shift[k] for k in range(len(shift)))
            c = _cmp_drl(work[i][0], ge)
            if c > 0:
                merged.append(work[i])
                i += 1
            elif c < 0:
                merged.append((ge, (-mult * g[j][1]) % p))
                j += 1
            else:
                nc = (work[i][1] - mult * g[j][1]) % p
                if nc:
                    merged.append((work[i][0], nc))
                i += 1
                j += 1
        merged.extend(work[i:])
        while j < len(g):
            ge = tuple(g[j][0][k] + shift[k] for k in range(len(shift)))
            merged.append((ge, (-mult * g[j][1]) % p))
            j += 1
        work = merged
    return out
