"""Backend parity: the compiled kernels and the pure fallback must give
identical answers on identical inputs."""

import random

import numpy as np
import pytest

from symplocal import _kernels
from symplocal._kernels import pure

try:
    from symplocal._kernels import _core
    BACKENDS = [pure, _core]
except ImportError:
    _core = None
    BACKENDS = [pure]

needs_core = pytest.mark.skipif(_core is None, reason="extension not built")


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_rank_known_cases(backend):
    assert backend.rank_mod_p([[1, 2], [2, 4]], 101) == 1
    assert backend.rank_mod_p([[1, 0], [0, 1]], 101) == 2
    assert backend.rank_mod_p([[0, 0], [0, 0]], 101) == 0
    # rank depends on the prime: 2x2 with det = 101
    assert backend.rank_mod_p([[101, 0], [0, 1]], 101) == 1
    assert backend.rank_mod_p([[101, 0], [0, 1]], 32003) == 2


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_rank_negative_entries(backend):
    assert backend.rank_mod_p([[-1, 1], [1, -1]], 101) == 1


def test_rank_backends_agree_on_random_matrices():
    rng = random.Random(7)
    for _ in range(25):
        m = rng.randrange(1, 8)
        n = rng.randrange(1, 8)
        A = [[rng.randrange(-50, 50) for _ in range(n)] for _ in range(m)]
        for p in (101, 32003):
            ranks = {b.rank_mod_p(A, p) for b in BACKENDS}
            assert len(ranks) == 1


def test_rref_reconstructs_rank_and_pivots():
    A = [[2, 4, 1], [1, 2, 0], [0, 0, 5]]
    for backend in BACKENDS:
        rank, pivots, R = backend.rref_mod_p(A, 101)
        assert rank == 2
        assert pivots == [0, 2]
        R = np.asarray(R)
        for row, col in enumerate(pivots):
            assert R[row, col] == 1


def test_nullspace_vector():
    # columns: v2 = 2 v1
    A = [[1, 2], [3, 6]]
    v = _kernels.nullspace_vector_mod_p(A, 101)
    assert v is not None
    assert (v[0] + 2 * v[1]) % 101 == 0 and any(v)
    assert _kernels.nullspace_vector_mod_p([[1, 0], [0, 1]], 101) is None


def _random_terms(rng, nvars, nterms, p, maxdeg=3):
    from symplocal.polyring import degrevlex_key
    acc = {}
    for _ in range(nterms):
        e = [0] * nvars
        for _ in range(rng.randrange(maxdeg + 1)):
            e[rng.randrange(nvars)] += 1
        acc[tuple(e)] = rng.randrange(1, p)
    return sorted(acc.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)


def test_poly_reduce_backends_agree():
    rng = random.Random(11)
    p = 101
    for _ in range(40):
        nvars = rng.randrange(2, 5)
        basis = [_random_terms(rng, nvars, rng.randrange(1, 4), p)
                 for _ in range(rng.randrange(1, 4))]
        basis = [g for g in basis if g]
        if not basis:
            continue
        f = _random_terms(rng, nvars, rng.randrange(1, 8), p)
        results = [b.poly_reduce(f, b.pack_basis(basis, p), p)
                   for b in BACKENDS]
        assert all(res == results[0] for res in results)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_poly_reduce_simple_division(backend):
    # f = x^2 + y, basis = [x]: remainder y
    p = 101
    f = [((2, 0), 1), ((0, 1), 1)]
    basis = [[((1, 0), 1)]]
    out = backend.poly_reduce(f, backend.pack_basis(basis, p), p)
    assert out == [((0, 1), 1)]


@needs_core
def test_default_backend_is_compiled():
    import os
    if os.environ.get("SYMPLOCAL_KERNELS", "").lower() == "pure":
        assert _kernels.BACKEND == "pure"
    else:
        assert _kernels.BACKEND == "cython"
