#!/usr/bin/env python3
"""Compare the compiled kernel backend against the pure-Python fallback.

Workloads mirror the hot paths of the verification suite: dense mod-p
rank, polynomial normal forms against the worst-singularity Groebner
basis, a full Buchberger run, and the end-to-end degree-3 basis check.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from symplocal import _kernels
from symplocal._kernels import pure
from symplocal.polyring import degrevlex_key

try:
    from symplocal._kernels import _core
except ImportError:
    _core = None


def timed(fn, reps=1):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_matrix(rng, m, n, p):
    return [[rng.randrange(p) for _ in range(n)] for _ in range(m)]


def random_terms(rng, nvars, nterms, deg, p):
    acc = {}
    for _ in range(nterms):
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        acc[tuple(e)] = rng.randrange(1, p)
    return sorted(acc.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)


def bench_rank(backend, rng, size, p):
    A = random_matrix(rng, size, size + 100, p)
    return timed(lambda: backend.rank_mod_p(A, p), reps=2)


def bench_normal_forms(backend, rng, count, p):
    from symplocal.localmodel import ring_R
    basis = [list(g.terms) for g in ring_R(2, p).groebner().basis]
    fs = [random_terms(rng, 16, 40, 4, p) for _ in range(count)]
    packed = backend.pack_basis(basis, p)
    return timed(lambda: [backend.poly_reduce(f, packed, p) for f in fs])


def _with_backend(backend, fn):
    """Run fn with the selected backend patched into the kernel seam."""
    saved = (_kernels.rank_mod_p, _kernels.pack_basis, _kernels.poly_reduce)
    _kernels.rank_mod_p = backend.rank_mod_p
    _kernels.pack_basis = backend.pack_basis
    _kernels.poly_reduce = backend.poly_reduce
    try:
        return fn()
    finally:
        _kernels.rank_mod_p, _kernels.pack_basis, _kernels.poly_reduce = saved


def bench_buchberger(backend, p):
    from symplocal.localmodel import ring_R
    pres = ring_R(2, p)
    return _with_backend(
        backend, lambda: timed(lambda: pres.groebner()))


def bench_basis_check(backend, p):
    from symplocal.tableau import _ring_groebner, verify_basis
    _ring_groebner.cache_clear()
    return _with_backend(backend, lambda: timed(lambda: verify_basis(2, 3, p)))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller sizes for a fast sanity run")
    parser.add_argument("--prime", type=int, default=32003)
    args = parser.parse_args()

    backends = [pure] + ([_core] if _core is not None else [])
    if _core is None:
        print("note: compiled backend not built; showing fallback only")
    rng = random.Random(0)
    size = 150 if args.quick else 400
    nfs = 50 if args.quick else 300

    rows = []
    rows.append(("rank %dx%d" % (size, size + 100),
                 [bench_rank(b, random.Random(0), size, args.prime)
                  for b in backends]))
    rows.append(("%d normal forms (16 vars)" % nfs,
                 [bench_normal_forms(b, random.Random(1), nfs, args.prime)
                  for b in backends]))
    rows.append(("buchberger ring_R(2)",
                 [bench_buchberger(b, args.prime) for b in backends]))
    if not args.quick:
        rows.append(("basis check r=2 d=3",
                     [bench_basis_check(b, args.prime) for b in backends]))

    names = [b.BACKEND_NAME for b in backends]
    header = f"{'workload':<32}" + "".join(f"{n:>12}" for n in names)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, times in rows:
        line = f"{label:<32}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
