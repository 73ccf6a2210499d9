"""Defining ideals of the local-model charts and their fibre analyses.

Three chart families are constructed explicitly:

* ``ring_R(m)``: the coordinate ring of the worst singularity,
  k[c_{uv}] / (C J C^t, C^t J C) with C a generic 2m x 2m matrix and J
  the standard symplectic form;
* ``chart_ideal(r, i, ...)``: the chart of the paired local model at the
  worst point, in the a-variables with the dual matrix B eliminated via
  the sign table eps;
* ``grassmannian_chart(r)``: the big cell of the isotropic Grassmannian
  (the smooth end members), with linear equations.

``extreme_chart`` analyses the open strata attached to the extreme
alcoves: the cyclic three-case recurrence, the pairing of free
coordinates under duality, and the count of free-coordinate orbits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from symplocal import _kernels
from symplocal.alcove import Alcove, extreme_alcoves
from symplocal.polyring import (GroebnerBasis, Polynomial, PolyRing,
                                buchberger, hilbert_function, krull_dimension)

DEFAULT_PRIME = 101
SECOND_PRIME = 32003


@dataclass(frozen=True)
class LocalModelSpec:
    """Which chart, and how the uniformizer is treated.

    kind: "pair" (the {i, 2r-i} chart, index = i), "ring" (worst-point
    ring, index = half-size m), or "grass" (isotropic Grassmannian big
    cell, index ignored).  fibre: "variable" keeps pi as a ring variable,
    "special" sets pi = 0, "generic" sets pi = 1.
    """

    rank: int
    kind: str
    index: int
    fibre: str = "variable"
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.kind not in ("pair", "ring", "grass"):
            raise ValueError(f"unknown chart kind {self.kind!r}")
        if self.fibre not in ("variable", "special", "generic"):
            raise ValueError(f"unknown fibre mode {self.fibre!r}")
        if self.kind == "pair" and not 1 <= self.index <= self.rank - 1:
            raise ValueError(
                f"pair chart index {self.index} out of range 1..{self.rank - 1}")
        if self.kind == "ring" and self.index < 1:
            raise ValueError("ring chart needs half-size >= 1")


@dataclass(frozen=True)
class IdealPresentation:
    """Named variables plus generator list; pi is the distinguished
    variable when present (pi_index >= 0)."""

    name: str
    ring: PolyRing
    generators: tuple
    provenance: tuple
    pi_index: int = -1

    def __post_init__(self):
        if len(self.generators) != len(self.provenance):
            raise ValueError("provenance must annotate every generator")
        if any(not note for note in self.provenance):
            raise ValueError("empty provenance note")

    def nonzero_generators(self) -> tuple:
        return tuple(g for g in self.generators if g)

    def groebner(self) -> GroebnerBasis:
        return buchberger(self.nonzero_generators(), self.ring)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "prime": self.ring.p,
            "variables": list(self.ring.names),
            "generators": [
                {"text": self.ring.format_poly(g),
                 "terms": self.ring.poly_to_json(g),
                 "provenance": note}
                for g, note in zip(self.generators, self.provenance)
            ],
        }


def _sympl_form(m: int):
    """The 2m x 2m form [[0, J], [-J, 0]] with J the antidiagonal identity."""
    n = 2 * m
    F = [[0] * n for _ in range(n)]
    for j in range(n):
        F[j][n - 1 - j] = 1 if j < m else -1
    return F


def _mat_mul(A, B, ring: PolyRing):
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = [[ring.zero() for _ in range(cols)] for _ in range(rows)]
    for a in range(rows):
        for b in range(cols):
            acc = ring.zero()
            for k in range(inner):
                acc = acc + A[a][k] * B[k][b]
            out[a][b] = acc
    return out


def _mat_sub(A, B):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def _mat_scale(A, c):
    return [[x * c for x in row] for row in A]


def ring_R(m: int, p: int = DEFAULT_PRIME) -> IdealPresentation:
    """Worst-singularity ring: c-variables of a generic 2m x 2m matrix C,
    generators the strictly upper entries of C J C^t and C^t J C (both
    products are antisymmetric with identically zero diagonal)."""
    if m < 1:
        raise ValueError("half-size must be >= 1")
    n = 2 * m
    names = [f"c_{a}_{b}" for a in range(1, n + 1) for b in range(1, n + 1)]
    ring = PolyRing(names, p)
    C = [[ring.variable(a * n + b) for b in range(n)] for a in range(n)]
    Ct = [[C[b][a] for b in range(n)] for a in range(n)]
    Jf = [[ring.constant(x) for x in row] for row in _sympl_form(m)]
    gens: list[Polynomial] = []
    notes: list[str] = []
    for tag, M in (("C*J*C^t", _mat_mul(_mat_mul(C, Jf, ring), Ct, ring)),
                   ("C^t*J*C", _mat_mul(_mat_mul(Ct, Jf, ring), C, ring))):
        for a in range(n):
            for b in range(a + 1, n):
                gens.append(M[a][b])
                notes.append(f"entry ({a + 1},{b + 1}) of {tag}")
    return IdealPresentation(
        name=f"ring_R_{m}", ring=ring, generators=tuple(gens),
        provenance=tuple(notes))


def _eps(mu: int, nu: int, threshold: int) -> int:
    """Sign table of the duality substitution b = eps . (a anti-transposed)."""
    return 1 if (mu <= threshold) == (nu <= threshold) else -1


def _chart_matrices(r: int, i: int, ring: PolyRing, pi: Polynomial):
    """A, B (eliminated) and the block decomposition for the paired chart."""
    ie = max(i, r - i)  # the case r > 2i is the chain-rotated ie-chart
    s = 2 * ie - r
    big = 2 * (r - ie)
    A = [[ring.variable(a * r + b) for b in range(r)] for a in range(r)]
    B = [[_eps(mu, nu, ie) * A[r - nu][r - mu]
          for nu in range(1, r + 1)] for mu in range(1, r + 1)]

    def block(M, rows, cols):
        return [[M[a][b] for b in cols] for a in rows]

    A4 = block(A, range(big), range(big))
    A3 = block(A, range(big), range(big, r))
    A1 = block(A, range(big, r), range(big))
    A2 = block(A, range(big, r), range(big, r))
    B2 = block(B, range(s), range(s))
    B3 = block(B, range(s), range(s, r))
    B1 = block(B, range(s, r), range(s))
    B4 = block(B, range(s, r), range(s, r))
    return dict(A=A, B=B, A1=A1, A2=A2, A3=A3, A4=A4,
                B1=B1, B2=B2, B3=B3, B4=B4, s=s, big=big, ie=ie, pi=pi)


def _pi_identity(size: int, pi: Polynomial, ring: PolyRing):
    return [[pi if a == b else ring.zero() for b in range(size)]
            for a in range(size)]


def chart_ideal(spec: LocalModelSpec) -> IdealPresentation:
    """Defining ideal of the requested chart.

    For the paired chart the retained generator families are
    B4 A4 = A4 B4 = pi, B2 = A2 - B3 A3, A1 = B3 A4 (all other chart
    equations lie in their ideal; see redundant_families).
    """
    r, p = spec.rank, spec.prime
    if spec.kind == "ring":
        return ring_R(spec.index, p)
    if spec.kind == "grass":
        return grassmannian_chart(r, p)

    i = spec.index
    names = [f"a_{a}_{b}" for a in range(1, r + 1) for b in range(1, r + 1)]
    if spec.fibre == "variable":
        ring = PolyRing(names + ["pi"], p)
        pi = ring.variable(len(names))
        pi_index = len(names)
    else:
        ring = PolyRing(names, p)
        pi = ring.constant(0 if spec.fibre == "special" else 1)
        pi_index = -1
    M = _chart_matrices(r, i, ring, pi)
    s, big = M["s"], M["big"]
    gens: list[Polynomial] = []
    notes: list[str] = []

    def emit(matrix, tag):
        for a, row in enumerate(matrix):
            for b, g in enumerate(row):
                if g:
                    gens.append(g)
                    notes.append(f"entry ({a + 1},{b + 1}) of {tag}")

    emit(_mat_sub(_mat_mul(M["B4"], M["A4"], ring),
                  _pi_identity(big, pi, ring)), "B4*A4 - pi")
    emit(_mat_sub(_mat_mul(M["A4"], M["B4"], ring),
                  _pi_identity(big, pi, ring)), "A4*B4 - pi")
    if s:
        emit(_mat_sub(M["B2"],
                      _mat_sub(M["A2"], _mat_mul(M["B3"], M["A3"], ring))),
             "B2 - A2 + B3*A3")
        emit(_mat_sub(M["A1"], _mat_mul(M["B3"], M["A4"], ring)),
             "A1 - B3*A4")
    return IdealPresentation(
        name=f"chart_{r}_{i}_{spec.fibre}", ring=ring, generators=tuple(gens),
        provenance=tuple(notes), pi_index=pi_index)


def redundant_families(spec: LocalModelSpec) -> list:
    """The dependent chart equations, as (name, list of polynomials):
    B1 = -B4 A3, pi B2 = A1 B1 + pi A2, pi B3 = A1 B4, pi A3 = -A4 B1.

    Generated for the pi-variable presentation and asserted (in tests and
    the acceptance suite) to normal-form to zero against the retained
    families.
    """
    if spec.kind != "pair":
        raise ValueError("redundant families only exist for paired charts")
    if spec.fibre != "variable":
        raise ValueError("redundant families are checked with pi a variable")
    pres = chart_ideal(spec)
    ring = pres.ring
    pi = ring.variable(pres.pi_index)
    M = _chart_matrices(spec.rank, spec.index, ring, pi)
    fams = [
        ("B1 + B4*A3",
         _mat_sub(M["B1"], _mat_scale(_mat_mul(M["B4"], M["A3"], ring), -1))),
        ("pi*B2 - A1*B1 - pi*A2",
         _mat_sub(_mat_sub(_mat_scale(M["B2"], pi),
                           _mat_mul(M["A1"], M["B1"], ring)),
                  _mat_scale(M["A2"], pi))),
        ("pi*B3 - A1*B4",
         _mat_sub(_mat_scale(M["B3"], pi), _mat_mul(M["A1"], M["B4"], ring))),
        ("pi*A3 + A4*B1",
         _mat_sub(_mat_scale(M["A3"], pi),
                  _mat_scale(_mat_mul(M["A4"], M["B1"], ring), -1))),
    ]
    return [(name, [g for row in mat for g in row]) for name, mat in fams]


def grassmannian_chart(r: int, p: int = DEFAULT_PRIME) -> IdealPresentation:
    """Big cell of the isotropic Grassmannian (the smooth charts at the
    end members of the chain): J A is symmetric, so the equations are the
    strictly upper entries of A^t J - J A."""
    names = [f"a_{a}_{b}" for a in range(1, r + 1) for b in range(1, r + 1)]
    ring = PolyRing(names, p)
    A = [[ring.variable(a * r + b) for b in range(r)] for a in range(r)]
    # X = J A with J the antidiagonal identity; generators X - X^t
    X = [[A[r - 1 - a][b] for b in range(r)] for a in range(r)]
    gens, notes = [], []
    for a in range(r):
        for b in range(a + 1, r):
            gens.append(X[a][b] - X[b][a])
            notes.append(f"entry ({a + 1},{b + 1}) of J*A - (J*A)^t")
    return IdealPresentation(
        name=f"grass_{r}", ring=ring, generators=tuple(gens),
        provenance=tuple(notes))


@lru_cache(maxsize=None)
def chart_groebner(spec: LocalModelSpec) -> GroebnerBasis:
    return chart_ideal(spec).groebner()


def affine_factor(r: int, i: int) -> int:
    """Number of free coordinates split off the paired chart, derived by
    counting: the A3 block plus the part of A2 on or above the
    antidiagonal."""
    ie = max(i, r - i)
    s = 2 * ie - r
    return 2 * (r - ie) * s + s * (s + 1) // 2


def affine_factor_closed_form(r: int, i: int) -> int:
    """The closed-form exponent 2(i-r)(2i-r) + (2i-r)(2i-r+1)/2 as
    conventionally displayed.  Its first term is non-positive for
    r <= 2i, so it disagrees with the counted value whenever the A3
    block is nonempty; fibre reports carry both numbers so the
    discrepancy is visible rather than silently corrected."""
    s = 2 * i - r
    return 2 * (i - r) * s + s * (s + 1) // 2


@dataclass(frozen=True)
class FibreReport:
    rank: int
    index: int
    dim_special: int
    dim_generic: int
    hilbert_special: tuple
    affine_factor: int
    affine_factor_closed_form: int = 0

    def to_json(self) -> dict:
        return {
            "r": self.rank, "i": self.index,
            "dim_special": self.dim_special,
            "dim_generic": self.dim_generic,
            "hilbert_special": list(self.hilbert_special),
            "affine_factor": self.affine_factor,
            "affine_factor_closed_form": self.affine_factor_closed_form,
        }


def fibre_report(spec: LocalModelSpec, max_degree: int = 3) -> FibreReport:
    """Staircase dimensions of the chart at pi = 0 and pi = 1, plus the
    degree-by-degree standard monomial counts of the special fibre."""
    r, p = spec.rank, spec.prime
    if spec.kind == "grass":
        G = chart_groebner(spec)
        dims = krull_dimension(G)
        hilb = tuple(hilbert_function(G, d) for d in range(max_degree + 1))
        return FibreReport(r, 0, dims, dims, hilb, 0)
    if spec.kind == "ring":
        G = chart_groebner(LocalModelSpec(r, "ring", spec.index, "variable", p))
        dims = krull_dimension(G)
        hilb = tuple(hilbert_function(G, d) for d in range(max_degree + 1))
        return FibreReport(r, spec.index, dims, dims, hilb, 0)
    G0 = chart_groebner(LocalModelSpec(r, "pair", spec.index, "special", p))
    G1 = chart_groebner(LocalModelSpec(r, "pair", spec.index, "generic", p))
    hilb = tuple(hilbert_function(G0, d) for d in range(max_degree + 1))
    return FibreReport(r, spec.index, krull_dimension(G0),
                       krull_dimension(G1), hilb,
                       affine_factor(r, spec.index),
                       affine_factor_closed_form(r, spec.index))


# -- extreme charts ----------------------------------------------------------


def _in_cyclic_interval(x: int, a: int, b: int, n: int) -> bool:
    """x in [a, b) inside Z/nZ; empty when a == b."""
    return (x - a) % n < (b - a) % n


@dataclass(frozen=True)
class ChartReport:
    rank: int
    zero_rows: tuple  # I = rows carrying free coordinates (level-0 entry 0)
    one_rows: tuple   # J = rows carrying the unit matrix (level-0 entry 1)
    free_orbit_count: int
    pairing_ok: bool
    index_identities_ok: bool
    recurrence_ok: bool
    case_table: tuple  # per (lam, mu): 2r transition labels 1/2/3

    def to_json(self) -> dict:
        return {
            "r": self.rank,
            "zero_rows": list(self.zero_rows),
            "one_rows": list(self.one_rows),
            "free_orbit_count": self.free_orbit_count,
            "pairing_ok": self.pairing_ok,
            "index_identities_ok": self.index_identities_ok,
            "recurrence_ok": self.recurrence_ok,
            "case_table": [
                {"lam": lam, "mu": mu, "cases": list(cases)}
                for lam, mu, cases in self.case_table
            ],
        }


def extreme_chart(r: int, x: Alcove, p: int = DEFAULT_PRIME) -> ChartReport:
    """Analysis of the open stratum at an extreme alcove.

    Computes I (rows with level-0 entry 0) and J (entry 1), the cyclic
    free zone [j_mu, i_lam) of every coefficient cell, the three-case
    transition table, the pairing of free coordinates under the duality
    a^i_{lam,mu} = a^{2r-i}_{r-mu+1, r-lam+1}, and checks that the
    interval solution satisfies every chain-transition equation
    identically (with pi a variable).
    """
    if x not in extreme_alcoves(r):
        raise ValueError("alcove is not extreme")
    n = 2 * r
    y0 = x.levels[0]
    I = tuple(j + 1 for j in range(n) if y0[j] == 0)
    J = tuple(j + 1 for j in range(n) if y0[j] == 1)

    # index identities i_lam = 2r - j_{r-lam+1} + 1, j_mu = 2r - i_{r-mu+1} + 1
    ids_ok = all(I[lam - 1] == n - J[r - lam] + 1 for lam in range(1, r + 1)) \
        and all(J[mu - 1] == n - I[r - mu] + 1 for mu in range(1, r + 1))

    def in_zone(i: int, lam: int, mu: int) -> bool:
        return _in_cyclic_interval(i % n, J[mu - 1] % n, I[lam - 1] % n, n)

    pairing_ok = all(
        in_zone(i, lam, mu) == in_zone((n - i) % n, r - mu + 1, r - lam + 1)
        for lam in range(1, r + 1) for mu in range(1, r + 1)
        for i in range(n))

    # duality orbits of the r x r coefficient cells; one symbolic free
    # generator per orbit for the interval-solution check below
    cell_var: dict[tuple, int] = {}
    orbits = 0
    for lam in range(1, r + 1):
        for mu in range(1, r + 1):
            if (lam, mu) not in cell_var:
                cell_var[(lam, mu)] = orbits
                cell_var[(r - mu + 1, r - lam + 1)] = orbits
                orbits += 1
    names = [f"g_{k}" for k in range(orbits)] + ["pi"]
    ring = PolyRing(names, p)
    pi = ring.variable(orbits)

    def coeff(i, lam, mu):
        g = ring.variable(cell_var[(lam, mu)])
        return g if in_zone(i, lam, mu) else pi * g

    recurrence_ok = True
    case_table = []
    for lam in range(1, r + 1):
        for mu in range(1, r + 1):
            cases = []
            for i in range(n):
                # transition i: diagonal factor pi sits at position i+1
                d_row = pi if I[lam - 1] == i + 1 else ring.one()
                d_unit = pi if J[mu - 1] == i + 1 else ring.one()
                if I[lam - 1] == i + 1:
                    cases.append(1)
                elif J[mu - 1] == i + 1:
                    cases.append(2)
                else:
                    cases.append(3)
                lhs = d_row * coeff(i, lam, mu)
                rhs = d_unit * coeff((i + 1) % n, lam, mu)
                if lhs != rhs:
                    recurrence_ok = False
            if cases.count(1) != 1 or cases.count(2) != 1:
                recurrence_ok = False
            case_table.append((lam, mu, tuple(cases)))
    # the duality identification itself, level by level
    duality_ok = all(
        coeff(i, lam, mu) == coeff((n - i) % n, r - mu + 1, r - lam + 1)
        for lam in range(1, r + 1) for mu in range(1, r + 1) for i in range(n))
    return ChartReport(
        rank=r, zero_rows=I, one_rows=J, free_orbit_count=orbits,
        pairing_ok=pairing_ok, index_identities_ok=ids_ok,
        recurrence_ok=recurrence_ok and duality_ok,
        case_table=tuple(case_table))


# -- generic points on the pi = 1 fibre --------------------------------------


def _random_symplectic(m2: int, rng: random.Random, p: int,
                       factors: int = 20) -> np.ndarray:
    """Product of random symplectic transvections x -> x + c <x,v> v."""
    Jf = np.array(_sympl_form(m2 // 2), dtype=np.int64)
    A = np.eye(m2, dtype=np.int64)
    for _ in range(factors):
        v = np.array([rng.randrange(p) for _ in range(m2)], dtype=np.int64)
        if not v.any():
            continue
        c = rng.randrange(1, p)
        T = (np.eye(m2, dtype=np.int64) + c * np.outer(v, Jf @ v % p)) % p
        A = A @ T % p
    return A


@dataclass(frozen=True)
class SampleReport:
    rank: int
    index: int
    trials: int
    seed: int
    vanishing: int
    corank_ok: int

    @property
    def all_ok(self) -> bool:
        return self.vanishing == self.trials == self.corank_ok

    def to_json(self) -> dict:
        return {"r": self.rank, "i": self.index, "trials": self.trials,
                "seed": self.seed, "vanishing": self.vanishing,
                "corank_ok": self.corank_ok, "all_ok": self.all_ok}


def generic_point_sample(spec: LocalModelSpec, trials: int = 100,
                         seed: int = 0, _corrupt: bool = False) -> SampleReport:
    """Random points on the pi = 1 chart: draw the symplectic block and the
    free coordinates, solve for the dependent ones, then check that every
    generator vanishes and that the Jacobian corank equals the chart
    dimension r(r+1)/2."""
    if spec.kind != "pair" or spec.fibre != "generic":
        raise ValueError("sampling needs a paired chart at pi = 1")
    r, i, p = spec.rank, spec.index, spec.prime
    pres = chart_ideal(spec)
    ring = pres.ring
    gens = list(pres.nonzero_generators())
    if _corrupt:
        gens[0] = gens[0] + 1
    ie = max(i, r - i)
    s = 2 * ie - r
    big = 2 * (r - ie)
    rng = random.Random(seed)
    expected_corank = r * (r + 1) // 2
    jac = [[g.derivative(v) for v in range(r * r)] for g in gens]

    vanish = corank_ok = 0
    for _ in range(trials):
        A = np.zeros((r, r), dtype=np.int64)
        A[:big, :big] = _random_symplectic(big, rng, p)
        for a in range(big):
            for b in range(big, r):
                A[a, b] = rng.randrange(p)  # A3 free
        for a in range(big, r):             # A2 on/above the antidiagonal
            for b in range(big, r):
                if (a - big) + (b - big) <= s - 1:
                    A[a, b] = rng.randrange(p)
        # B-matrix entries b[mu][nu] = eps * a[r-nu+1][r-mu+1] (1-based)
        def bval(mu, nu):
            return _eps(mu, nu, ie) * A[r - nu, r - mu] % p
        # dependent part of A2 from B2 = A2 - B3*A3: below the antidiagonal,
        # solved from the mirrored (above) equations
        for al in range(1, s + 1):
            for be in range(1, s + 1):
                if al + be <= s:  # strictly above the antidiagonal
                    q = sum(bval(al, s + k) * A[k - 1, big + be - 1]
                            for k in range(1, big + 1)) % p
                    A[big + s - be, big + s - al] = (A[big + al - 1, big + be - 1] - q) % p
        # A1 = B3 * A4
        for al in range(1, s + 1):
            for b in range(big):
                A[big + al - 1, b] = sum(
                    bval(al, s + k) * A[k - 1, b] for k in range(1, big + 1)) % p
        point = [int(A[a, b]) for a in range(r) for b in range(r)]
        if all(g.evaluate(point) == 0 for g in gens):
            vanish += 1
        jac_at = [[entry.evaluate(point) for entry in row] for row in jac]
        rank = _kernels.rank_mod_p(jac_at, p)
        if r * r - rank == expected_corank:
            corank_ok += 1
    return SampleReport(rank=r, index=i, trials=trials, seed=seed,
                        vanishing=vanish, corank_ok=corank_ok)
