"""de Concini's doubly symplectic standard tableaux.

A minor of the generic 2r x 2r matrix is recorded by row data (I, J) and
column data, each a pair of subsets of {1..r}: J-indices are mirrored to
the other half (j -> 2r+1-j) in the expanded index tuple, and the
intersection Gamma = I n J contributes interleaved mirror pairs.  A pair
is admissible when some subset T of the complement dominates Gamma; the
smallest such subset Lambda completes the display data.

Chains of doubly admissible minors under the two-sided dominance order
evaluate (via :func:`phi`) to a basis of the worst-singularity ring; the
count/rank checks of that statement, and of the non-zero-divisor
property of the full corner minor, live in verify_basis / verify_nzd.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from symplocal import _kernels, localmodel
from symplocal.polyring import (Polynomial, hilbert_function,
                                mult_map_rank, normal_form,
                                standard_monomials)


def set_leq(a, b) -> bool:
    """Dominance order on finite integer sets: a <= b iff |a| >= |b| and
    the m-th smallest of a is <= the m-th smallest of b for all m."""
    sa, sb = sorted(a), sorted(b)
    if len(sa) < len(sb):
        return False
    return all(x <= y for x, y in zip(sa, sb))


def _feasible(gammas, avail) -> bool:
    # match each gamma (descending) to a distinct available value >= it
    pool = sorted(avail, reverse=True)
    for m, g in enumerate(sorted(gammas, reverse=True)):
        if m >= len(pool) or pool[m] < g:
            return False
    return True


def is_admissible(I, J, r: int):
    """(admissible?, minimal completion Lambda).

    Lambda is chosen greedily: the gammas are processed in increasing
    order and each takes the smallest available element >= it that keeps
    the rest feasible; this is the componentwise minimum over all valid
    completions (checked against brute force in the tests).
    """
    I, J = set(I), set(J)
    gamma = sorted(I & J)
    avail = sorted(set(range(1, r + 1)) - (I | J))
    if not _feasible(gamma, avail):
        return False, None
    lam = []
    pool = list(avail)
    for m, g in enumerate(gamma):
        for x in sorted(pool):
            if x >= g:
                rest = [y for y in pool if y != x]
                if _feasible(gamma[m + 1:], rest):
                    lam.append(x)
                    pool = rest
                    break
    return True, tuple(lam)


@dataclass(frozen=True)
class MinorSpec:
    """Doubly admissible minor in (J, I | columns) form.

    row_i/row_j and col_i/col_j are the defining subsets of {1..r};
    row_tuple/col_tuple expand them to the displayed index tuples in
    {1..2r} (mirrored J-part descending, plain I-part descending, then
    interleaved mirror pairs of Gamma); the upper/lower sets drive the
    chain order.
    """

    rank: int
    row_i: tuple
    row_j: tuple
    col_i: tuple
    col_j: tuple

    def __post_init__(self):
        ok_r, _ = is_admissible(self.row_i, self.row_j, self.rank)
        ok_c, _ = is_admissible(self.col_i, self.col_j, self.rank)
        if not (ok_r and ok_c):
            raise ValueError("index data is not doubly admissible")
        if len(self.row_i) + len(self.row_j) != len(self.col_i) + len(self.col_j):
            raise ValueError("row and column sizes differ")

    @property
    def size(self) -> int:
        return len(self.row_i) + len(self.row_j)

    @property
    def row_tuple(self) -> tuple:
        return _expand(self.row_i, self.row_j, self.rank)

    @property
    def col_tuple(self) -> tuple:
        # columns mirror the row construction under transpose and are
        # written in the opposite (ascending) direction
        return tuple(reversed(_expand(self.col_i, self.col_j, self.rank)))

    def upper_row_set(self) -> tuple:
        return _upper_set(self.row_i, self.row_j, self.rank)

    def lower_row_set(self) -> tuple:
        return _lower_set(self.row_i, self.row_j, self.rank)

    def upper_col_set(self) -> tuple:
        return _upper_set(self.col_i, self.col_j, self.rank)

    def lower_col_set(self) -> tuple:
        return _lower_set(self.col_i, self.col_j, self.rank)

    def __str__(self):
        rows = ",".join(map(str, self.row_tuple))
        cols = ",".join(map(str, self.col_tuple))
        return f"({rows}|{cols})"


def _expand(I, J, r: int) -> tuple:
    """Displayed index tuple of the minor given one side's (I, J)."""
    n = 2 * r
    gamma = sorted(set(I) & set(J))
    i_t = sorted(set(I) - set(gamma))
    j_t = sorted(set(J) - set(gamma))
    out = [n - j + 1 for j in j_t]          # descending mirrored values
    out += [i for i in reversed(i_t)]       # descending plain values
    for g in reversed(gamma):               # interleaved mirror pairs
        out += [n - g + 1, g]
    return tuple(out)


def _upper_set(I, J, r: int) -> tuple:
    """Row set of the upper display line (J', I): Lambda replaces Gamma in J."""
    n = 2 * r
    _, lam = is_admissible(I, J, r)
    gamma = set(I) & set(J)
    j_prime = sorted((set(J) - gamma) | set(lam))
    return tuple(sorted([n - j + 1 for j in j_prime] + list(I)))


def _lower_set(I, J, r: int) -> tuple:
    """Row set of the lower display line (J, I'): Lambda replaces Gamma in I."""
    n = 2 * r
    _, lam = is_admissible(I, J, r)
    gamma = set(I) & set(J)
    i_prime = sorted((set(I) - gamma) | set(lam))
    return tuple(sorted([n - j + 1 for j in J] + i_prime))


def tableau_leq(P: MinorSpec, Q: MinorSpec) -> bool:
    """P <= Q: lower data of P dominates into upper data of Q, rows and
    columns; not reflexive in general."""
    if P.rank != Q.rank:
        raise ValueError("rank mismatch")
    return (set_leq(P.lower_row_set(), Q.upper_row_set())
            and set_leq(P.lower_col_set(), Q.upper_col_set()))


@lru_cache(maxsize=None)
def _admissible_pairs(r: int, k: int) -> tuple:
    """All admissible (I, J) with |I| + |J| = k, deterministic order."""
    out = []
    for s in range(max(0, k - r), min(k, r) + 1):
        for I in combinations(range(1, r + 1), s):
            for J in combinations(range(1, r + 1), k - s):
                ok, _ = is_admissible(I, J, r)
                if ok:
                    out.append((I, J))
    return tuple(out)


def enumerate_doubly_admissible(r: int, k: int) -> set:
    """All doubly admissible minors of size k (may be empty: the
    admissibility condition kills every pair once k exceeds r at small
    ranks)."""
    if not 1 <= k <= 2 * r:
        raise ValueError("minor size out of range")
    pairs = _admissible_pairs(r, k)
    return {MinorSpec(r, ri, rj, ci, cj)
            for ri, rj in pairs for ci, cj in pairs}


@lru_cache(maxsize=None)
def _all_minors(r: int) -> tuple:
    out = []
    for k in range(1, 2 * r + 1):
        out.extend(sorted(enumerate_doubly_admissible(r, k),
                          key=lambda m: (m.row_i, m.row_j, m.col_i, m.col_j)))
    return tuple(out)


@lru_cache(maxsize=None)
def _leq_matrix(r: int):
    minors = _all_minors(r)
    return minors, tuple(
        tuple(tableau_leq(minors[a], minors[b]) for b in range(len(minors)))
        for a in range(len(minors)))


@dataclass(frozen=True)
class Tableau:
    minors: tuple

    def __post_init__(self):
        for a, b in zip(self.minors, self.minors[1:]):
            if not tableau_leq(a, b):
                raise ValueError("consecutive minors violate the chain order")

    @property
    def degree(self) -> int:
        return sum(m.size for m in self.minors)

    def __str__(self):
        return "".join(str(m) for m in self.minors) if self.minors else "()"


def count_tableaux(r: int, d: int) -> int:
    """Number of doubly symplectic standard tableaux of total degree d
    (the empty tableau counts once at d = 0); dynamic programming over
    the chain order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    minors, leq = _leq_matrix(r)
    sizes = [m.size for m in minors]

    @lru_cache(maxsize=None)
    def chains_from(a: int, t: int) -> int:
        # chains starting at minor a with total remaining degree t
        rem = t - sizes[a]
        if rem < 0:
            return 0
        if rem == 0:
            return 1
        return sum(chains_from(b, rem)
                   for b in range(len(minors)) if leq[a][b] and sizes[b] <= rem)

    total = sum(chains_from(a, d) for a in range(len(minors)))
    chains_from.cache_clear()
    return total


def enumerate_tableaux(r: int, d: int) -> list:
    """All tableaux of total degree d (d = 0 gives the empty tableau)."""
    minors, leq = _leq_matrix(r)
    sizes = [m.size for m in minors]
    out = []

    def extend(chain, last, rem):
        if rem == 0:
            out.append(Tableau(tuple(minors[c] for c in chain)))
            return
        for b in range(len(minors)):
            if sizes[b] <= rem and (last is None or leq[last][b]):
                extend(chain + [b], b, rem - sizes[b])

    extend([], None, d)
    return out


def evaluate(P: MinorSpec, presentation) -> Polynomial:
    """The minor as a polynomial: determinant of the submatrix of the
    generic 2r x 2r matrix with rows/columns in the displayed order."""
    ring = presentation.ring
    n = 2 * P.rank
    rows, cols = P.row_tuple, P.col_tuple
    k = len(rows)
    acc = ring.zero()
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        term = ring.constant(sign)
        for a in range(k):
            term = term * ring.variable((rows[a] - 1) * n + (cols[perm[a]] - 1))
        acc = acc + term
    return acc


def phi(T: Tableau, presentation) -> Polynomial:
    """Product of the evaluations of the tableau's minors."""
    ring = presentation.ring
    out = ring.one()
    for m in T.minors:
        out = out * evaluate(m, presentation)
    return out


def corner_minor(r: int) -> MinorSpec:
    """The size-r minor on rows r..1 and columns 1..r (both display
    tuples are (r, ..., 1)); the global minimum of the chain order."""
    full = tuple(range(1, r + 1))
    return MinorSpec(r, full, (), full, ())


@dataclass(frozen=True)
class BasisReport:
    rank: int
    degree: int
    prime: int
    tableau_count: int
    hilbert_value: int
    nf_rank: int
    dependent_witness: tuple = ()

    @property
    def ok(self) -> bool:
        return self.tableau_count == self.hilbert_value == self.nf_rank

    def to_json(self) -> dict:
        return {"r": self.rank, "d": self.degree, "p": self.prime,
                "tableaux": self.tableau_count, "hilbert": self.hilbert_value,
                "rank": self.nf_rank, "ok": self.ok,
                "dependent_witness": [str(t) for t in self.dependent_witness]}


@lru_cache(maxsize=None)
def _ring_groebner(r: int, p: int):
    pres = localmodel.ring_R(r, p)
    return pres, pres.groebner()


def verify_basis(r: int, d: int, p: int = localmodel.DEFAULT_PRIME) -> BasisReport:
    """Check that degree-d tableaux evaluate to a basis of the degree-d
    piece of the worst-singularity ring: the count matches the Hilbert
    function and the normal forms are linearly independent."""
    pres, G = _ring_groebner(r, p)
    hf = hilbert_function(G, d)
    tabs = enumerate_tableaux(r, d)
    std = standard_monomials(G, d)
    index = {m: i for i, m in enumerate(std)}
    rows = []
    for T in tabs:
        h = normal_form(phi(T, pres), G)
        row = [0] * len(std)
        for e, c in h.terms:
            row[index[e]] = c
        rows.append(row)
    rank = _kernels.rank_mod_p(rows, p) if rows else 0
    witness: tuple = ()
    if rank != len(tabs) and rows:
        v = _kernels.nullspace_vector_mod_p(
            [[rows[a][b] for a in range(len(rows))] for b in range(len(std))], p)
        if v is not None:
            witness = tuple(tabs[i] for i, c in enumerate(v) if c)
    return BasisReport(rank=r, degree=d, prime=p, tableau_count=len(tabs),
                       hilbert_value=hf, nf_rank=rank,
                       dependent_witness=witness)


@dataclass(frozen=True)
class NzdReport:
    rank: int
    max_degree: int
    prime: int
    injective_degrees: tuple
    failed_degrees: tuple
    leq_all_minors: bool
    kernel_witness: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failed_degrees and self.leq_all_minors

    def to_json(self) -> dict:
        return {"r": self.rank, "d_max": self.max_degree, "p": self.prime,
                "injective_degrees": list(self.injective_degrees),
                "failed_degrees": list(self.failed_degrees),
                "leq_all_minors": self.leq_all_minors, "ok": self.ok}


def verify_nzd(r: int, d_max: int, p: int = localmodel.DEFAULT_PRIME) -> NzdReport:
    """Non-zero-divisor check for the corner minor f: multiplication by f
    is injective on every degree piece up to d_max, and f is <= every
    doubly admissible minor (so prepending f to a tableau keeps it one)."""
    pres, G = _ring_groebner(r, p)
    f = evaluate(corner_minor(r), pres)
    injective, failed = [], []
    witness: tuple = ()
    for d in range(d_max + 1):
        dim, rank = mult_map_rank(f, G, d)
        if rank == dim:
            injective.append(d)
        else:
            failed.append(d)
            if not witness:
                from symplocal.polyring import mult_map_matrix
                rows, dom, _ = mult_map_matrix(f, G, d)
                v = _kernels.nullspace_vector_mod_p(
                    [[rows[a][b] for a in range(len(rows))]
                     for b in range(len(rows[0]))], p)
                witness = (d, tuple(v or ()))
    fmin = corner_minor(r)
    leq_all = all(tableau_leq(fmin, P) for P in _all_minors(r))
    return NzdReport(rank=r, max_degree=d_max, prime=p,
                     injective_degrees=tuple(injective),
                     failed_degrees=tuple(failed),
                     leq_all_minors=leq_all, kernel_witness=witness)
