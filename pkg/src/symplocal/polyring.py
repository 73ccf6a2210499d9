"""Multivariate polynomial arithmetic over prime fields.

Exact computations only: Buchberger's algorithm for reduced Groebner
bases in graded reverse lexicographic order, normal forms, staircase
(standard monomial) counts, combinatorial Krull dimension, and rank
computations on graded pieces.  Coefficients live in F_p for a prime
p < 2^31 so that all kernel arithmetic fits in 64-bit words.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from symplocal import _kernels

Monomial = tuple  # exponent vector over the ring's variable list

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """F_p with 2 < p < 2^31; primality is checked at construction."""

    p: int

    def __post_init__(self):
        if not (2 < self.p < 2**31):
            raise ValueError(f"modulus {self.p} out of range (2, 2^31)")
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def degrevlex_key(m: Monomial):
    """Sort key: ascending in graded reverse lexicographic order."""
    return (sum(m), tuple(-e for e in reversed(m)))


def monomials_of_degree(nvars: int, d: int):
    """Yield all exponent vectors of total degree d (fixed deterministic order)."""
    if nvars == 1:
        yield (d,)
        return
    for e0 in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e0):
            yield (e0,) + rest


class PolyRing:
    """Polynomial ring F_p[x_0, ..., x_{n-1}] with degrevlex order.

    Variables are ordered by position: earlier names are larger in the
    monomial order.
    """

    def __init__(self, names, p: int):
        self.field = PrimeField(p)
        self.p = p
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self._zero_mon = (0,) * self.nvars

    def __repr__(self):
        return f"PolyRing({list(self.names)!r}, p={self.p})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.names == other.names and self.p == other.p)

    def __hash__(self):
        return hash((self.names, self.p))

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: int) -> Polynomial:
        c %= self.p
        if c == 0:
            return self.zero()
        return Polynomial(self, ((self._zero_mon, c),))

    def variable(self, i: int) -> Polynomial:
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((tuple(exps), 1),))

    def var_by_name(self, name: str) -> Polynomial:
        return self.variable(self.names.index(name))

    def monomial(self, exps, c: int = 1) -> Polynomial:
        return self.from_terms([(tuple(exps), c)])

    def from_terms(self, terms) -> Polynomial:
        acc: dict[Monomial, int] = {}
        for exps, c in terms:
            exps = tuple(exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            acc[exps] = (acc.get(exps, 0) + c) % self.p
        ordered = sorted(
            ((e, c) for e, c in acc.items() if c),
            key=lambda t: degrevlex_key(t[0]), reverse=True)
        return Polynomial(self, tuple(ordered))

    # -- text / JSON formats ------------------------------------------------

    def format_poly(self, f: Polynomial) -> str:
        if not f.terms:
            return "0"
        parts = []
        for exps, c in f.terms:
            factors = [str(c)]
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(self.names[i])
                elif e > 1:
                    factors.append(f"{self.names[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def parse_poly(self, text: str) -> Polynomial:
        text = text.strip()
        if text == "0":
            return self.zero()
        terms = []
        for chunk in text.split(" + "):
            factors = chunk.split("*")
            c = int(factors[0])
            exps = [0] * self.nvars
            for fac in factors[1:]:
                if "^" in fac:
                    name, _, e = fac.partition("^")
                    exps[self.names.index(name)] += int(e)
                else:
                    exps[self.names.index(fac)] += 1
            terms.append((tuple(exps), c))
        return self.from_terms(terms)

    def poly_to_json(self, f: Polynomial) -> list:
        return [[c, list(e)] for e, c in f.terms]

    def poly_from_json(self, data) -> Polynomial:
        return self.from_terms((tuple(e), c) for c, e in data)


class Polynomial:
    """Immutable polynomial: terms sorted strictly descending in degrevlex."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = tuple(terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.ring == other.ring and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return self.ring.format_poly(self)

    def _check_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check_ring(other)
        return self.ring.from_terms(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, tuple((e, p - c) for e, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero()
            p = self.ring.p
            return Polynomial(
                self.ring, tuple((e, (k * c) % p) for e, k in self.terms))
        self._check_ring(other)
        p = self.ring.p
        acc: dict[Monomial, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                m = monomial_mul(e1, e2)
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        ordered = sorted(((e, c) for e, c in acc.items() if c),
                         key=lambda t: degrevlex_key(t[0]), reverse=True)
        return Polynomial(self.ring, tuple(ordered))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self) -> int:
        if not self.terms:
            return 0
        return self.terms[0][1]

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lc())
        return self * inv

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(monomial_degree(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {monomial_degree(e) for e, _ in self.terms}
        return len(degs) == 1

    def derivative(self, i: int) -> Polynomial:
        out = []
        for e, c in self.terms:
            if e[i] > 0:
                d = list(e)
                d[i] -= 1
                out.append((tuple(d), c * e[i]))
        return self.ring.from_terms(out)

    def evaluate(self, point) -> int:
        """Value at a point (sequence of ints), reduced mod p."""
        p = self.ring.p
        total = 0
        for e, c in self.terms:
            v = c
            for i, exp in enumerate(e):
                if exp:
                    v = v * pow(point[i] % p, exp, p) % p
            total = (total + v) % p
        return total


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with its generating presentation."""

    ring: PolyRing
    generators: tuple
    basis: tuple
    order: str = "degrevlex"
    _packed: list = field(default_factory=list, repr=False, compare=False)

    @property
    def lead_monomials(self) -> tuple:
        return tuple(g.lm() for g in self.basis)

    def packed(self):
        if not self._packed:
            self._packed.append(
                _kernels.pack_basis([list(g.terms) for g in self.basis],
                                    self.ring.p))
        return self._packed[0]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.basis)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Unique remainder of f modulo G: no term divisible by a leading monomial."""
    if f.ring != G.ring:
        raise ValueError("polynomial and basis from different rings")
    if not G.basis or not f:
        return f
    reduced = _kernels.poly_reduce(list(f.terms), G.packed(), f.ring.p)
    return Polynomial(f.ring, tuple(reduced))


def _reduce_vs_list(f: Polynomial, polys: list) -> Polynomial:
    if not polys or not f:
        return f
    packed = _kernels.pack_basis([list(g.terms) for g in polys], f.ring.p)
    return Polynomial(
        f.ring, tuple(_kernels.poly_reduce(list(f.terms), packed, f.ring.p)))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    l = monomial_lcm(f.lm(), g.lm())
    mf = f.ring.monomial(monomial_div(l, f.lm()), f.ring.field.inv(f.lc()))
    mg = g.ring.monomial(monomial_div(l, g.lm()), g.ring.field.inv(g.lc()))
    return mf * f - mg * g


def buchberger(gens, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Deterministic: pairs are processed by increasing lcm degree, ties
    broken by pair index; the product and chain criteria prune pairs.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    basis = []
    for g in gens:
        if g.ring != ring:
            raise ValueError("generator from a different ring")
        if g:
            g = g.monic()
            if g not in basis:
                basis.append(g)

    pending: list = []
    pending_set: set = set()

    def push_pairs(j: int):
        for i in range(j):
            l = monomial_lcm(basis[i].lm(), basis[j].lm())
            heapq.heappush(pending, (monomial_degree(l), i, j))
            pending_set.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while pending:
        _, i, j = heapq.heappop(pending)
        if (i, j) not in pending_set:
            continue
        pending_set.discard((i, j))
        lmi, lmj = basis[i].lm(), basis[j].lm()
        l = monomial_lcm(lmi, lmj)
        # product criterion
        if l == monomial_mul(lmi, lmj):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monomial_divides(basis[k].lm(), l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending_set and b not in pending_set:
                    skip = True
                    break
        if skip:
            continue
        h = _reduce_vs_list(s_polynomial(basis[i], basis[j]), basis)
        if h:
            basis.append(h.monic())
            push_pairs(len(basis) - 1)

    # minimalize: drop elements whose leading monomial is divisible by another's
    basis.sort(key=lambda g: degrevlex_key(g.lm()))
    minimal = []
    for g in basis:
        if not any(monomial_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    # tail-reduce each element against the others
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(_reduce_vs_list(g, others).monic())
    reduced.sort(key=lambda g: degrevlex_key(g.lm()))
    return GroebnerBasis(ring=ring, generators=tuple(gens), basis=tuple(reduced))


def hilbert_function(G: GroebnerBasis, d: int) -> int:
    """Number of degree-d standard monomials of G.

    For a homogeneous ideal this is dim_k (ring/ideal)_d; for an
    inhomogeneous ideal it is the degree-d slice of the staircase
    (the graded piece of the degree filtration).
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    lms = G.lead_monomials
    if any(monomial_degree(m) == 0 for m in lms):
        return 0
    count = 0
    for m in monomials_of_degree(G.ring.nvars, d):
        if not any(monomial_divides(lm, m) for lm in lms):
            count += 1
    return count


def standard_monomials(G: GroebnerBasis, d: int) -> list:
    """Degree-d standard monomials, descending in degrevlex."""
    lms = G.lead_monomials
    return [m for m in monomials_of_degree(G.ring.nvars, d)
            if not any(monomial_divides(lm, m) for lm in lms)]


def krull_dimension(G: GroebnerBasis) -> int:
    """Dimension of the staircase: largest #S with no leading-monomial
    support inside S.  Equals dim(ring/ideal) for a graded order."""
    n = G.ring.nvars
    supports = []
    for m in G.lead_monomials:
        s = frozenset(i for i, e in enumerate(m) if e)
        if not s:
            return -1  # unit ideal
        supports.append(s)
    supports = sorted(set(supports), key=len)
    # remove supersets; they are hit whenever a subset is hit
    minimal: list[frozenset] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)

    best = [n + 1]

    def cover(idx: int, chosen: frozenset):
        # minimum hitting set of `minimal[idx:]` given `chosen` is hit
        if len(chosen) >= best[0]:
            return
        for k in range(idx, len(minimal)):
            if not (minimal[k] & chosen):
                for v in sorted(minimal[k]):
                    cover(k + 1, chosen | {v})
                return
        best[0] = len(chosen)

    cover(0, frozenset())
    return n - best[0]


def _check_same_ring(f: Polynomial, G: GroebnerBasis):
    if f.ring != G.ring:
        raise ValueError("polynomial and basis from different rings")


def mult_map_matrix(f: Polynomial, G: GroebnerBasis, d: int):
    """Matrix of multiplication by f from degree-d standard monomials to
    degree-(d + deg f) standard-monomial coordinates."""
    _check_same_ring(f, G)
    if not f.is_homogeneous():
        raise ValueError("multiplication map needs a homogeneous polynomial")
    df = f.degree()
    domain = standard_monomials(G, d)
    codomain = standard_monomials(G, d + df)
    index = {m: i for i, m in enumerate(codomain)}
    rows = []
    for m in domain:
        h = normal_form(f * G.ring.monomial(m), G)
        row = [0] * len(codomain)
        for e, c in h.terms:
            if e not in index:
                raise ValueError("multiplication map needs a homogeneous ideal")
            row[index[e]] = c
        rows.append(row)
    return rows, domain, codomain


def mult_map_rank(f: Polynomial, G: GroebnerBasis, d: int) -> tuple[int, int]:
    """(domain dimension, rank) of multiplication by f on the degree-d piece."""
    rows, domain, _ = mult_map_matrix(f, G, d)
    if not domain:
        return 0, 0
    rank = _kernels.rank_mod_p(rows, G.ring.p)
    return len(domain), rank


def brute_force_degree_piece(gens, d: int, max_entries: int = 2 * 10**7) -> int:
    """dim_k (ring/ideal)_d without Groebner bases.

    Row-reduces the span of {g * m : deg(g * m) = d} inside the full
    degree-d monomial basis and subtracts the rank.  Independent oracle
    for :func:`hilbert_function` on homogeneous ideals.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("brute-force degree piece needs homogeneous generators")
    cols = list(monomials_of_degree(ring.nvars, d))
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in gens:
        dg = g.degree()
        if dg > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - dg):
            row = [0] * len(cols)
            for e, c in g.terms:
                row[index[monomial_mul(e, m)]] = c
            rows.append(row)
            if len(rows) * len(cols) > max_entries:
                raise RuntimeError(
                    f"degree-{d} piece exceeds the {max_entries}-entry cap")
    if not rows:
        return len(cols)
    rank = _kernels.rank_mod_p(rows, ring.p)
    return len(cols) - rank
