"""Lattice-chain alcoves for the symplectic similitude group.

An alcove encodes a torus-fixed chain of lattices L_0 c L_1 c ... between
t.lambda_i and lambda_i, where lambda_i = t^{-1}R[[t]]^i + R[[t]]^{2r-i}
is the standard chain.  Level i is the exponent vector y_i of L_i; the
standard lattice has exponents omega_i = (-1^i, 0^{2r-i}).

The permissible set consists of the alcoves satisfying the box, rank,
chain, periodicity and selfduality conditions (the torus-fixed points of
the special fibre of the full local model); the admissible set consists
of the Weyl elements Bruhat-below a conjugate of the minuscule coweight
(1^r, 0^r).  Their agreement under :func:`alcove_of` is the
Kottwitz-Rapoport coincidence that the acceptance suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from symplocal import weylc
from symplocal.weylc import WeylElement


class NotPermissibleError(ValueError):
    """Raised when a Weyl element's chain leaves the admissible box."""


def omega(i: int, r: int) -> tuple:
    """Exponent vector of the standard lattice at level i."""
    return tuple(-1 if j < i else 0 for j in range(2 * r))


@dataclass(frozen=True)
class Alcove:
    rank: int
    levels: tuple  # 2r vectors of length 2r

    def __post_init__(self):
        r = self.rank
        if len(self.levels) != 2 * r or any(len(y) != 2 * r for y in self.levels):
            raise ValueError("levels must be 2r vectors of length 2r")

    def box_ok(self) -> bool:
        r = self.rank
        return all(self.levels[i][j] - omega(i, r)[j] in (0, 1)
                   for i in range(2 * r) for j in range(2 * r))

    def rank_ok(self) -> bool:
        r = self.rank
        return all(sum(self.levels[i][j] - omega(i, r)[j]
                       for j in range(2 * r)) == r
                   for i in range(2 * r))

    def chain_ok(self) -> bool:
        n = 2 * self.rank
        for i in range(n - 1):
            if any(self.levels[i + 1][j] > self.levels[i][j] for j in range(n)):
                return False
        # periodic closure L_{2r-1} c t^{-1} L_0
        return all(self.levels[0][j] - 1 <= self.levels[n - 1][j]
                   for j in range(n))

    def is_selfdual(self) -> bool:
        return dual_alcove(self) == self

    def to_json(self) -> dict:
        return {"r": self.rank, "levels": [list(y) for y in self.levels]}

    @staticmethod
    def from_json(data: dict) -> Alcove:
        return Alcove(data["r"], tuple(tuple(y) for y in data["levels"]))


def dual_alcove(a: Alcove) -> Alcove:
    """Symplectic dual chain, re-indexed to a chain again.

    Level i of the dual is the dual lattice of level 2r-i; the wrap-around
    at level 0 carries the t-twist that makes the similitude-one
    normalization selfconsistent (a is selfdual iff dual_alcove(a) = a).
    """
    r = a.rank
    n = 2 * r
    if not a.box_ok():
        raise ValueError("dual_alcove needs the box condition")
    levels = []
    for i in range(n):
        src = a.levels[(n - i) % n]
        shift = 1 if i == 0 else 0
        levels.append(tuple(shift - src[n - 1 - j] for j in range(n)))
    return Alcove(r, tuple(levels))


def alcove_of(w: WeylElement) -> Alcove:
    """Alcove of the image chain (w . lambda_i)_i.

    Raises NotPermissibleError when the box condition fails (w is not
    permissible); requires similitude 1.
    """
    r = w.rank
    if w.similitude != 1:
        raise NotPermissibleError(
            f"not permissible: similitude {w.similitude} != 1")
    levels = tuple(w.apply(omega(i, r)) for i in range(2 * r))
    a = Alcove(r, levels)
    if not a.box_ok():
        raise NotPermissibleError(f"not permissible: box condition fails for {w}")
    return a


def extreme_alcoves(r: int) -> set:
    """The 2^r alcoves of the extreme translations: level 0 runs over the
    finite orbit of the minuscule coweight and level i adds omega_i."""
    mu = (1,) * r + (0,) * r
    out = set()
    for lam in weylc.finite_orbit(mu):
        levels = tuple(tuple(lam[j] + omega(i, r)[j] for j in range(2 * r))
                       for i in range(2 * r))
        out.add(Alcove(r, levels))
    return out


def _balanced_vectors(r: int):
    """0/1 vectors of length 2r with exactly r ones."""
    n = 2 * r
    out = []
    for ones in combinations(range(n), r):
        v = [0] * n
        for j in ones:
            v[j] = 1
        out.append(tuple(v))
    return out


def enumerate_permissible(r: int) -> set:
    """All alcoves satisfying box, rank, chain, periodicity and duality.

    Levels are searched as offset vectors b_i = y_i - omega_i in {0,1}^{2r}
    with sum r; the chain condition lets b_{i+1} differ from b_i only by
    moving a single 1 to coordinate i+1.
    """
    n = 2 * r
    results = set()
    starts = _balanced_vectors(r)

    def successors(b, i):
        # candidates for b_{i+1} given b = b_i: the chain condition says
        # b_{i+1} <= b_i away from coordinate i, and the rank condition
        # keeps the number of ones fixed, so either b repeats or one 1
        # moves onto coordinate i
        yield b
        if b[i] == 0:
            for k in range(n):
                if k != i and b[k] == 1:
                    c = list(b)
                    c[k], c[i] = 0, 1
                    yield tuple(c)

    def extend(bs):
        i = len(bs) - 1
        if i == n - 1:
            levels = tuple(
                tuple(bs[m][j] + omega(m, r)[j] for j in range(n))
                for m in range(n))
            a = Alcove(r, levels)
            if a.chain_ok() and a.is_selfdual():
                results.add(a)
            return
        for c in successors(bs[-1], i):
            extend(bs + [c])

    for b0 in starts:
        extend([b0])
    return results


def enumerate_admissible(r: int) -> set:
    """Weyl elements Bruhat-below some finite conjugate of the minuscule
    coweight, computed as the union of subword intervals of the 2^r
    extreme translations."""
    mu = (1,) * r + (0,) * r
    out = set()
    for lam in weylc.finite_orbit(mu):
        out |= weylc.subword_interval(weylc.translation(lam))
    return out
