"""Extended affine Weyl group of type C_r in 2r-coordinate form.

Elements are pairs (finite part, translation): the finite part is a
permutation of {1,...,2r} commuting with j -> 2r+1-j (the hyperoctahedral
group W_r in its 2r-coordinate guise), the translation is an integer
vector whose paired sums trans(j) + trans(2r+1-j) are a constant c, the
similitude.  c = 0 is the affine Weyl group proper; the minuscule
translations live in the c = 1 coset.

Elements act on exponent vectors of torus-fixed lattices by
y -> perm.y + trans, matching the group law used for composition.

Length is the number of affine root hyperplanes of type C_r separating
the base alcove from its image; the base alcove is the one cut out by
the walls of s_0, ..., s_r fixing the standard lattice chain, so chain
rotations (powers of :func:`tau`) have length zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class WeylElement:
    """rank r, perm as 1-indexed images of 1..2r, trans of length 2r."""

    rank: int
    perm: tuple
    trans: tuple

    def __post_init__(self):
        n = 2 * self.rank
        if len(self.perm) != n or sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("perm is not a permutation of 1..2r")
        for j in range(1, n + 1):
            if self.perm[n - j] != n + 1 - self.perm[j - 1]:
                raise ValueError("perm does not commute with j -> 2r+1-j")
        if len(self.trans) != n:
            raise ValueError("translation length != 2r")
        c = self.trans[0] + self.trans[-1]
        for j in range(n):
            if self.trans[j] + self.trans[n - 1 - j] != c:
                raise ValueError("translation pair sums are not constant")

    @property
    def similitude(self) -> int:
        return self.trans[0] + self.trans[-1]

    def apply(self, vec):
        """Action on integer vectors: perm . vec + trans."""
        n = 2 * self.rank
        inv = _inverse_perm(self.perm)
        return tuple(vec[inv[k] - 1] + self.trans[k] for k in range(n))

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "trans": list(self.trans),
                "c": self.similitude}

    @staticmethod
    def from_json(data: dict) -> WeylElement:
        perm = tuple(data["perm"])
        return WeylElement(len(perm) // 2, perm, tuple(data["trans"]))


def _inverse_perm(perm):
    inv = [0] * len(perm)
    for j, img in enumerate(perm, start=1):
        inv[img - 1] = j
    return tuple(inv)


def identity(r: int) -> WeylElement:
    return WeylElement(r, tuple(range(1, 2 * r + 1)), (0,) * (2 * r))


def compose(u: WeylElement, w: WeylElement) -> WeylElement:
    """Product u . w; similitudes add."""
    if u.rank != w.rank:
        raise ValueError("rank mismatch")
    n = 2 * u.rank
    perm = tuple(u.perm[w.perm[j] - 1] for j in range(n))
    uinv = _inverse_perm(u.perm)
    trans = tuple(u.trans[k] + w.trans[uinv[k] - 1] for k in range(n))
    return WeylElement(u.rank, perm, trans)


def inverse(w: WeylElement) -> WeylElement:
    n = 2 * w.rank
    pinv = _inverse_perm(w.perm)
    trans = tuple(-w.trans[w.perm[k] - 1] for k in range(n))
    return WeylElement(w.rank, pinv, trans)


def translation(lam) -> WeylElement:
    """Translation element t_lam; pair sums of lam must be constant."""
    lam = tuple(lam)
    r = len(lam) // 2
    if len(lam) != 2 * r:
        raise ValueError("translation vector must have even length")
    return WeylElement(r, tuple(range(1, 2 * r + 1)), lam)


def _swap_perm(r: int, pairs) -> tuple:
    perm = list(range(1, 2 * r + 1))
    for a, b in pairs:
        perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
    return tuple(perm)


def simple_reflection(i: int, r: int) -> WeylElement:
    """s_0, ..., s_r; s_0 carries the affine translation along the
    highest-root direction, oriented so that it fixes the standard
    partial chain (lattices 1..2r-1)."""
    n = 2 * r
    if not 0 <= i <= r:
        raise ValueError(f"reflection index {i} out of range 0..{r}")
    if i == 0:
        trans = [0] * n
        trans[0], trans[n - 1] = -1, 1
        return WeylElement(r, _swap_perm(r, [(1, n)]), tuple(trans))
    if i == r:
        return WeylElement(r, _swap_perm(r, [(r, r + 1)]), (0,) * n)
    return WeylElement(
        r, _swap_perm(r, [(i, i + 1), (n - i, n + 1 - i)]), (0,) * n)


def tau(r: int) -> WeylElement:
    """Generator of the length-0 subgroup: rotates the standard periodic
    chain by r steps; similitude 1."""
    perm = tuple(list(range(r + 1, 2 * r + 1)) + list(range(1, r + 1)))
    return WeylElement(r, perm, (0,) * r + (1,) * r)


def tau_power(r: int, c: int) -> WeylElement:
    w = identity(r)
    t = tau(r) if c >= 0 else inverse(tau(r))
    for _ in range(abs(c)):
        w = compose(w, t)
    return w


@lru_cache(maxsize=None)
def _positive_root_pairs(r: int):
    return tuple((j, k) for j in range(1, 2 * r + 1)
                 for k in range(j + 1, 2 * r + 1) if j + k <= 2 * r + 1)


@lru_cache(maxsize=None)
def _base_point(r: int):
    # interior point of the base alcove, scaled by D = 2(r+1):
    # coordinates -(r+1-i) for i <= r, antisymmetric in the second half
    q = [-(r + 1 - i) for i in range(1, r + 1)]
    return tuple(q + [-v for v in reversed(q)])


@lru_cache(maxsize=None)
def length(w: WeylElement) -> int:
    """Iwahori-Matsumoto length: affine hyperplanes separating the base
    alcove from its image under w."""
    r = w.rank
    n = 2 * r
    D = 2 * (r + 1)
    q = _base_point(r)
    inv = _inverse_perm(w.perm)
    c = w.similitude
    img = tuple(q[inv[k] - 1] + D * w.trans[k] - c * (r + 1) for k in range(n))
    total = 0
    for j, k in _positive_root_pairs(r):
        a = q[j - 1] - q[k - 1]
        b = img[j - 1] - img[k - 1]
        total += abs(b // D - a // D)
    return total


def descent(w: WeylElement):
    """Smallest i with length(s_i w) < length(w), or None at length 0."""
    lw = length(w)
    if lw == 0:
        return None
    for i in range(w.rank + 1):
        if length(compose(simple_reflection(i, w.rank), w)) < lw:
            return i
    raise AssertionError("positive length but no descent")


def reduced_word(w: WeylElement):
    """(word, remainder): w = s_{i_1} ... s_{i_l} . remainder with the
    remainder of length 0; the smallest descent is taken at each step."""
    word = []
    cur = w
    while True:
        i = descent(cur)
        if i is None:
            return tuple(word), cur
        word.append(i)
        cur = compose(simple_reflection(i, cur.rank), cur)


@lru_cache(maxsize=None)
def _bruhat_leq_cached(u: WeylElement, w: WeylElement) -> bool:
    lw = length(w)
    if length(u) > lw:
        return False
    if lw == 0:
        return u == w
    i = descent(w)
    s = simple_reflection(i, w.rank)
    sw = compose(s, w)
    su = compose(s, u)
    if length(su) < length(u):
        return _bruhat_leq_cached(su, sw)
    return _bruhat_leq_cached(u, sw)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order; comparisons across different similitude cosets are
    false by convention."""
    if u.rank != w.rank:
        raise ValueError("rank mismatch")
    if u.similitude != w.similitude:
        return False
    return _bruhat_leq_cached(u, w)


def subword_interval(w: WeylElement):
    """{u : u <= w} via subword enumeration of one fixed reduced word.

    Independent oracle for bruhat_leq, and the exact Bruhat interval by
    the subword property.
    """
    word, rem = reduced_word(w)
    refs = [simple_reflection(i, w.rank) for i in word]
    elements = {rem}
    for s in refs[::-1]:
        elements |= {compose(s, u) for u in elements}
    return elements


def finite_orbit(mu) -> set:
    """Orbit of an integer vector under the finite group W_r."""
    mu = tuple(mu)
    r = len(mu) // 2
    gens = [simple_reflection(i, r) for i in range(1, r + 1)]
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for v in frontier:
            for s in gens:
                img = s.apply(v)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def bfs_lengths(r: int, radius: int = 8) -> dict:
    """Word lengths over s_0..s_r up to the given radius, by BFS from the
    identity.  Oracle for :func:`length` on the affine group."""
    gens = [simple_reflection(i, r) for i in range(r + 1)]
    dist = {identity(r): 0}
    frontier = [identity(r)]
    for d in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for s in gens:
                u = compose(s, w)
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist
