"""Alcove combinatorics: the permissible/admissible enumerations, the
duality involution, and the extreme alcoves.

The r = 1 permissible set is re-derived here by a fully independent
brute force (direct filtering of all 0/1 level offsets) and frozen; the
larger cardinalities (13 at r = 2, 79 at r = 3) were frozen after the
two independent enumerations agreed.
"""

from itertools import product

import pytest

from symplocal import weylc
from symplocal.alcove import (Alcove, NotPermissibleError, alcove_of,
                              dual_alcove, enumerate_admissible,
                              enumerate_permissible, extreme_alcoves, omega)

FROZEN_CARDINALITY = {1: 3, 2: 13}


def brute_force_permissible_r1():
    """Oracle: filter all 2^4 level-offset combinations directly."""
    out = set()
    for b0 in product((0, 1), repeat=2):
        for b1 in product((0, 1), repeat=2):
            y0 = tuple(b0[j] + omega(0, 1)[j] for j in range(2))
            y1 = tuple(b1[j] + omega(1, 1)[j] for j in range(2))
            a = Alcove(1, (y0, y1))
            if (a.box_ok() and a.rank_ok() and a.chain_ok()
                    and a.is_selfdual()):
                out.add(a)
    return out


def test_r1_permissible_against_brute_force():
    brute = brute_force_permissible_r1()
    assert enumerate_permissible(1) == brute
    assert len(brute) == FROZEN_CARDINALITY[1]


@pytest.mark.parametrize("r", [1, 2])
def test_adm_perm_agreement(r):
    perm = enumerate_permissible(r)
    adm = enumerate_admissible(r)
    image = {alcove_of(w) for w in adm}
    assert image == perm
    assert len(image) == len(adm) == FROZEN_CARDINALITY[r]


def test_admissible_contains_extreme_translations_and_tau():
    for r in (1, 2):
        adm = enumerate_admissible(r)
        assert weylc.tau(r) in adm
        for lam in weylc.finite_orbit((1,) * r + (0,) * r):
            assert weylc.translation(lam) in adm


def test_extreme_alcoves_cardinality():
    for r in (1, 2, 3, 4):
        assert len(extreme_alcoves(r)) == 2**r


def test_extreme_alcoves_structure():
    for r in (1, 2, 3):
        for a in extreme_alcoves(r):
            y0 = a.levels[0]
            assert set(y0) <= {0, 1}
            assert all(y0[j] + y0[2 * r - 1 - j] == 1 for j in range(2 * r))
            for i in range(2 * r):
                assert a.levels[i] == tuple(
                    y0[j] + omega(i, r)[j] for j in range(2 * r))
            assert a.is_selfdual()
            assert a.box_ok() and a.rank_ok() and a.chain_ok()


def test_extreme_alcoves_are_images_of_extreme_translations():
    for r in (1, 2, 3):
        mu = (1,) * r + (0,) * r
        images = {alcove_of(weylc.translation(lam))
                  for lam in weylc.finite_orbit(mu)}
        assert images == extreme_alcoves(r)


def test_extreme_alcoves_member_of_permissible():
    for r in (1, 2):
        assert extreme_alcoves(r) <= enumerate_permissible(r)


def test_extremes_are_bruhat_maximal():
    adm = enumerate_admissible(2)
    extremes = [w for w in adm
                if alcove_of(w) in extreme_alcoves(2)]
    assert len(extremes) == 4
    for x in extremes:
        above = [w for w in adm if weylc.bruhat_leq(x, w) and w != x]
        assert not above


def test_dual_alcove_involution_and_fixed_points():
    for r in (1, 2):
        for a in enumerate_permissible(r):
            assert dual_alcove(dual_alcove(a)) == a
            assert dual_alcove(a) == a


def test_dual_of_base_alcove():
    for r in (1, 2, 3):
        base = alcove_of(weylc.tau(r))
        assert dual_alcove(base) == base


def test_base_alcove_forced_values():
    # the chain of the length-0 coset representative at r = 2:
    # (t.lambda_2, t.lambda_3, lambda_0, lambda_1)
    base = alcove_of(weylc.tau(2))
    assert base.levels == ((0, 0, 1, 1), (0, 0, 0, 1),
                           (0, 0, 0, 0), (-1, 0, 0, 0))


def test_alcove_of_rejects_box_violations():
    mu = (1, 1, 0, 0)
    two_mu = tuple(2 * x for x in mu)
    with pytest.raises(NotPermissibleError):
        alcove_of(weylc.translation(two_mu))
    with pytest.raises(ValueError):
        alcove_of(weylc.identity(2))  # similitude 0


def test_alcove_of_injective_on_admissible():
    for r in (1, 2):
        adm = enumerate_admissible(r)
        assert len({alcove_of(w) for w in adm}) == len(adm)


def test_permissible_levels_are_r_special():
    for r in (1, 2):
        for a in enumerate_permissible(r):
            assert sum(a.levels[0][j] - omega(0, r)[j]
                       for j in range(2 * r)) == r


def test_json_roundtrip():
    a = next(iter(extreme_alcoves(2)))
    assert Alcove.from_json(a.to_json()) == a


def test_alcove_validation():
    with pytest.raises(ValueError):
        Alcove(1, ((0, 0),))  # wrong number of levels
