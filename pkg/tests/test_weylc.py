"""Affine Weyl group of type C: group law, lengths, reduced words,
Bruhat order.  The BFS word search and the subword enumeration serve as
oracles for the hyperplane-counting length and the Bruhat recursion."""

import pytest

from symplocal.weylc import (WeylElement, bfs_lengths, bruhat_leq, compose,
                             finite_orbit, identity, inverse, length,
                             reduced_word, simple_reflection,
                             subword_interval, tau, tau_power, translation)

MU = {r: (1,) * r + (0,) * r for r in (1, 2, 3)}


def test_element_validation():
    with pytest.raises(ValueError):
        WeylElement(1, (1, 1), (0, 0))  # not a bijection
    with pytest.raises(ValueError):
        WeylElement(2, (1, 2, 3, 4), (1, 0, 0, 0))  # pair sums 1 and 0
    # perm must commute with the flip j -> 2r+1-j
    with pytest.raises(ValueError):
        WeylElement(2, (2, 1, 3, 4), (0, 0, 0, 0))


def test_compose_identity_and_inverse():
    for r in (1, 2, 3):
        e = identity(r)
        w = compose(simple_reflection(0, r),
                    compose(simple_reflection(r, r), translation(MU[r])))
        assert compose(e, w) == w
        assert compose(w, e) == w
        assert compose(w, inverse(w)) == e
        assert compose(inverse(w), w) == e


def test_translations_add():
    lam = (2, 0, 1, -1)
    nu = (1, 1, 0, 0)
    t = compose(translation(lam), translation(nu))
    assert t == translation(tuple(a + b for a, b in zip(lam, nu)))
    assert translation((0, 0)) == identity(1)
    assert translation(MU[2]).similitude == 1


def test_translation_validation():
    with pytest.raises(ValueError):
        translation((1, 0, 0, 0))  # pair sums 1 and 0


def test_similitudes_add():
    u = translation(MU[2])
    w = compose(tau(2), translation((2, 2, 2, 2)))
    assert compose(u, w).similitude == u.similitude + w.similitude == 6


def test_simple_reflections_are_involutions():
    for r in (1, 2, 3):
        for i in range(r + 1):
            s = simple_reflection(i, r)
            assert compose(s, s) == identity(r)
            assert length(s) == 1
    with pytest.raises(ValueError):
        simple_reflection(3, 2)


def test_s1_action_in_coordinates():
    s1 = simple_reflection(1, 2)
    assert s1.apply((1, 0, 0, 0)) == (0, 1, 0, 0)
    assert s1.apply((0, 0, 1, 0)) == (0, 0, 0, 1)


def test_length_examples():
    assert length(identity(2)) == 0
    assert length(translation(MU[2])) == 3  # r(r+1)/2
    assert length(compose(simple_reflection(0, 2), simple_reflection(1, 2))) == 2
    for r in (1, 2, 3):
        assert length(tau(r)) == 0
        assert length(tau_power(r, -2)) == 0
        assert length(translation(MU[r])) == r * (r + 1) // 2


def test_length_matches_bfs():
    for r, radius in ((1, 6), (2, 6), (3, 6)):
        ball = bfs_lengths(r, radius)
        assert all(length(w) == d for w, d in ball.items())


def test_length_changes_by_one():
    for r in (2, 3):
        ball = bfs_lengths(r, 6)
        for w in ball:
            for i in range(r + 1):
                assert abs(length(compose(simple_reflection(i, r), w))
                           - length(w)) == 1


def test_length_zero_twist_invariance():
    for r in (1, 2):
        t = tau(r)
        for w in bfs_lengths(r, 4):
            assert length(compose(w, t)) == length(w)
            assert length(compose(t, w)) == length(w)


def test_reduced_word_roundtrip():
    for r in (1, 2, 3):
        mu = translation(MU[r])
        word, rem = reduced_word(mu)
        assert len(word) == length(mu)
        assert length(rem) == 0
        assert rem == tau_power(r, 1)
        prod = rem
        for i in reversed(word):
            prod = compose(simple_reflection(i, r), prod)
        assert prod == mu
    word, rem = reduced_word(identity(2))
    assert word == () and rem == identity(2)
    word, rem = reduced_word(simple_reflection(1, 2))
    assert word == (1,) and rem == identity(2)


def test_reduced_word_roundtrip_on_ball():
    for r in (1, 2):
        for w, d in bfs_lengths(r, 5).items():
            word, rem = reduced_word(w)
            assert len(word) == d and rem == identity(r)
            prod = rem
            for i in reversed(word):
                prod = compose(simple_reflection(i, r), prod)
            assert prod == w


def test_bruhat_reflexive_and_identity_minimum():
    for r in (1, 2):
        t = tau(r)
        mu = translation(MU[r])
        assert bruhat_leq(mu, mu)
        for w in subword_interval(mu):
            assert bruhat_leq(t, w)  # identity of the coset is minimum


def test_bruhat_cross_coset_false():
    mu = translation(MU[2])
    assert not bruhat_leq(identity(2), mu)  # c = 0 vs c = 1
    assert not bruhat_leq(mu, compose(mu, mu))


def test_bruhat_matches_subword_oracle():
    for r in (1, 2):
        ball = list(bfs_lengths(r, 5))
        for w in ball:
            interval = subword_interval(w)
            for u in ball:
                assert bruhat_leq(u, w) == (u in interval)


def test_bruhat_is_partial_order_on_ball():
    elems = list(bfs_lengths(2, 3))
    leq = {(u, w): bruhat_leq(u, w) for u in elems for w in elems}
    for u in elems:
        for w in elems:
            if leq[u, w] and leq[w, u]:
                assert u == w
            if leq[u, w]:
                for v in elems:
                    if leq[w, v]:
                        assert leq[u, v]


def test_finite_orbit():
    assert finite_orbit((1, 0)) == {(1, 0), (0, 1)}
    assert len(finite_orbit(MU[2])) == 4
    assert finite_orbit((0, 0, 0, 0)) == {(0, 0, 0, 0)}
    orbit = finite_orbit(MU[3])
    assert len(orbit) == 8
    assert all(v[j] + v[5 - j] == 1 for v in orbit for j in range(3))


def test_json_roundtrip():
    w = compose(tau(2), simple_reflection(0, 2))
    assert WeylElement.from_json(w.to_json()) == w
