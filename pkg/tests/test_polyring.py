"""Polynomial ring over F_p: arithmetic, Groebner bases, staircase data.

The degree-piece values asserted here were computed with the
brute-force row-reduction oracle (which several tests re-run inline)
before being frozen.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symplocal.polyring import (PolyRing, PrimeField,
                                brute_force_degree_piece, buchberger,
                                degrevlex_key, hilbert_function,
                                krull_dimension, monomial_divides,
                                monomials_of_degree, mult_map_rank,
                                normal_form, s_polynomial,
                                standard_monomials)


@pytest.fixture(scope="module")
def ring4():
    return PolyRing(["c_1_1", "c_1_2", "c_2_1", "c_2_2"], 101)


@pytest.fixture(scope="module")
def det_ideal(ring4):
    c11, c12, c21, c22 = (ring4.variable(i) for i in range(4))
    det = c11 * c22 - c12 * c21
    return det, buchberger([det])


def test_prime_field_validation():
    PrimeField(101)
    PrimeField(32003)
    with pytest.raises(ValueError):
        PrimeField(91)  # 7 * 13
    with pytest.raises(ValueError):
        PrimeField(2)
    with pytest.raises(ValueError):
        PrimeField(2**31 + 11)


def test_degrevlex_order():
    # x z > y^2 in degrevlex would be wrong: y^2 > xz for x > y > z
    xz = (1, 0, 1)
    y2 = (0, 2, 0)
    assert degrevlex_key(y2) > degrevlex_key(xz)
    x2 = (2, 0, 0)
    assert degrevlex_key(x2) > degrevlex_key(y2)
    # graded: any degree-3 beats degree-2
    assert degrevlex_key((0, 0, 3)) > degrevlex_key(x2)


def test_polynomial_invariants(ring4):
    f = ring4.from_terms([((1, 0, 0, 1), 1), ((0, 1, 1, 0), 100),
                          ((1, 0, 0, 1), 100)])
    # duplicate monomials merged, zero coefficients dropped
    assert f.terms == (((0, 1, 1, 0), 100),)
    keys = [degrevlex_key(e) for e, _ in f.terms]
    assert keys == sorted(keys, reverse=True)


def test_arithmetic_basics(ring4):
    a, b = ring4.variable(0), ring4.variable(3)
    assert (a + b) - b == a
    assert a * ring4.zero() == ring4.zero()
    assert (a + b) * (a - b) == a * a - b * b
    assert (a + 1) ** 2 == a * a + 2 * a + 1
    assert (-a) + a == ring4.zero()


def test_derivative_and_evaluate(ring4):
    c11, c12, c21, c22 = (ring4.variable(i) for i in range(4))
    det = c11 * c22 - c12 * c21
    assert det.derivative(0) == c22
    assert det.derivative(1) == -c21
    assert det.evaluate([1, 2, 3, 4]) == (4 - 6) % 101
    assert det.is_homogeneous()
    assert not (det + c11).is_homogeneous()


def test_normal_form_examples(ring4, det_ideal):
    det, G = det_ideal
    c11, c12 = ring4.variable(0), ring4.variable(1)
    # generators reduce to zero
    assert not normal_form(det, G)
    assert not normal_form(ring4.zero(), G)
    # hand division: c11*det + c12 leaves c12
    assert normal_form(c11 * det + c12, G) == c12
    # ring mismatch is an error
    other = PolyRing(["x"], 101)
    with pytest.raises(ValueError):
        normal_form(other.variable(0), G)


def test_normal_form_idempotent_and_multiplicative(ring4, det_ideal):
    _, G = det_ideal
    rng = random.Random(3)

    def random_poly():
        return ring4.from_terms(
            [(tuple(rng.randrange(3) for _ in range(4)), rng.randrange(1, 101))
             for _ in range(rng.randrange(1, 6))])

    for _ in range(20):
        f, g = random_poly(), random_poly()
        nf = normal_form(f, G)
        assert normal_form(nf, G) == nf
        lhs = normal_form(f * g, G)
        rhs = normal_form(normal_form(f, G) * normal_form(g, G), G)
        assert lhs == rhs


def test_buchberger_monomial_ideal(ring4):
    x, y = ring4.variable(0), ring4.variable(1)
    G = buchberger([x, y])
    assert set(G.basis) == {x, y}


def test_buchberger_principal_ideal(det_ideal):
    det, G = det_ideal
    assert len(G.basis) == 1
    assert G.basis[0] == det.monic()


def test_reduced_basis_properties(ring4):
    # a non-trivial ideal: 2x2 minors of a 2x3-style setup inside 4 vars
    c11, c12, c21, c22 = (ring4.variable(i) for i in range(4))
    gens = [c11 * c22 - c12 * c21, c11 * c21 - c12 * c22, c11 + c22]
    G = buchberger(gens)
    # every S-polynomial reduces to zero
    for i in range(len(G.basis)):
        for j in range(i + 1, len(G.basis)):
            assert not normal_form(s_polynomial(G.basis[i], G.basis[j]), G)
    # reduced: no monomial of g divisible by another leading monomial
    for i, g in enumerate(G.basis):
        assert g.lc() == 1
        for j, h in enumerate(G.basis):
            if i == j:
                continue
            for e, _ in g.terms:
                assert not monomial_divides(h.lm(), e)
    # generators lie in the ideal
    for g in gens:
        assert not normal_form(g, G)


def test_buchberger_deterministic(ring4):
    c11, c12, c21, c22 = (ring4.variable(i) for i in range(4))
    gens = [c11 * c22 - c12 * c21, c21 * c12 - c22 * c11 + c11 * c12]
    assert buchberger(gens).basis == buchberger(gens).basis


def test_hilbert_function_det_ideal(det_ideal):
    _, G = det_ideal
    assert [hilbert_function(G, d) for d in range(4)] == [1, 4, 9, 16]


def test_hilbert_full_ring():
    R = PolyRing(["x", "y"], 101)
    G = buchberger([], R)
    assert hilbert_function(G, 3) == 4
    assert krull_dimension(G) == 2


def test_hilbert_matches_brute_force(ring4, det_ideal):
    det, G = det_ideal
    for d in range(5):
        assert hilbert_function(G, d) == brute_force_degree_piece([det], d)


def test_brute_force_examples(ring4, det_ideal):
    det, _ = det_ideal
    assert brute_force_degree_piece([det], 0) == 1
    # 10 degree-2 monomials minus rank 1
    assert brute_force_degree_piece([det], 2) == 9
    with pytest.raises(RuntimeError):
        brute_force_degree_piece([det], 4, max_entries=10)
    with pytest.raises(ValueError):
        brute_force_degree_piece([det + ring4.variable(0)], 2)


def test_krull_dimension_cases(ring4, det_ideal):
    _, G = det_ideal
    assert krull_dimension(G) == 3
    R2 = PolyRing(["x", "y"], 101)
    assert krull_dimension(buchberger([R2.variable(0), R2.variable(1)])) == 0
    assert krull_dimension(buchberger([R2.one()])) == -1


def test_mult_map_rank(ring4, det_ideal):
    det, G = det_ideal
    c11 = ring4.variable(0)
    one = ring4.one()
    for d in range(4):
        dim, rank = mult_map_rank(one, G, d)
        assert dim == rank == hilbert_function(G, d)
        dim, rank = mult_map_rank(c11, G, d)
        assert dim == rank
    assert mult_map_rank(det, G, 1) == (4, 0)
    with pytest.raises(ValueError):
        mult_map_rank(c11 + one, G, 1)


def test_two_primes_agree_on_det_ideal():
    for p in (101, 32003):
        R = PolyRing(["a", "b", "c", "d"], p)
        det = R.variable(0) * R.variable(3) - R.variable(1) * R.variable(2)
        G = buchberger([det])
        assert [hilbert_function(G, d) for d in range(4)] == [1, 4, 9, 16]
        assert krull_dimension(G) == 3


def test_monomials_of_degree_count():
    assert len(list(monomials_of_degree(4, 3))) == 20
    assert list(monomials_of_degree(2, 0)) == [(0, 0)]


def test_standard_monomials(det_ideal):
    _, G = det_ideal
    std = standard_monomials(G, 2)
    assert len(std) == 9
    lm = G.lead_monomials[0]
    assert all(not monomial_divides(lm, m) for m in std)


def test_text_and_json_roundtrip(ring4):
    c11, c12 = ring4.variable(0), ring4.variable(1)
    f = 3 * c11 * c11 * c12 + 99 * c12 + 5
    text = ring4.format_poly(f)
    assert ring4.parse_poly(text) == f
    assert ring4.poly_from_json(ring4.poly_to_json(f)) == f
    assert ring4.format_poly(ring4.zero()) == "0"
    assert ring4.parse_poly("0") == ring4.zero()


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                          st.integers(1, 100)), min_size=0, max_size=6),
       st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                          st.integers(1, 100)), min_size=0, max_size=6))
def test_ring_axioms_hypothesis(terms_f, terms_g):
    R = PolyRing(["x", "y"], 101)
    f, g = R.from_terms(terms_f), R.from_terms(terms_g)
    assert f + g == g + f
    assert f * g == g * f
    assert (f - g) + g == f
    assert f * (g + 1) == f * g + f
