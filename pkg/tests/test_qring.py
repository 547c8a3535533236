from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qharmonic.errors import BadModulus, ModulusMismatch, NotInvertible, ZeroElement
from qharmonic.polyring import Poly, poly_ext_gcd, poly_monomial, poly_mul, poly_one, poly_zero
from qharmonic.qring import (
    coefficient_denominators,
    one_minus_q_pow,
    q_g_sum_res,
    q_harmonic_res,
    q_int,
    q_modulus,
    q_power_sum_res,
    q_reciprocal_pair_sum_res,
    res_add,
    res_inv,
    res_make,
    res_mul,
    res_pow,
)

ONE_MINUS_Q = Poly((1, -1))


def P(*coeffs):
    return Poly(coeffs)


def test_q_int():
    assert q_int(1) == P(1)
    assert q_int(3) == P(1, 1, 1)
    assert q_int(0) == poly_zero()


def test_q_modulus():
    assert q_modulus(5, 1) == P(1, 1, 1, 1, 1)
    assert q_modulus(3, 2) == P(1, 2, 3, 2, 1)
    assert q_modulus(2, 1) == P(1, 1)
    assert q_modulus(7, 3).degree == 18


class TestResMake:
    def test_q_to_the_p(self):
        assert res_make(poly_monomial(1, 5), q_int(5)).rep == P(1)

    def test_already_reduced(self):
        assert res_make(P(1, 1), q_int(5)).rep == P(1, 1)

    def test_modulus_itself(self):
        assert res_make(q_int(5), q_int(5)).rep == poly_zero()

    @pytest.mark.parametrize("modulus", [poly_zero(), P(3)])
    def test_bad_modulus(self, modulus):
        with pytest.raises(BadModulus):
            res_make(P(1, 1), modulus)

    def test_mixed_moduli_rejected(self):
        a = res_make(P(1, 1), q_int(5))
        b = res_make(P(1, 1), q_int(7))
        with pytest.raises(ModulusMismatch):
            res_add(a, b)
        with pytest.raises(ModulusMismatch):
            res_mul(a, b)


class TestResInv:
    def test_one_plus_q(self):
        assert res_inv(res_make(P(1, 1), q_int(5))).rep == P(0, -1, 0, -1)

    def test_unit(self):
        assert res_inv(res_make(P(1), q_int(7))).rep == P(1)

    def test_shares_factor(self):
        modulus = q_modulus(5, 2)
        with pytest.raises(NotInvertible):
            res_inv(res_make(poly_mul(q_int(5), P(2, 1)), modulus))

    def test_zero(self):
        with pytest.raises(ZeroElement):
            res_inv(res_make(poly_zero(), q_int(5)))

    @given(st.sampled_from([5, 7, 11, 13]),
           st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=14))
    def test_roundtrip(self, p, coeffs):
        r = res_make(Poly(coeffs), q_int(p))
        if not r.rep:
            return
        # [p]_q is irreducible, so every nonzero class is a unit
        assert res_mul(res_inv(r), r).rep == poly_one()

    def test_negative_power_is_inverse(self):
        r = res_make(P(1, 1), q_int(5))
        assert res_pow(r, -1) == res_inv(r)
        assert res_pow(r, 3) == res_mul(r, res_mul(r, r))


class TestSums:
    def test_harmonic_single_term(self):
        assert q_harmonic_res(1, q_int(7)).rep == P(1)

    def test_harmonic_andrews_p5(self):
        assert q_harmonic_res(4, q_int(5)).rep == P(2, -2)

    def test_harmonic_p3(self):
        assert q_harmonic_res(2, q_int(3)).rep == P(1, -1)

    def test_weighted_p5(self):
        expected = res_make(poly_mul(P(-2), poly_mul(ONE_MINUS_Q, ONE_MINUS_Q)), q_int(5))
        assert q_power_sum_res(4, q_int(5), weighted=True) == expected

    def test_plain_p5_vanishes(self):
        assert q_power_sum_res(4, q_int(5), weighted=False).rep == poly_zero()

    def test_single_term(self):
        modulus = q_int(7)
        assert q_power_sum_res(1, modulus, weighted=True).rep == P(0, 1)
        assert q_power_sum_res(1, modulus, weighted=False).rep == P(1)

    def test_offending_j_reported(self):
        # [9]_q = [3]_q (1 + q^3 + q^6), so [3]_q is a zero divisor
        with pytest.raises(NotInvertible) as info:
            q_harmonic_res(8, q_int(9))
        assert info.value.j == 3

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_g_sum_is_constant(self, p):
        expected = res_make(P(-(p * p - 1) // 12), q_int(p))
        assert q_g_sum_res(p - 1, q_int(p)) == expected

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_pair_sum_is_minus_g(self, p):
        modulus = q_int(p)
        assert q_reciprocal_pair_sum_res(p, modulus) == -q_g_sum_res(p - 1, modulus)


def test_q_to_the_p_is_one(primes_to_97):
    for p in primes_to_97:
        modulus = q_int(p)
        assert res_make(poly_monomial(1, p), modulus).rep == P(1)
        for k in range(1, p):
            shifted = res_make(poly_monomial(1, k) - poly_monomial(1, p), modulus)
            assert shifted == res_make(-one_minus_q_pow(k), modulus)


def test_q_integers_coprime_to_cyclotomic(primes_to_97):
    for p in primes_to_97:
        for j in range(1, p):
            g, _, _ = poly_ext_gcd(q_int(j), q_int(p))
            assert g == P(1), (p, j)


@pytest.mark.slow
def test_telescoping_split_in_ring(primes_to_97):
    for p in primes_to_97:
        for k in (1, 2):
            modulus = q_modulus(p, k)
            plain = q_power_sum_res(p - 1, modulus, weighted=False)
            split = res_add(
                res_mul(res_make(ONE_MINUS_Q, modulus), q_harmonic_res(p - 1, modulus)),
                q_power_sum_res(p - 1, modulus, weighted=True),
            )
            assert plain == split, (p, k)


def test_denominators_recorded():
    assert coefficient_denominators(P(1, 2)) == []
    assert coefficient_denominators(P(1, Fraction(1, 3))) == [3]
