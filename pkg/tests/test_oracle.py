import pytest

from qharmonic.congruence import (
    andrews_rhs,
    lemma2_plain_rhs,
    lemma2_weighted_rhs,
    sweep_primes,
    theorem1_rhs,
    verify_andrews,
    verify_lemma2_plain,
    verify_lemma2_weighted,
    verify_theorem1,
)
from qharmonic.oracle import from_sympy, oracle_congruent, oracle_residue, oracle_sum, to_sympy
from qharmonic.polyring import Poly
from qharmonic.qring import q_harmonic_res, q_int, q_modulus, q_power_sum_res

# (verifier, oracle sum kind, rhs builder, power of [p]_q)
CASES = {
    'andrews': (verify_andrews, 'harmonic', andrews_rhs, 1),
    'theorem1': (verify_theorem1, 'harmonic', theorem1_rhs, 2),
    'lemma2w': (verify_lemma2_weighted, 'weighted', lemma2_weighted_rhs, 1),
    'lemma2p': (verify_lemma2_plain, 'plain', lemma2_plain_rhs, 1),
}


def test_sympy_conversion():
    a = Poly((1, -3, 0, 2))
    assert from_sympy(to_sympy(a)) == a
    assert from_sympy(to_sympy(Poly())) == Poly()


def test_uncancelled_sum():
    num, den = oracle_sum('harmonic', 2)
    # 1/1 + 1/(1+q) = (2+q)/(1+q)
    assert from_sympy(num) == Poly((2, 1))
    assert from_sympy(den) == Poly((1, 1))


def test_unknown_kind():
    with pytest.raises(ValueError):
        oracle_sum('cubes', 4)


@pytest.mark.parametrize("check_id", sorted(CASES))
def test_verifier_agrees_with_oracle(check_id):
    verify, kind, rhs, power = CASES[check_id]
    for p in sweep_primes(5, 23):
        result = verify(p)
        assert result.passed == oracle_congruent(kind, p - 1, rhs(p), q_modulus(p, power)), p


@pytest.mark.parametrize("check_id", sorted(CASES))
def test_oracle_rejects_mutated_rhs(check_id):
    verify, kind, rhs, power = CASES[check_id]
    assert not verify(7, mutate=True).passed
    assert not oracle_congruent(kind, 6, rhs(7, mutate=True), q_modulus(7, power))


@pytest.mark.slow
def test_residues_agree():
    for p in sweep_primes(5, 23):
        single, square = q_modulus(p, 1), q_modulus(p, 2)
        assert q_harmonic_res(p - 1, square).rep == oracle_residue('harmonic', p - 1, square)
        assert q_power_sum_res(p - 1, single, weighted=True).rep == oracle_residue('weighted', p - 1, single)
        assert q_power_sum_res(p - 1, single, weighted=False).rep == oracle_residue('plain', p - 1, single)


def test_small_prime_agreement():
    # p = 3 sits below the stated range; the engine and the oracle must still agree
    modulus = q_int(3)
    assert q_power_sum_res(2, modulus, weighted=True).rep == oracle_residue('weighted', 2, modulus)
    assert q_power_sum_res(2, modulus, weighted=False).rep == oracle_residue('plain', 2, modulus)
    assert oracle_congruent('harmonic', 2, andrews_rhs(3), modulus)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        oracle_congruent('harmonic', 8, Poly(), q_int(9))
