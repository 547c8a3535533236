"""
Verification suite for the q-harmonic congruences.

Each verifier returns a ``CheckResult`` whose ``passed`` flag is exactly
``lhs_rep == rhs_rep``: residue checks compare canonical residues, integer
checks compare the reduced numerator modulo p^k against 0.  Passing
``mutate=True`` adds 1 to the constant on the right-hand side, which must
make the check fail; it is how the suite proves it cannot pass vacuously.
"""
import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Sequence

from qharmonic.errors import (
    NotDeflatable,
    NotOdd,
    NotPrime,
    PoleAtSample,
    PrimeTooSmall,
)
from qharmonic.polyring import (
    Poly,
    first_difference,
    format_poly,
    poly_divrem,
    poly_eval,
    poly_monomial,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_sub,
)
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
    res_make,
    res_mul,
)

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = (Fraction(1, 2), Fraction(-1, 3), Fraction(2))

ONE_MINUS_Q = Poly((1, -1))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact verification"""

    check_id: str
    p: int
    passed: bool
    lhs_rep: Poly
    rhs_rep: Poly
    detail: str = ""
    elapsed: float = 0.0  # milliseconds
    denominators: tuple = field(default_factory=tuple)


def _finish(check_id, p, lhs, rhs, started, witness="", denominators=()):
    elapsed = (time.perf_counter() - started) * 1000.0
    diff = first_difference(lhs, rhs)
    if diff is None:
        detail = witness
    else:
        index, left, right = diff
        detail = f"first difference at coefficient {index}: lhs={left}, rhs={right}"
        logger.warning("%s failed at p=%d: %s", check_id, p, detail)
    logger.debug("%s p=%d done in %.1f ms", check_id, p, elapsed)
    return CheckResult(
        check_id=check_id,
        p=p,
        passed=diff is None,
        lhs_rep=lhs,
        rhs_rep=rhs,
        detail=detail,
        elapsed=elapsed,
        denominators=tuple(denominators),
    )


def is_prime(n: int) -> bool:
    """Deterministic trial division"""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_prime(p: int, minimum: int = 2):
    if not is_prime(p):
        raise NotPrime(p)
    if p < minimum:
        raise PrimeTooSmall(p, minimum)


def harmonic_number(n: int, power: int = 1) -> Fraction:
    """sum_{j=1..n} 1/j^power, exactly"""
    return sum((Fraction(1, j ** power) for j in range(1, n + 1)), Fraction(0))


def _divisibility_result(check_id, p, value, exponent, mutate, started, label):
    modulus = p ** exponent
    if value.denominator % p == 0:
        # cannot happen for j < p; surfaced rather than assumed
        lhs = Poly((value.denominator,))
        return _finish(check_id, p, lhs, Poly(), started,
                       witness=f"denominator {value.denominator} divisible by {p}")
    numerator = value.numerator + (1 if mutate else 0)
    lhs = Poly((numerator % modulus,))
    witness = f"{label} = {value}, numerator divisible by {p}^{exponent}"
    return _finish(check_id, p, lhs, Poly(), started, witness=witness)


def verify_wolstenholme(p: int, mutate: bool = False) -> CheckResult:
    """H_{p-1} = 0 (mod p^2) for primes p >= 5"""
    require_prime(p, 5)
    started = time.perf_counter()
    value = harmonic_number(p - 1)
    return _divisibility_result("wolstenholme", p, value, 2, mutate, started, f"H_{p - 1}")


def verify_classical_squares(p: int, mutate: bool = False) -> CheckResult:
    """sum 1/j^2 = 0 (mod p) for primes p >= 5"""
    require_prime(p, 5)
    started = time.perf_counter()
    value = harmonic_number(p - 1, power=2)
    return _divisibility_result("squares", p, value, 1, mutate, started, f"H_{p - 1}^(2)")


def andrews_rhs(p: int, mutate: bool = False) -> Poly:
    c = Fraction(p - 1, 2) + (1 if mutate else 0)
    return poly_scale(ONE_MINUS_Q, c)


def theorem1_rhs(p: int, mutate: bool = False) -> Poly:
    c1 = Fraction(p - 1, 2)
    c2 = Fraction(p * p - 1, 24) + (1 if mutate else 0)
    tail = poly_mul(poly_pow(ONE_MINUS_Q, 2), q_int(p))
    return poly_scale(ONE_MINUS_Q, c1) + poly_scale(tail, c2)


def lemma2_weighted_rhs(p: int, mutate: bool = False) -> Poly:
    c = Fraction(p * p - 1, 12) + (1 if mutate else 0)
    return poly_scale(poly_pow(ONE_MINUS_Q, 2), -c)


def lemma2_plain_rhs(p: int, mutate: bool = False) -> Poly:
    c = Fraction((p - 1) * (p - 5), 12) + (1 if mutate else 0)
    return poly_scale(poly_pow(ONE_MINUS_Q, 2), -c)


def _residue_result(check_id, p, lhs_res, rhs_poly, started, label):
    rhs = res_make(rhs_poly, lhs_res.modulus).rep
    lhs = lhs_res.rep
    denominators = coefficient_denominators(lhs)
    if denominators:
        logger.warning("%s p=%d: residue has non-integral coefficients %s", check_id, p, denominators)
    witness = f"{label} = {format_poly(lhs)}"
    return _finish(check_id, p, lhs, rhs, started, witness=witness, denominators=denominators)


def verify_andrews(p: int, mutate: bool = False) -> CheckResult:
    """H_{p-1}(q) = (p-1)/2 (1-q)  (mod [p]_q) for odd primes"""
    if not is_prime(p):
        raise NotPrime(p)
    if p == 2:
        raise NotOdd(p)
    started = time.perf_counter()
    lhs = q_harmonic_res(p - 1, q_modulus(p, 1))
    return _residue_result("andrews", p, lhs, andrews_rhs(p, mutate), started,
                           f"H_{p - 1}(q) mod [{p}]_q")


def verify_theorem1(p: int, mutate: bool = False) -> CheckResult:
    """H_{p-1}(q) mod [p]_q^2 for primes p >= 5"""
    require_prime(p, 5)
    started = time.perf_counter()
    lhs = q_harmonic_res(p - 1, q_modulus(p, 2))
    return _residue_result("theorem1", p, lhs, theorem1_rhs(p, mutate), started,
                           f"H_{p - 1}(q) mod [{p}]_q^2")


def verify_lemma2_weighted(p: int, mutate: bool = False) -> CheckResult:
    """sum q^j/[j]_q^2 = -(p^2-1)/12 (1-q)^2  (mod [p]_q)"""
    require_prime(p, 5)
    started = time.perf_counter()
    lhs = q_power_sum_res(p - 1, q_modulus(p, 1), weighted=True)
    return _residue_result("lemma2w", p, lhs, lemma2_weighted_rhs(p, mutate), started,
                           f"sum q^j/[j]_q^2 mod [{p}]_q")


def verify_lemma2_plain(p: int, mutate: bool = False) -> CheckResult:
    """sum 1/[j]_q^2 = -(p-1)(p-5)/12 (1-q)^2  (mod [p]_q)"""
    require_prime(p, 5)
    started = time.perf_counter()
    lhs = q_power_sum_res(p - 1, q_modulus(p, 1), weighted=False)
    return _residue_result("lemma2p", p, lhs, lemma2_plain_rhs(p, mutate), started,
                           f"sum 1/[j]_q^2 mod [{p}]_q")


def _deflate(poly, which):
    quotient, remainder = poly_divrem(poly, poly_pow(ONE_MINUS_Q, 4))
    if remainder:
        raise NotDeflatable(which, remainder)
    return quotient


def lhospital_limit(p: int) -> Fraction:
    """
    lim_{z->1} (p^2 z^(p-1) (1-z)^2 - (1-z^p)^2) / ((1-z^p)^2 (1-z)^2),
    taken by cancelling (1-z)^4 from both sides and evaluating at 1.
    """
    one_minus_zp = one_minus_q_pow(p)
    square = poly_pow(ONE_MINUS_Q, 2)
    numerator = poly_sub(
        poly_mul(poly_monomial(p * p, p - 1), square),
        poly_pow(one_minus_zp, 2),
    )
    denominator = poly_mul(poly_pow(one_minus_zp, 2), square)
    top = _deflate(numerator, "numerator")
    bottom = _deflate(denominator, "denominator")
    return poly_eval(top, 1) / poly_eval(bottom, 1)


def verify_lhospital_limit(p: int, mutate: bool = False) -> CheckResult:
    """The limit equals (1-p^2)/12; any integer p >= 2 is accepted"""
    if p < 2:
        raise PrimeTooSmall(p, 2)
    started = time.perf_counter()
    value = lhospital_limit(p)
    expected = Fraction(1 - p * p, 12) + (1 if mutate else 0)
    return _finish("limit", p, Poly((value,)), Poly((expected,)), started,
                   witness=f"limit = {value}")


def check_telescoping(p: int) -> CheckResult:
    """
    sum 1/[j]^2 = (1-q) H_{p-1}(q) + sum q^j/[j]^2, exactly modulo [p]_q and
    [p]_q^2.  The reported residues are the ones modulo [p]_q^2.
    """
    require_prime(p, 3)
    started = time.perf_counter()
    pairs = {}
    for k in (1, 2):
        modulus = q_modulus(p, k)
        plain = q_power_sum_res(p - 1, modulus, weighted=False)
        weighted = q_power_sum_res(p - 1, modulus, weighted=True)
        harmonic = q_harmonic_res(p - 1, modulus)
        split = res_add(res_mul(res_make(ONE_MINUS_Q, modulus), harmonic), weighted)
        pairs[k] = (plain.rep, split.rep)
    failing = [k for k in (1, 2) if pairs[k][0] != pairs[k][1]]
    lhs, rhs = pairs[failing[0] if failing else 2]
    return _finish("telescope", p, lhs, rhs, started,
                   witness=f"split holds mod [{p}]_q and [{p}]_q^2")


def _check_samples(p, samples):
    for x in samples:
        for k in range(1, p + 1):
            if x ** k == 1:
                raise PoleAtSample(x, k)


def _q_int_at(j, x):
    return (1 - x ** j) / (1 - x)


def check_symmetrization(p: int, samples: Optional[Sequence[Fraction]] = None) -> CheckResult:
    """
    The two symmetrization identities behind the [p]_q^2 congruence, evaluated exactly
    at rational points:

        sum (1/(1-x^k) + 1/(1-x^(p-k)) - 1) = sum (1-x^p)/((1-x^k)(1-x^(p-k)))
        H_{p-1}(x) - (p-1)/2 (1-x) = (1-x)/2 * sum (1/(1-x^k) + 1/(1-x^(p-k)) - 1)

    lhs_rep/rhs_rep hold one coefficient per (sample, identity) pair.
    """
    require_prime(p, 3)
    samples = [Fraction(x) for x in (samples or DEFAULT_SAMPLES)]
    _check_samples(p, samples)
    started = time.perf_counter()
    left, right = [], []
    for x in samples:
        paired = sum((1 / (1 - x ** k) + 1 / (1 - x ** (p - k)) - 1 for k in range(1, p)), Fraction(0))
        product = sum(((1 - x ** p) / ((1 - x ** k) * (1 - x ** (p - k))) for k in range(1, p)), Fraction(0))
        harmonic = sum((1 / _q_int_at(j, x) for j in range(1, p)), Fraction(0))
        left += [paired, harmonic - Fraction(p - 1, 2) * (1 - x)]
        right += [product, (1 - x) / 2 * paired]
    return _finish("symmetrize", p, _sample_vector(left), _sample_vector(right), started,
                   witness=f"exact at samples {', '.join(str(x) for x in samples)}")


def _sample_vector(values):
    # equal-length vectors compare equal after stripping iff they are equal
    return Poly(values)


def check_g_factorization(p: int, samples: Optional[Sequence[Fraction]] = None) -> CheckResult:
    """sum x^j/[j]_x^2 = (1-x)^2 G(x) with G(x) = sum x^j/(1-x^j)^2, at rational samples"""
    require_prime(p, 3)
    samples = [Fraction(x) for x in (samples or DEFAULT_SAMPLES)]
    _check_samples(p, samples)
    started = time.perf_counter()
    left, right = [], []
    for x in samples:
        left.append(sum((x ** j / _q_int_at(j, x) ** 2 for j in range(1, p)), Fraction(0)))
        g = sum((x ** j / (1 - x ** j) ** 2 for j in range(1, p)), Fraction(0))
        right.append((1 - x) ** 2 * g)
    return _finish("gfactor", p, _sample_vector(left), _sample_vector(right), started,
                   witness=f"exact at samples {', '.join(str(x) for x in samples)}")


def check_theorem1_reduction(p: int, mutate: bool = False) -> CheckResult:
    """
    The step from the weighted square sum to H_{p-1}(q) mod [p]_q^2: modulo [p]_q the pair sum
    sum 1/((1-q^k)(1-q^(p-k))) equals -G(q) and hence (p^2-1)/12, so
    (1-q)(1-q^p)/2 times it is (p^2-1)/24 (1-q)^2 [p]_q modulo [p]_q^2.
    """
    require_prime(p, 5)
    started = time.perf_counter()
    single = q_modulus(p, 1)
    pair = q_reciprocal_pair_sum_res(p, single)
    g = q_g_sum_res(p - 1, single)
    constant = res_make(Poly((Fraction(p * p - 1, 12),)), single)
    if pair != -g:
        return _finish("reduction", p, pair.rep, (-g).rep, started)
    if -g != constant:
        return _finish("reduction", p, (-g).rep, constant.rep, started)

    square = q_modulus(p, 2)
    pair_sq = q_reciprocal_pair_sum_res(p, square)
    factor = poly_scale(poly_mul(ONE_MINUS_Q, one_minus_q_pow(p)), Fraction(1, 2))
    lhs = res_mul(res_make(factor, square), pair_sq)
    c = Fraction(p * p - 1, 24) + (1 if mutate else 0)
    rhs_poly = poly_scale(poly_mul(poly_pow(ONE_MINUS_Q, 2), q_int(p)), c)
    return _residue_result("reduction", p, lhs, rhs_poly, started,
                           f"(1-q)(1-q^{p})/2 * pair sum mod [{p}]_q^2")


def check_specialization(p: int, mutate: bool = False) -> CheckResult:
    """
    Setting q = 1 in the residue r of H_{p-1}(q) mod [p]_q^2 recovers H_{p-1}
    up to p^2: the p-adic valuation of H_{p-1} - r(1) is at least 2.
    """
    require_prime(p, 5)
    started = time.perf_counter()
    residue = q_harmonic_res(p - 1, q_modulus(p, 2))
    diff = harmonic_number(p - 1) - poly_eval(residue.rep, 1)
    return _divisibility_result("specialize", p, diff, 2, mutate, started,
                                f"H_{p - 1} - r(1)")


def _telescope(p, mutate=False):
    return check_telescoping(p)


def _symmetrize(p, mutate=False):
    return check_symmetrization(p)


def _gfactor(p, mutate=False):
    return check_g_factorization(p)


EXACT_CHECKS: Dict[str, Callable[..., CheckResult]] = {
    'wolstenholme': verify_wolstenholme,
    'squares': verify_classical_squares,
    'andrews': verify_andrews,
    'theorem1': verify_theorem1,
    'lemma2w': verify_lemma2_weighted,
    'lemma2p': verify_lemma2_plain,
    'limit': verify_lhospital_limit,
    'telescope': _telescope,
    'symmetrize': _symmetrize,
    'gfactor': _gfactor,
    'reduction': check_theorem1_reduction,
    'specialize': check_specialization,
}


def sweep_primes(low: int, high: int) -> Iterable[int]:
    return (n for n in range(max(low, 2), high + 1) if is_prime(n))
