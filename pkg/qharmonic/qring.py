"""
q-integers and arithmetic in the quotient rings Q[q]/(M).

A congruence between rational functions a/b = c/d (mod M) is read here as
equality of canonical residues after inverting b and d in Q[q]/(M), so every
denominator must be coprime to M.  Harmonic-type sums are accumulated one
inverted term at a time; the common denominator is never formed.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qharmonic.errors import BadModulus, ModulusMismatch, NotInvertible, ZeroElement
from qharmonic.polyring import (
    Poly,
    RatLike,
    poly_add,
    poly_divrem,
    poly_gcd_cofactor,
    poly_monomial,
    poly_mul,
    poly_neg,
    poly_one,
    poly_pow,
    poly_scale,
    poly_sub,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Residue:
    """Canonical class of ``rep`` modulo ``modulus`` (degree(rep) < degree(modulus))"""

    rep: Poly
    modulus: Poly

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ModulusMismatch(self.modulus, other.modulus)

    def __add__(self, other):
        return res_add(self, other)

    def __sub__(self, other):
        return res_sub(self, other)

    def __neg__(self):
        return res_neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return res_scale(self, other)
        return res_mul(self, other)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.rep)

    def __str__(self):
        return f"{self.rep} (mod {self.modulus})"


def q_int(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0"""
    if n < 0:
        raise ValueError(f"q-integer index must be nonnegative, got {n}")
    return Poly([1] * n)


def one_minus_q_pow(k: int) -> Poly:
    """1 - q^k"""
    return poly_sub(poly_one(), poly_monomial(1, k))


def q_modulus(p: int, k: int) -> Poly:
    """([p]_q)^k, of degree k(p-1)"""
    if p < 2 or k < 1:
        raise ValueError(f"q_modulus needs p >= 2 and k >= 1, got p={p}, k={k}")
    return _cached_modulus(p, k)


@lru_cache(maxsize=256)
def _cached_modulus(p, k):
    return poly_pow(q_int(p), k)


def _require_modulus(modulus: Poly):
    if not modulus or modulus.degree < 1:
        raise BadModulus(modulus)


def res_make(a: Poly, modulus: Poly) -> Residue:
    _require_modulus(modulus)
    _, rem = poly_divrem(a, modulus)
    return Residue(rem, modulus)


def res_const(c: RatLike, modulus: Poly) -> Residue:
    return res_make(Poly((c,)), modulus)


def res_add(a: Residue, b: Residue) -> Residue:
    a._check(b)
    return Residue(poly_add(a.rep, b.rep), a.modulus)


def res_sub(a: Residue, b: Residue) -> Residue:
    a._check(b)
    return Residue(poly_sub(a.rep, b.rep), a.modulus)


def res_neg(a: Residue) -> Residue:
    return Residue(poly_neg(a.rep), a.modulus)


def res_scale(a: Residue, c: RatLike) -> Residue:
    return Residue(poly_scale(a.rep, c), a.modulus)


def res_mul(a: Residue, b: Residue) -> Residue:
    a._check(b)
    return res_make(poly_mul(a.rep, b.rep), a.modulus)


def res_pow(a: Residue, k: int) -> Residue:
    if k < 0:
        return res_pow(res_inv(a), -k)
    result = res_const(1, a.modulus)
    base = a
    while k:
        if k & 1:
            result = res_mul(result, base)
        k >>= 1
        if k:
            base = res_mul(base, base)
    return result


def res_inv(r: Residue, j=None) -> Residue:
    """
    Inverse via extended Euclid.  ``j`` only labels the error when the
    element is a q-integer [j]_q.
    """
    if not r.rep:
        raise ZeroElement()
    g, s = poly_gcd_cofactor(r.rep, r.modulus)
    if g.degree >= 1:
        raise NotInvertible(r.rep, g, j=j)
    return res_make(s, r.modulus)


@lru_cache(maxsize=4096)
def q_int_inv(j: int, modulus: Poly) -> Residue:
    """1/[j]_q in Q[q]/(modulus); memoized, the sums reuse the same inverses"""
    return res_inv(res_make(q_int(j), modulus), j=j)


def q_harmonic_res(n: int, modulus: Poly) -> Residue:
    """H_n(q) = sum_{j=1..n} 1/[j]_q in Q[q]/(modulus)"""
    if n < 1:
        raise ValueError(f"harmonic index must be >= 1, got {n}")
    total = res_const(0, modulus)
    for j in range(1, n + 1):
        total = res_add(total, q_int_inv(j, modulus))
    logger.debug("H_%d(q) reduced mod degree-%d modulus", n, modulus.degree)
    return total


def q_power_sum_res(n: int, modulus: Poly, weighted: bool) -> Residue:
    """
    sum_{j=1..n} q^j/[j]_q^2 when ``weighted``, otherwise sum_{j=1..n} 1/[j]_q^2
    """
    if n < 1:
        raise ValueError(f"sum length must be >= 1, got {n}")
    total = res_const(0, modulus)
    for j in range(1, n + 1):
        inv = q_int_inv(j, modulus)
        term = res_mul(inv, inv)
        if weighted:
            term = res_mul(term, res_make(poly_monomial(1, j), modulus))
        total = res_add(total, term)
    return total


def q_g_sum_res(n: int, modulus: Poly) -> Residue:
    """G(q) = sum_{j=1..n} q^j/(1-q^j)^2 in Q[q]/(modulus)"""
    total = res_const(0, modulus)
    for j in range(1, n + 1):
        inv = res_inv(res_make(one_minus_q_pow(j), modulus))
        term = res_mul(res_mul(inv, inv), res_make(poly_monomial(1, j), modulus))
        total = res_add(total, term)
    return total


def q_reciprocal_pair_sum_res(p: int, modulus: Poly) -> Residue:
    """sum_{k=1..p-1} 1/((1-q^k)(1-q^(p-k))) in Q[q]/(modulus)"""
    total = res_const(0, modulus)
    for k in range(1, p):
        denom = res_make(poly_mul(one_minus_q_pow(k), one_minus_q_pow(p - k)), modulus)
        total = res_add(total, res_inv(denom))
    return total


def coefficient_denominators(a: Poly) -> list:
    """Sorted distinct coefficient denominators other than 1"""
    return sorted({c.denominator for c in a.coeffs if c.denominator != 1})
