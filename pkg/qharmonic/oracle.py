"""
Brute-force rational-function oracle, built on sympy and sharing no code
with the polyring/qring arithmetic it cross-checks.

Sums are formed as a single fraction N/D over the uncancelled common
denominator D = prod [j]_q^e; a congruence LHS = RHS (mod M) is then decided
by clearing denominators and reducing N - RHS*D modulo M.
"""
import logging
from fractions import Fraction

import sympy as sp

from qharmonic.polyring import Poly

logger = logging.getLogger(__name__)

q = sp.Symbol('q')

SUM_KINDS = ('harmonic', 'weighted', 'plain')


def to_sympy(a: Poly) -> sp.Poly:
    coeffs = [sp.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)]
    return sp.Poly(coeffs or [0], q, domain=sp.QQ)


def from_sympy(a: sp.Poly) -> Poly:
    if a.is_zero:
        return Poly()
    return Poly([Fraction(int(c.p), int(c.q)) for c in reversed(a.all_coeffs())])


def _q_int(j):
    return sp.Poly([1] * j, q, domain=sp.QQ)


def oracle_sum(kind: str, n: int):
    """(N, D) with N/D equal to the requested sum over j = 1..n"""
    if kind not in SUM_KINDS:
        raise ValueError(f"unknown sum kind {kind!r}, expected one of {SUM_KINDS}")
    num = sp.Poly(0, q, domain=sp.QQ)
    den = sp.Poly(1, q, domain=sp.QQ)
    for j in range(1, n + 1):
        base = _q_int(j)
        if kind == 'harmonic':
            top, bottom = sp.Poly(1, q, domain=sp.QQ), base
        elif kind == 'plain':
            top, bottom = sp.Poly(1, q, domain=sp.QQ), base ** 2
        else:
            top, bottom = sp.Poly(q ** j, q, domain=sp.QQ), base ** 2
        num = num * bottom + top * den
        den = den * bottom
    logger.debug("oracle %s sum n=%d: denominator degree %d", kind, n, den.degree())
    return num, den


def oracle_residue(kind: str, n: int, modulus: Poly) -> Poly:
    """Canonical residue of the sum modulo ``modulus``, via sympy's invert"""
    num, den = oracle_sum(kind, n)
    mod = to_sympy(modulus)
    inverse = den.invert(mod)
    return from_sympy((num * inverse).rem(mod))


def oracle_congruent(kind: str, n: int, rhs: Poly, modulus: Poly) -> bool:
    """
    True when sum = rhs (mod modulus): D must be coprime to the modulus and
    N - rhs*D must vanish modulo it.
    """
    num, den = oracle_sum(kind, n)
    mod = to_sympy(modulus)
    if sp.gcd(den, mod).degree() > 0:
        raise ValueError("oracle denominator shares a factor with the modulus")
    difference = num - to_sympy(rhs) * den
    return difference.rem(mod).is_zero
