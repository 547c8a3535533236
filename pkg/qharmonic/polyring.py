"""
Exact dense univariate polynomials over the rationals.

Coefficients are ``fractions.Fraction`` values (always in lowest terms with a
positive denominator); a polynomial is the tuple of its coefficients, index i
holding the coefficient of q^i, with trailing zeros stripped.  The zero
polynomial is the empty tuple and has degree ``DEGREE_OF_ZERO`` (minus
infinity), so ``degree(a * b) == degree(a) + degree(b)`` holds without
special cases.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from qharmonic.errors import BothZero, DivisionByZeroPoly

Rat = Fraction
RatLike = Union[int, Fraction]

DEGREE_OF_ZERO = -math.inf

_ZERO = Fraction(0)


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Poly:
    """Immutable polynomial; build with ``Poly([c0, c1, ...])``"""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _strip([Fraction(c) for c in self.coeffs]))

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already Fractions; only strip
        poly = object.__new__(cls)
        object.__setattr__(poly, 'coeffs', _strip(coeffs))
        return poly

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __add__(self, other):
        return poly_add(self, _promote(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _promote(other))

    def __rsub__(self, other):
        return poly_sub(_promote(other), self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        return poly_pow(self, k)

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __call__(self, x):
        return poly_eval(self, x)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def _promote(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly((value,))


def poly_zero() -> Poly:
    return Poly()


def poly_one() -> Poly:
    return Poly((1,))


def poly_monomial(c: RatLike, k: int) -> Poly:
    """c * q^k"""
    return Poly._raw([_ZERO] * k + [Fraction(c)])


def degree(a: Poly):
    return a.degree


def poly_add(a: Poly, b: Poly) -> Poly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return Poly._raw(out)


def poly_neg(a: Poly) -> Poly:
    return Poly._raw([-c for c in a.coeffs])


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Poly, c: RatLike) -> Poly:
    c = Fraction(c)
    if not c:
        return Poly()
    return Poly._raw([c * x for x in a.coeffs])


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Schoolbook product"""
    if not a or not b:
        return Poly()
    x, y = a.coeffs, b.coeffs
    out = [_ZERO] * (len(x) + len(y) - 1)
    # quotients in the Euclid loops are mostly zeros
    ys = [(j, c) for j, c in enumerate(y) if c]
    for i, ci in enumerate(x):
        if not ci:
            continue
        for j, cj in ys:
            out[i + j] += ci * cj
    return Poly._raw(out)


def poly_divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """
    Euclidean division: returns (quotient, remainder) with
    a = b * quotient + remainder and degree(remainder) < degree(b).
    """
    if not b:
        raise DivisionByZeroPoly()
    db = len(b.coeffs) - 1
    if len(a.coeffs) <= db:
        return Poly(), a
    divisor = b.coeffs
    lc = divisor[-1]
    inv_lc = None if lc == 1 else 1 / lc
    rem = list(a.coeffs)
    quot = [_ZERO] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        if inv_lc is not None:
            c *= inv_lc
        quot[i - db] = c
        base = i - db
        for k in range(db):
            if divisor[k]:
                rem[base + k] -= c * divisor[k]
        rem[i] = _ZERO
    return Poly._raw(quot), Poly._raw(rem[:db])


def poly_gcd_cofactor(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """
    Monic gcd g of a and b together with s such that s*a = g (mod b).

    Only the cofactor of ``a`` is carried through the remainder sequence.
    Remainders are made monic at each step to keep the rationals small.
    """
    if not a and not b:
        raise BothZero()
    r0, r1 = a, b
    s0, s1 = poly_one(), poly_zero()
    while r1:
        quot, rem = poly_divrem(r0, r1)
        s_next = poly_sub(s0, poly_mul(quot, s1))
        if rem:
            inv_lc = 1 / rem.lead
            rem = poly_scale(rem, inv_lc)
            s_next = poly_scale(s_next, inv_lc)
        r0, r1 = r1, rem
        s0, s1 = s1, s_next
    inv_lc = 1 / r0.lead
    return poly_scale(r0, inv_lc), poly_scale(s0, inv_lc)


def poly_ext_gcd(a: Poly, b: Poly) -> Tuple[Poly, Poly, Poly]:
    """
    Extended Euclid over Q.  Returns (g, s, t) with g = s*a + t*b and g monic;
    ``t`` is recovered from ``s`` by one exact division.
    """
    g, s = poly_gcd_cofactor(a, b)
    if b:
        t, leftover = poly_divrem(poly_sub(g, poly_mul(s, a)), b)
        assert not leftover, "Bezout cofactor must divide exactly"
    else:
        t = poly_zero()
    return g, s, t


def poly_eval(a: Poly, x: RatLike) -> Fraction:
    """Exact Horner evaluation"""
    x = Fraction(x)
    acc = _ZERO
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def poly_pow(a: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = poly_one()
    base = a
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_compose_power(a: Poly, n: int) -> Poly:
    """a(q^n)"""
    if n < 0:
        raise ValueError(f"substitution exponent must be nonnegative, got {n}")
    if n == 0:
        return Poly((poly_eval(a, 1),))
    if not a:
        return a
    out = [_ZERO] * ((len(a.coeffs) - 1) * n + 1)
    for i, c in enumerate(a.coeffs):
        out[i * n] = c
    return Poly._raw(out)


# Text forms

def format_poly(a: Poly, var: str = "q") -> str:
    """Human-readable form, increasing powers: ``3 - 3q - q^5 + q^6``"""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def coeff_strings(a: Poly) -> list:
    """Exact coefficients as ``"num/den"`` strings"""
    return [f"{c.numerator}/{c.denominator}" for c in a.coeffs]


def poly_from_strings(items: Iterable[str]) -> Poly:
    return Poly([Fraction(s) for s in items])


def first_difference(a: Poly, b: Poly):
    """Index and values of the first differing coefficient, or None"""
    for i in range(max(len(a), len(b))):
        if a[i] != b[i]:
            return i, a[i], b[i]
    return None
