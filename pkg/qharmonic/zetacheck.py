"""
Floating-point checks of the root-of-unity argument for the weighted square sum.

Powers of zeta = exp(2 pi i/p) are always taken as cos/sin of the reduced
angle 2 pi (m mod p)/p, never by repeated multiplication.  Tolerances are
absolute and scale with p^2 where the compared quantity grows like p^2.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from qharmonic.congruence import is_prime, require_prime
from qharmonic.errors import DomainZ

logger = logging.getLogger(__name__)

ComplexVal = complex

# double precision keeps the tight tolerances honest up to here
ZETA_MAX_P = 53

CLOSED_FORM_TOLERANCE = 1e-9
CLOSED_FORM_SAMPLES = 20
CLOSED_FORM_RADIUS = 0.9

# G(zeta^m) limits: spread across m (times p^2) and imaginary part
SPREAD_LIMIT = 1e-9
IMAGINARY_LIMIT = 1e-6


@dataclass(frozen=True)
class NumericCheck:
    check_id: str
    p: int
    residual: float
    tolerance: float
    passed: bool
    detail: str = ""
    seed: Optional[int] = None
    samples: tuple = field(default_factory=tuple)
    elapsed: float = 0.0  # milliseconds


def _numeric(check_id, p, residual, tolerance, started, detail="", seed=None, samples=()):
    residual = float(residual)
    if not np.isfinite(residual):
        raise ArithmeticError(f"{check_id} at p={p} produced a non-finite residual")
    return NumericCheck(
        check_id=check_id,
        p=p,
        residual=residual,
        tolerance=tolerance,
        passed=residual <= tolerance,
        detail=detail,
        seed=seed,
        samples=tuple(samples),
        elapsed=(time.perf_counter() - started) * 1000.0,
    )


def _roots(p, exponents):
    angles = 2.0 * np.pi * (np.asarray(exponents) % p) / p
    return np.cos(angles) + 1j * np.sin(angles)


def zeta_pow(p: int, m: int) -> ComplexVal:
    """exp(2 pi i m/p)"""
    if p < 2:
        raise ValueError(f"root order must be >= 2, got {p}")
    return complex(_roots(p, m))


def g_at_root(p: int, m: int) -> ComplexVal:
    """G(zeta^m) = sum_{j=1..p-1} zeta^(mj)/(1-zeta^(mj))^2; real and equal to (1-p^2)/12"""
    if not is_prime(p):
        raise ValueError(f"G(zeta^m) has poles unless p is prime, got {p}")
    if not 1 <= m <= p - 1:
        raise ValueError(f"m must lie in 1..{p - 1}, got {m}")
    w = _roots(p, m * np.arange(1, p))
    return complex(np.sum(w / (1.0 - w) ** 2))


def root_sum(p: int, k: int) -> ComplexVal:
    """sum_{j=1..p-1} zeta^(kj): p-1 when p | k, otherwise -1"""
    if p < 2:
        raise ValueError(f"root order must be >= 2, got {p}")
    return complex(np.sum(_roots(p, (k % p) * np.arange(1, p))))


def g_closed_form(p: int, z: complex) -> complex:
    """p^2 z^(p-1)/(1-z^p)^2 - 1/(1-z)^2"""
    return p * p * z ** (p - 1) / (1 - z ** p) ** 2 - 1 / (1 - z) ** 2


def _g_series_side(p, z):
    w = _roots(p, np.arange(1, p))
    return complex(np.sum(w / (1.0 - w * z) ** 2))


def closed_form_check(p: int, z: complex) -> NumericCheck:
    """G(zeta, z) = sum zeta^j/(1-zeta^j z)^2 against its closed form, |z| < 1"""
    z = complex(z)
    if abs(z) >= 1:
        raise DomainZ(z)
    started = time.perf_counter()
    residual = abs(_g_series_side(p, z) - g_closed_form(p, z))
    return _numeric("closedform", p, residual, CLOSED_FORM_TOLERANCE, started,
                    detail=f"z = {z!r}", samples=(repr(z),))


def leja_order(points) -> np.ndarray:
    """
    Reorder points so each one maximizes the product of distances to those
    already taken.  Keeps the partial products of (q - point) well scaled.
    """
    points = np.asarray(points)
    if points.size == 0:
        return points
    order = [0]
    with np.errstate(divide='ignore'):
        score = np.log(np.abs(points - points[0]))
        for _ in range(points.size - 1):
            pick = int(np.argmax(score))
            order.append(pick)
            score = score + np.log(np.abs(points - points[pick]))
    return points[order]


def cyclotomic_product_check(p: int) -> NumericCheck:
    """Expand prod_{m=1..p-1}(q - zeta^m); every coefficient should be 1"""
    if p < 2:
        raise ValueError(f"root order must be >= 2, got {p}")
    started = time.perf_counter()
    coeffs = np.array([1.0 + 0j])
    for root in leja_order(_roots(p, np.arange(1, p))):
        # (q - root) in increasing powers
        coeffs = np.convolve(coeffs, np.array([-root, 1.0]))
    residual = np.max(np.abs(coeffs - 1.0))
    return _numeric("cycloprod", p, residual, 1e-9 * p, started,
                    detail=f"max |c_i - 1| over {len(coeffs)} coefficients")


def g_root_check(p: int) -> NumericCheck:
    """
    All of G(zeta^m), m = 1..p-1, against (1-p^2)/12.  The residual is the
    worst absolute deviation, with the largest imaginary part and the spread
    across m folded in after rescaling their own limits onto the tolerance.
    """
    require_prime(p, 5)
    started = time.perf_counter()
    values = np.array([g_at_root(p, m) for m in range(1, p)])
    expected = (1 - p * p) / 12.0
    deviation = np.max(np.abs(values - expected))
    imaginary = np.max(np.abs(values.imag))
    spread = np.max(np.abs(values - values[0]))
    tolerance = 1e-6 * max(1.0, p * p / 100.0)
    residual = max(deviation,
                   spread * tolerance / (SPREAD_LIMIT * p * p),
                   imaginary * tolerance / IMAGINARY_LIMIT)
    return _numeric("zeta", p, residual, tolerance, started,
                    detail=f"max |G - (1-p^2)/12| = {deviation:.3e}, max |Im G| = {imaginary:.3e}, "
                           f"spread over m = {spread:.3e}")


def root_sum_check(p: int) -> NumericCheck:
    """root_sum(p, k) against the two-case formula for k = 0..3p"""
    require_prime(p, 2)
    started = time.perf_counter()
    worst = 0.0
    for k in range(3 * p + 1):
        expected = p - 1 if k % p == 0 else -1
        worst = max(worst, abs(root_sum(p, k) - expected))
    return _numeric("zeta-rootsum", p, worst, 1e-9 * p, started,
                    detail=f"k = 0..{3 * p}")


def sample_points(p: int, seed: int, count: int = CLOSED_FORM_SAMPLES):
    """Seeded points in the disc |z| <= 0.9; depends only on (seed, p)"""
    rng = np.random.default_rng([seed, p])
    radius = CLOSED_FORM_RADIUS * np.sqrt(rng.random(count))
    theta = 2.0 * np.pi * rng.random(count)
    return [complex(r * np.cos(t), r * np.sin(t)) for r, t in zip(radius, theta)]


def closed_form_sweep(p: int, seed: int, count: int = CLOSED_FORM_SAMPLES) -> NumericCheck:
    require_prime(p, 5)
    started = time.perf_counter()
    points = sample_points(p, seed, count)
    worst = max(closed_form_check(p, z).residual for z in points)
    logger.debug("closed form p=%d: worst residual %.3e over %d points", p, worst, count)
    return _numeric("closedform", p, worst, CLOSED_FORM_TOLERANCE, started,
                    detail=f"{count} seeded samples, |z| <= {CLOSED_FORM_RADIUS}",
                    seed=seed, samples=[repr(z) for z in points])


def cycloprod_check(p: int) -> NumericCheck:
    require_prime(p, 2)
    return cyclotomic_product_check(p)


# check name -> callables taking (p, seed)
NUMERIC_CHECKS = {
    'zeta': (lambda p, seed: g_root_check(p), lambda p, seed: root_sum_check(p)),
    'closedform': (closed_form_sweep,),
    'cycloprod': (lambda p, seed: cycloprod_check(p),),
}
