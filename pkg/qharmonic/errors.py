"""
Error types raised by the verification engine.

Every error is a ``ValueError`` underneath so callers that only care about
"bad input" can keep catching that.
"""


class QHarmonicError(ValueError):
    """Base class for all engine errors"""


# polyring

class DivisionByZeroPoly(QHarmonicError, ZeroDivisionError):
    def __init__(self):
        super().__init__("division by the zero polynomial")


class BothZero(QHarmonicError):
    def __init__(self):
        super().__init__("gcd of two zero polynomials is undefined")


# qring

class BadModulus(QHarmonicError):
    def __init__(self, modulus):
        self.modulus = modulus
        super().__init__(f"modulus must have degree >= 1, got {modulus}")


class ModulusMismatch(QHarmonicError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"residues live in different rings: mod {left} vs mod {right}")


class NotInvertible(QHarmonicError):
    def __init__(self, element, gcd, j=None):
        self.element = element
        self.gcd = gcd
        self.j = j
        where = f" ([{j}]_q)" if j is not None else ""
        super().__init__(f"{element}{where} shares the factor {gcd} with the modulus")


class ZeroElement(QHarmonicError):
    def __init__(self):
        super().__init__("zero has no inverse")


# congruence

class NotPrime(QHarmonicError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"{n} is not prime")


class PrimeTooSmall(QHarmonicError):
    def __init__(self, p, minimum):
        self.p = p
        self.minimum = minimum
        super().__init__(f"p = {p} is below the smallest admissible prime {minimum}")


class NotOdd(QHarmonicError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"p = {p} must be an odd prime")


class NotDeflatable(QHarmonicError):
    def __init__(self, which, remainder):
        self.which = which
        self.remainder = remainder
        super().__init__(f"{which} is not divisible by (1-z)^4, remainder {remainder}")


class PoleAtSample(QHarmonicError):
    def __init__(self, sample, k):
        self.sample = sample
        self.k = k
        super().__init__(f"sample {sample} hits a pole: x^{k} = 1 or x = 0")


# zetacheck

class DomainZ(QHarmonicError):
    def __init__(self, z):
        self.z = z
        super().__init__(f"closed form needs |z| < 1, got |z| = {abs(z)}")


# cli / report

class ConfigError(QHarmonicError):
    pass


class ReportIoError(QHarmonicError):
    def __init__(self, path, reason):
        self.path = path
        super().__init__(f"cannot write report to {path}: {reason}")
