"""Exact scalars: arbitrary-precision rationals and Gaussian rationals.

``Rational`` is the stdlib :class:`fractions.Fraction`, which already keeps
the canonical reduced form (positive denominator, coprime parts) that the rest
of the toolkit assumes.  ``GaussianRational`` models a + b*i with rational
a, b and exact field arithmetic; it comes from the selected coefficient
backend (compiled when available, pure Python otherwise).
"""

from fractions import Fraction

from kholo._coeff import BACKEND as COEFF_BACKEND
from kholo._coeff import GaussianRational

Rational = Fraction

GQ_ZERO = GaussianRational(0)
GQ_ONE = GaussianRational(1)
GQ_I = GaussianRational(0, 1)
GQ_MINUS_I = GaussianRational(0, -1)
GQ_HALF = GaussianRational(Fraction(1, 2))


def as_gaussian(value):
    """Coerce an int, Fraction or GaussianRational to a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


def gaussian(re, im=0):
    """Build a + b*i from anything Fraction() accepts (ints, strings, ...)."""
    return GaussianRational(Fraction(re), Fraction(im))


__all__ = [
    "COEFF_BACKEND",
    "GQ_HALF",
    "GQ_I",
    "GQ_MINUS_I",
    "GQ_ONE",
    "GQ_ZERO",
    "GaussianRational",
    "Rational",
    "as_gaussian",
    "gaussian",
]
