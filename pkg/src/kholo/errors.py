"""Exception types shared across the toolkit.

Every error raised by kholo derives from :class:`KholoError`, so callers can
catch toolkit failures without swallowing genuine bugs.
"""


class KholoError(Exception):
    """Base class for all toolkit errors."""


# -- scalars ----------------------------------------------------------------

class DivisionByZero(KholoError, ZeroDivisionError):
    """Division by the zero element of Q(i)."""


# -- polynomials ------------------------------------------------------------

class SpaceMismatch(KholoError):
    """Two polynomials from different variable spaces were combined."""


class UnknownVariable(KholoError):
    """A variable name is not part of the relevant variable space."""


class IncompleteSubstitution(KholoError):
    """A substitution lacks an image for a variable that occurs."""


class IncompleteAssignment(KholoError):
    """An evaluation point lacks a value for a variable that occurs."""


class NonZSpace(KholoError):
    """Operation requires a polynomial in complex z-variables only."""


class NonRealCoefficients(KholoError):
    """Operation requires a polynomial with real coefficients."""


class IndexOutOfRange(KholoError):
    """A complex-coordinate index is outside 1..n."""


class DegreeOverflow(KholoError):
    """A computed degree exceeds the supported bound."""


class InexactDivision(KholoError):
    """Polynomial division expected to be exact left a remainder."""


# -- elimination ------------------------------------------------------------

class ZeroInput(KholoError):
    """Resultant of the zero polynomial is undefined."""


class DegreeZeroBoth(KholoError):
    """Both resultant arguments are constant in the elimination variable."""


class BasepointNotFound(KholoError):
    """No admissible translation point inside the search grid."""


# -- branches ---------------------------------------------------------------

class ZeroDegree(KholoError):
    """Discriminant requires positive degree in the fiber variable."""


class LeadingCoefficientVanishes(KholoError):
    """Specialization point kills the leading fiber coefficient."""


class NonConvergence(KholoError):
    """Numeric root iteration hit its iteration cap."""


class PointOnLocus(KholoError):
    """A sample point lies on the discriminant locus."""


# -- simplicial router ------------------------------------------------------

class InvalidComplex(KholoError):
    """Input data does not describe a valid simplicial complex."""


class InvalidSubcomplex(InvalidComplex):
    """Marked faces violate the subcomplex requirements."""


class InvalidEndpoints(KholoError):
    """Routing endpoints are not vertices of the complex interior to tops."""


class Disconnected(KholoError):
    """No facet path connects the endpoint simplices."""


class InvalidPath(KholoError):
    """A piecewise-linear path leaves the complex it claims to live in."""


# -- parsing ----------------------------------------------------------------

class ExprSyntaxError(KholoError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class NegativeExponent(ExprSyntaxError):
    """Exponents must be non-negative integer literals."""
