"""Exception types raised across the package."""


class SchubertError(Exception):
    """Base class for all package errors."""


class NotDivisible(SchubertError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class NegativeExponentSubstitution(SchubertError, ValueError):
    """A negative power of a variable was substituted by a non-invertible value."""


class MissingAssignment(SchubertError, KeyError):
    """evaluate() was called without a value for some variable of the polynomial."""


class ZeroAtLaurentPole(SchubertError, ZeroDivisionError):
    """A Laurent variable was assigned zero."""


class IndexOutOfRange(SchubertError, ValueError):
    """A product reached an equivariant parameter outside 1..N+k."""


class PartTooLarge(SchubertError, ValueError):
    """A partition does not fit in the k x (n-k) box."""


class DegenerateSpecialization(SchubertError, RuntimeError):
    """Random specializations kept hitting a vanishing denominator."""
