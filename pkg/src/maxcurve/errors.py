"""Exception hierarchy shared by every maxcurve module."""


class MaxCurveError(Exception):
    """Base class for all errors raised by maxcurve."""


class NotPrime(MaxCurveError, ValueError):
    pass


class BudgetExceeded(MaxCurveError):
    pass


class MixedFields(MaxCurveError, TypeError):
    pass


class DivisionByZero(MaxCurveError, ZeroDivisionError):
    pass


class BadParameters(MaxCurveError, ValueError):
    pass


class CharacteristicDividesQ(BadParameters):
    """p divides n^2 - n*l + l^2, which the curve families exclude."""


class CharacteristicDividesM(BadParameters):
    pass


class NotCoprime(BadParameters):
    pass


class GcdNotOne(BadParameters):
    pass


class EvenOrNonPrimeModulus(BadParameters):
    pass


class NotApplicable(MaxCurveError, ValueError):
    """A bound or formula was requested outside the range where it is defined."""


class NegativeDiscriminant(NotApplicable):
    pass


class NoGenusFormula(MaxCurveError):
    pass


class UndefinedAtPoint(MaxCurveError, ValueError):
    pass


class DivisibilityFails(BadParameters):
    pass


class IncompatibleParameters(BadParameters):
    pass
