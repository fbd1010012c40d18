"""Exception hierarchy shared by every module."""


class HypertouchError(Exception):
    pass


class InvalidInput(HypertouchError, ValueError):
    """Bad user-supplied data (maps to CLI exit code 2)."""


class NotPrime(InvalidInput):
    pass


class EvenCharacteristic(InvalidInput):
    pass


class DegreeOutOfRange(InvalidInput):
    pass


class ReducibleModulus(InvalidInput):
    pass


class BadDegree(InvalidInput):
    pass


class NotSquarefree(InvalidInput):
    pass


class ZeroPolynomial(InvalidInput):
    pass


class BadReduction(InvalidInput):
    pass


class FieldMismatch(HypertouchError, TypeError):
    pass


class DivisionByZero(HypertouchError, ZeroDivisionError):
    pass


class BudgetExceeded(HypertouchError):
    """Requested enumeration exceeds the evaluation budget (exit code 3)."""


class CountingError(HypertouchError, ArithmeticError):
    pass


class NonIntegralCoefficient(CountingError):
    pass


class WeilViolation(CountingError):
    pass


class PreconditionViolated(HypertouchError):
    pass


class InternalInvariantError(HypertouchError, AssertionError):
    """A self-check failed; this is a bug, not a result (exit code 4)."""
