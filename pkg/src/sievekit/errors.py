"""Exception hierarchy shared by all engine modules."""


class SieveKitError(Exception):
    """Base class for engine errors."""


class NonPolynomial(SieveKitError):
    """An expression in q does not reduce to a polynomial."""


class PoleError(SieveKitError):
    """Evaluation at a root of unity diverges."""


class NotRational(SieveKitError):
    """A cyclotomic integer is not a rational integer."""


class NonIntegerEvaluation(SieveKitError):
    """A root-of-unity evaluation is not a rational integer."""


class Indeterminate(SieveKitError):
    """A sign test fell inside the floating-point safety margin."""


class InvalidDissection(SieveKitError, ValueError):
    pass


class NotSymmetric(SieveKitError):
    pass


class ConditionViolated(SieveKitError):
    pass


class NotBallot(SieveKitError, ValueError):
    def __init__(self, position: int, message: str | None = None):
        self.position = position
        super().__init__(message or f"ballot condition fails at prefix index {position}")


class OutOfBand(SieveKitError):
    """Finite frieze entry requested outside 0 <= j - i <= width."""


class NotTriangulation(SieveKitError):
    pass


class NonConstant(SieveKitError):
    """Growth-coefficient differences disagree along a row."""


class UnsupportedOrder(SieveKitError, ValueError):
    pass
