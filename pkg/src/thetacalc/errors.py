"""Exception hierarchy shared by all calculus modules."""


class ThetaCalcError(ValueError):
    """Base class for every error raised by thetacalc."""


class ContextMismatchError(ThetaCalcError):
    """Operands live on abelian varieties of different dimension."""


class DegreeError(ThetaCalcError):
    """A class is not homogeneous of the required degree."""


class InvariantViolationError(ThetaCalcError):
    """Two independent computations that must agree did not.

    Seeing this means an arithmetic bug, not bad input.
    """


class InputError(ThetaCalcError):
    """Malformed user input (rational literals, array lengths, JSON fields)."""

    def __init__(self, message, pointer=None):
        super().__init__(message)
        self.pointer = pointer

    def __str__(self):
        msg = super().__str__()
        if self.pointer:
            return f"{self.pointer}: {msg}"
        return msg


class UndeclaredWITError(InputError):
    """A transform was requested for a sheaf without a declared WIT index."""
