"""Exception types shared across the package."""


class QCliffordError(Exception):
    """Base class for all package errors."""


class DivisionByZero(QCliffordError, ZeroDivisionError):
    """Division by the zero element of Q(q)."""


class PoleAtEvaluationPoint(QCliffordError, ZeroDivisionError):
    """Numeric evaluation hit a zero of a denominator."""


class InvalidArgument(QCliffordError, ValueError):
    """Argument outside an operation's stated domain."""


class InvalidParameter(QCliffordError, ValueError):
    """Numeric parameter outside its admissible range."""


class InvalidVariable(QCliffordError, IndexError):
    """Variable or generator index outside the declared dimension."""


class AlgebraMismatch(QCliffordError, ValueError):
    """Operands live in incompatible algebras (different dimension m)."""


class NotHomogeneous(QCliffordError, ValueError):
    """Operation requires homogeneous polynomial input."""


class UsesExtendedAlgebra(QCliffordError, ValueError):
    """Operation does not accept x0/e0 content; use the extension module."""


class SingularSystem(QCliffordError, ArithmeticError):
    """A linear system that must be regular turned out singular."""


class ParseError(QCliffordError, ValueError):
    """Expression syntax error; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
