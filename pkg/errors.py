"""
Error Types
-----------
Exception hierarchy shared by every feature package.
The CLI maps these classes onto its exit codes.
"""


class NumberTheoryError(Exception):
    """Base class for all errors raised by this project."""


class DomainError(NumberTheoryError, ValueError):
    """An input violates the documented precondition of an operation."""


class NotPairwiseCoprime(DomainError):
    """Two factors handed to prop4_decompose share a common divisor."""


class ProductNotSquare(DomainError):
    """The product handed to prop4_decompose is not a perfect square."""


class NotPythagorean(DomainError):
    """A triple passed to classification does not satisfy a² + b² = c²."""


class InternalLogicError(NumberTheoryError):
    """A step that cannot be reached for valid input was reached anyway."""


class InternalNonIntegral(InternalLogicError):
    """The multiplier recovered during classification is not an integer."""


class MeasureViolation(NumberTheoryError):
    """A descent step returned a state whose measure did not strictly decrease."""


class UsageError(NumberTheoryError):
    """Invalid command-line usage or invalid work partitioning request."""
