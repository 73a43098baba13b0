"""Exception hierarchy shared across the package."""


class PolarwebError(Exception):
    """Base class for all package errors."""


class PolynomialError(PolarwebError):
    """Invalid polynomial operation (bad variable, negative power, zero input)."""


class ParseError(PolarwebError):
    """Syntax or validation error in textual input."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {column})" if column is not None else ")")
        super().__init__(message + where)


class WebValidationError(PolarwebError):
    """A symmetric form violates a web invariant (zero, inhomogeneous, non-primitive)."""


class DegenerateSampleError(PolarwebError):
    """Generic sampling failed to find an admissible witness within the retry budget."""


class NumericAbortError(PolarwebError):
    """A numeric routine could not certify its result (tracking too close to a
    branch point, root finder stagnation, ambiguous cluster)."""


class InfiniteZeroSetError(PolarwebError):
    """A zero set expected to be finite has a positive-dimensional component."""


class InternalInvariantError(PolarwebError):
    """Two independent computations of the same invariant disagree; a bug, never
    a mathematical outcome."""
