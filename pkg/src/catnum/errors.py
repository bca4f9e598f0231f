"""Exception types raised by the catnum library."""


class CatnumError(Exception):
    """Base class for all catnum errors."""


class EmptyDeconstruction(CatnumError):
    """Tried to split the zero value into a pair."""


class ZeroPredecessor(CatnumError):
    """Tried to take the predecessor of zero."""


class OddHalf(CatnumError):
    """Tried to halve an odd value; use divide() for floor semantics."""


class NotPowerOfTwo(CatnumError):
    """log2 applied to a value that is not an exact power of two."""


class Underflow(CatnumError):
    """Subtraction would produce a negative result."""


class DivisionByZero(CatnumError):
    """Division or remainder with a zero divisor."""


class MalformedWord(CatnumError):
    """Parenthesis word is unbalanced, empty, or contains stray characters."""


class SizeGuard(CatnumError):
    """Conversion to a plain integer would exceed the configured bit cap."""


class CapExceeded(CatnumError):
    """Enumeration size is beyond the configured cap."""


class StepLimit(CatnumError):
    """Iteration was truncated at the step bound before reaching zero.

    The iterates produced so far are available as ``iterates``.
    """

    def __init__(self, iterates):
        super().__init__(f"step limit reached after {len(iterates)} iterates")
        self.iterates = iterates


class ParseError(CatnumError):
    """Expression text could not be parsed."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ArityError(ParseError):
    """Operation applied to the wrong number of arguments."""


class UnknownName(ParseError):
    """Expression refers to an unregistered operation or constant."""


class LiteralTooLarge(ParseError):
    """Decimal literal exceeds the configured literal cap."""
