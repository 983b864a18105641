"""Exception types shared across the package."""


class SdcmError(Exception):
    """Base class for all package errors."""


class DivisionByZeroSeries(SdcmError, ZeroDivisionError):
    """Division by the zero series."""


class NonNegativityViolation(SdcmError):
    """A series required to have nonnegative integer coefficients does not."""

    def __init__(self, message, index=None, coefficient=None):
        super().__init__(message)
        self.index = index
        self.coefficient = coefficient


class AmbiguousComparison(SdcmError):
    """Two interval-valued quantities overlap even after refinement."""


class ParseError(SdcmError, ValueError):
    """Series expression rejected, with byte offset and expected tokens."""

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at offset {offset}"
                         + (f" (expected one of: {', '.join(sorted(expected))})" if expected else ""))
        self.offset = offset
        self.expected = frozenset(expected)


class ModelFormatError(SdcmError, ValueError):
    """A model or homomorphism file violates the documented schema."""


class NotComparable(SdcmError):
    """The requested pair of classes is not related in the reflexivity order."""


class InvalidRoute(SdcmError):
    """A walk fails the alternation or comparability requirements of a route."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NoDualizing(SdcmError):
    """The model carries no dualizing class or no ring Bass series."""


class NotClosedUnderDuality(SdcmError):
    """No consistent dual pairing exists on the model's classes."""

    def __init__(self, message, orphan=None):
        super().__init__(message)
        self.orphan = orphan


class MapNotOrderPreserving(SdcmError):
    """A class map between models does not respect the reflexivity orders."""
