"""Exception types raised across the package."""


class UURError(ValueError):
    """Base class for invalid-input errors."""


class NotSelfAdjoint(UURError):
    pass


class NonFinite(UURError):
    pass


class IndexOutOfRange(UURError):
    pass


class DimensionMismatch(UURError):
    pass


class OutOfRange(UURError):
    pass


class UnsortedInput(UURError):
    pass


class DimensionCapExceeded(UURError):
    pass


class InvalidParameter(UURError):
    pass


class LengthMismatch(UURError):
    pass


class NotUnitary(UURError):
    pass


class EmptyTrialsWarning(UserWarning):
    """Emitted when a spot check is asked to run zero trials."""
