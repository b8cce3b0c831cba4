"""Exception hierarchy shared by every detdecomp module."""


class DetDecompError(Exception):
    """Base class for all library errors."""


class FieldError(DetDecompError):
    """The requested base field is not admissible for the operation."""


class CharTwoError(FieldError):
    """Raised when a construction needs 1/2 but the field has characteristic 2."""

    def __init__(self, message="field of characteristic 2 is not allowed: "
                               "the construction needs 1/2 (char(K) != 2)"):
        super().__init__(message)


class NotPrimeError(FieldError):
    pass


class CharTooSmall(FieldError):
    """n! is not invertible in the field (0 < char(K) <= n)."""


class DivisionByZero(DetDecompError, ZeroDivisionError):
    pass


class InvalidPermutation(DetDecompError, ValueError):
    pass


class IndexOutOfRange(DetDecompError, IndexError):
    pass


class OrderMismatch(DetDecompError, ValueError):
    pass


class FieldMismatch(DetDecompError, ValueError):
    pass


class CapExceeded(DetDecompError, ValueError):
    pass


class ParseError(DetDecompError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CountMismatch(ParseError):
    pass
