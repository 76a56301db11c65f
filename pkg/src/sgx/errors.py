"""Exception types shared across the package."""


class SgxError(Exception):
    """Base class for all errors raised by sgx."""


class DivisionByZero(SgxError, ZeroDivisionError):
    pass


class RequiresExtension(SgxError):
    """A polynomial does not split into linear factors over Q(i).

    Raised when an input leaves the supported coefficient field; the
    offending residual factor is kept on the instance.
    """

    def __init__(self, residual, message=None):
        self.residual = residual
        super().__init__(message or f"factor {residual} has no roots in Q(i)")


class InvalidParameter(SgxError, ValueError):
    pass


class InvalidOrder(InvalidParameter):
    pass


class ResourceBudgetExceeded(SgxError):
    """A Groebner computation hit its degree, size or deadline cap."""


class ClassifierMismatch(SgxError):
    """A constructed building block failed its own classifier check.

    This is an internal consistency failure and must never be caught
    and ignored.
    """


class ParseError(SgxError, ValueError):
    def __init__(self, offset, expected, message=None):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        text = f"parse error at byte {offset}: expected one of {', '.join(self.expected)}"
        if message:
            text += f"; {message}"
        super().__init__(text)
