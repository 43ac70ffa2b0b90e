"""
Exceptions raised by the tlsecho model layer.

Input problems derive from ValueError and numerical failures from RuntimeError, so
callers that only know the builtins still catch them; the CLI maps the two families
to distinct exit codes.
"""


class TlsEchoError(Exception):
    """Base class for every error raised by tlsecho."""


class DomainError(TlsEchoError, ValueError):
    """A numeric argument lies outside the domain of the operation."""


class SchemaError(TlsEchoError, ValueError):
    """A file does not follow its declared format."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


class GridMismatchError(TlsEchoError, ValueError):
    """Traces that must share a time grid do not."""


class WindowError(TlsEchoError, ValueError):
    """A requested integration window is not covered by the trace."""


class InsufficientDataError(TlsEchoError, ValueError):
    """Too few samples, points or traces for the requested estimate."""


class ValidityError(TlsEchoError, ValueError):
    """The small-loss linearization of a formula does not hold."""


class FitFailure(TlsEchoError, RuntimeError):
    """A pulse fit could not be performed or did not converge."""


class ConvergenceError(TlsEchoError, RuntimeError):
    """An optimizer or root search ended without a solution."""


class SingularProfileError(ConvergenceError):
    """The unit-amplitude model of a series vanishes, so its amplitude is undefined."""
