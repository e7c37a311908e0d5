"""Collection of exceptions raised and/or processed by instcone."""

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INDETERMINATE = 2
EXIT_IO_ERROR = 3


class InstconeError(Exception):
    """Base class for every error instcone raises on purpose."""


class InvalidComplex(InstconeError):
    """Exception raised when a differential fails to square to zero.

    Also raised when a differential does not flip the homological grading.
    """


class NotChainMap(InstconeError):
    """Exception raised when a map does not commute with differentials."""


class MissingScalar(InstconeError):
    """Exception raised when a rescaling lacks a scalar for some grading."""


class ParseError(InstconeError):
    """Exception raised when knot data is not readable JSON."""


class SchemaError(InstconeError):
    """Exception raised when knot data does not follow the JSON schema.

    The offending location is available as a JSON pointer in ``pointer``.
    """

    def __init__(self, pointer, message):
        """Initialize.

        Args:
            pointer (str): JSON pointer to the offending value
            message (str): what is wrong with it
        """
        super().__init__("{pointer}: {message}".format(
            pointer=pointer or "/",
            message=message,
        ))
        self.pointer = pointer
        self.message = message


class ValidationError(InstconeError):
    """Exception raised when knot data violates its invariants.

    The full :py:class:`~instcone.knot.ValidationReport` is kept in
    ``report``.
    """

    def __init__(self, report):
        """Initialize."""
        failed = ", ".join(check.name for check in report.failures)
        super().__init__(
            "knot data {name!r} failed validation: {failed}".format(
                name=report.name,
                failed=failed,
            ),
        )
        self.report = report


class ConventionMismatch(InstconeError):
    """Exception raised when two computations of one invariant disagree."""


class WindowUnstable(InstconeError):
    """Exception raised when enlarging a truncation window moves a result."""


class TauZero(InstconeError):
    """Exception raised for quantities undefined when the tau invariant is 0."""


class PreconditionFailed(InstconeError):
    """Exception raised when arguments fall outside an operation's domain."""


class GeneratorFailure(InstconeError):
    """Exception raised when a random instance misses its hypotheses."""


_exit_codes = {
    ParseError: EXIT_IO_ERROR,
    SchemaError: EXIT_IO_ERROR,
    OSError: EXIT_IO_ERROR,
    InstconeError: EXIT_FAILURE,
}


def exit_code_for(exc):
    """Return the command line exit code matching the exception ``exc``.

    The most specific registered class in the exception's MRO wins.
    Anything unregistered maps to the generic failure code.

    >>> exit_code_for(ParseError('bad'))
    3
    >>> exit_code_for(TauZero('tau = 0'))
    1
    """
    for klass in type(exc).__mro__:
        if klass in _exit_codes:
            return _exit_codes[klass]
    return EXIT_FAILURE
