"""Exception types shared across the package."""


class EwmcpError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EwmcpError):
    """Invalid input: out-of-range vertex, malformed permutation, bad parameter."""


class ParseError(EwmcpError):
    """Malformed instance file.

    Carries the 1-based line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MetricUndefinedError(EwmcpError):
    """A ratio metric was requested on inputs where it is undefined (zero denominator)."""


class LpLimitError(EwmcpError):
    """The LP solver hit its iteration cap before proving optimality.

    ``solution`` holds the partial solver state for diagnosis.
    """

    def __init__(self, message: str, solution=None):
        self.solution = solution
        super().__init__(message)
