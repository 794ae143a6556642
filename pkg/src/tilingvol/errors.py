"""Exception hierarchy shared by the library and the command line."""


class TilingVolError(Exception):
    """Base class for all errors raised by tilingvol."""

    exit_code = 1


class ParseError(TilingVolError, ValueError):
    """Malformed textual input (vertex configurations, angle literals, spec files)."""

    exit_code = 2

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(TilingVolError, ValueError):
    """Input outside the domain where a quantity is defined."""

    exit_code = 3


class NoRealizationError(DomainError):
    """The tiling has no equilateral realization in the expected geometry."""


class InconsistentClassesError(DomainError):
    """Vertex classes of a k-uniform tiling disagree (geometry or angles)."""


class NumericalError(TilingVolError, ArithmeticError):
    """Degenerate denominators, non-finite intermediates, non-convergence."""

    exit_code = 4
