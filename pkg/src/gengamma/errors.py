"""Exception hierarchy shared by every module of the package."""


class GenGammaError(Exception):
    """Base class for all errors raised by gengamma."""


class PoleProximity(GenGammaError, ValueError):
    """An argument lies within the pole threshold of a singularity."""

    def __init__(self, message, pole=None):
        super().__init__(message)
        self.pole = pole


class DomainError(GenGammaError, ValueError):
    """An argument or parameter lies outside the supported domain."""


class TruncatedAtCap(GenGammaError, RuntimeError):
    """The term cap was reached before a valid tail bound could be established."""


class UnknownIdentity(GenGammaError, LookupError):
    """The requested identity id is not in the registry."""


class EmptyGrid(GenGammaError, ValueError):
    """Every candidate grid point was excluded."""
