"""Exception hierarchy shared by all speclab modules."""


class SpecLabError(Exception):
    """Base class for all speclab errors."""


class DomainError(SpecLabError):
    """A parameter or precondition lies outside the supported domain."""


class SizeError(DomainError):
    """An exhaustive operation was asked to run above its size cap."""


class ConnectivityError(DomainError):
    """The operation requires a connected graph (or a reachable pair)."""


class UnsupportedError(DomainError):
    """The input shape is valid but not supported by this operation."""


class MultiplicityError(DomainError):
    """The second eigenvalue is not simple, so the spectral cut is undefined."""


class NumericError(SpecLabError):
    """A numeric routine failed to reach its accuracy target."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class SchemaError(SpecLabError):
    """A serialized graph does not conform to the JSON schema."""
