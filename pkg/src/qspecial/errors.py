"""Exception types shared across the package."""


class QSpecialError(Exception):
    """Base class for all library errors."""


class DomainError(QSpecialError):
    """Input outside the mathematical domain of an operation."""


class ConvergenceError(QSpecialError):
    """A truncated product/series failed to meet its tail bound in budget."""


class UnknownIdentity(QSpecialError):
    """Requested identity id is not in the registry."""


class UnknownPath(QSpecialError):
    """Requested limit path is not in the catalog."""
