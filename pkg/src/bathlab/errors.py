"""Exception types shared across the package."""


class BathlabError(Exception):
    """Base class for all bathlab errors."""


class NonConvergence(BathlabError):
    """An iterative numerical procedure exhausted its budget above tolerance."""


class InvalidBracket(BathlabError):
    """Root bracket endpoints do not enclose a sign change."""


class RootNotBracketed(BathlabError):
    """A secular-equation root escaped its interlacing bracket."""


class PoleError(BathlabError):
    """Special function evaluated at a pole (non-positive integer)."""


class DomainError(BathlabError):
    """Argument outside the mathematical domain of the operation."""
