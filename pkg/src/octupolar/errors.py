"""Exception hierarchy shared by all octupolar modules."""


class OctupolarError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(OctupolarError, ValueError):
    """Invalid construction data or violated call precondition."""


class DomainError(OctupolarError, ValueError):
    """Input lies outside the mathematical domain of the operation."""


class DegenerateConfigurationError(OctupolarError):
    """The configuration is singular for the requested computation."""


class NumericalFailureError(OctupolarError):
    """An iterative or fitted computation failed its own quality check."""
