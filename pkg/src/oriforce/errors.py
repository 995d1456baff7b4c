"""Exception types shared across the package."""


class OriforceError(Exception):
    """Base class for all domain errors."""


class ParameterError(OriforceError, ValueError):
    """An argument is malformed or outside its documented range."""


class LimitError(OriforceError, ValueError):
    """An input exceeds a configured size limit; the message names the limit."""


class PreconditionError(OriforceError, ValueError):
    """A documented precondition of an operation does not hold."""


class InapplicableError(OriforceError, ValueError):
    """A bound or construction whose hypothesis is not met by the instance."""
