"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class ParseError(ValueError):
    """A system or solution document is malformed.

    The offending field is available as ``field`` (a dotted path such as
    ``modes[1].A[0]``), or ``None`` when the document itself is unreadable.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


class InfeasibleError(RuntimeError):
    """The input system cannot satisfy the requested property."""
