"""Exception hierarchy. Everything raised on a domain condition derives
from :class:`NumerationError` so the CLI can map it to exit code 1."""


class NumerationError(Exception):
    pass


class SearchBoundExceeded(NumerationError):
    """A periodicity search ran past its cap (periodicity is guaranteed, so this is a bug)."""


class NegativeExponent(NumerationError):
    pass


class CapExceeded(NumerationError):
    """The request falls outside the configured enumeration window."""


class NotApplicable(NumerationError):
    """The closed-form tail does not exist for these parameters."""


class QTooSmall(NumerationError):
    pass


class OutOfRegime(NumerationError):
    """Length gap outside {0, ..., beta}."""


class EmptyRegion(NumerationError):
    pass


class WordSyntaxError(NumerationError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
