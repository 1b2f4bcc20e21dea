"""Exception hierarchy shared by every module of the package."""


class WicksError(ValueError):
    """Base class for all domain errors raised by :mod:`wicks`."""


class ParseError(WicksError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvalidForm(WicksError):
    """A word violates one of the defining conditions of a Wicks form."""


class OddLength(InvalidForm):
    pass


class UnpairedLetter(InvalidForm):
    pass


class Cancellation(InvalidForm):
    pass


class ReduciblePair(InvalidForm):
    pass


class NotMaximal(WicksError):
    pass


class UnknownBase(WicksError):
    pass


class MalformedNeighborhood(WicksError):
    """An IH neighbourhood that cannot occur in a valid maximal form."""


class PositiveVertex(WicksError):
    pass


class NoParent(WicksError):
    pass


class NoOrder2Element(WicksError):
    pass


class NoOrder3Element(WicksError):
    pass


class FormulaDomain(WicksError):
    pass


class IntegralityViolation(WicksError):
    pass


class GenusGuard(WicksError):
    """Requested genus is outside the allowed resource envelope."""


class CensusMismatch(WicksError):
    """A census failed its mass certificate or engine cross-check."""
