"""Exception types shared across the package."""


class WienerLabError(Exception):
    """Base class for every error raised by wienerlab."""


class DisconnectedError(WienerLabError):
    """The operation needs a connected graph."""


class TooLargeError(WienerLabError):
    """Input exceeds the desk-scale cap of an exhaustive routine."""


class BadParamsError(WienerLabError, ValueError):
    """A family or instance builder got parameters outside its preconditions."""


class DomainError(WienerLabError, ValueError):
    """An instance lies outside the precondition of a check."""
