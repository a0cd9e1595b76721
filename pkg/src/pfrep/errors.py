"""Exception hierarchy shared by all modules."""


class PfrepError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(PfrepError, ValueError):
    """Input data violates a structural requirement.

    ``position`` names the offending location (for example
    ``tables.compose[1][2]``) when one is known.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{position}: {message}"
        super().__init__(message)


class CapacityError(PfrepError):
    def __init__(self, message, size=None):
        self.size = size
        super().__init__(message)


class ClosureError(PfrepError):
    """A set of partial functions is not closed under an operation."""

    def __init__(self, symbol, args, result):
        self.symbol = symbol
        self.args = args
        self.result = result
        super().__init__(f"not closed under {symbol}: result of {symbol}{tuple(args)} is missing")


class NotARepresentationError(PfrepError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotRepresentableError(PfrepError):
    """Raised when a sound necessary condition for representability fails."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class InconsistencyError(NotRepresentableError):
    pass


class UnsupportedSignatureError(PfrepError):
    pass


class ConstructionError(PfrepError):
    def __init__(self, message, class_id=None):
        self.class_id = class_id
        super().__init__(message)
