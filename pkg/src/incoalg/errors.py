"""Exception hierarchy shared by every module."""


class IncoalgError(ValueError):
    """Base class for all errors raised by this package."""


class FieldError(IncoalgError):
    """Bad field specification, malformed scalar, or mixed fields."""


class PosetError(IncoalgError):
    """Invalid poset input or a query outside the order."""


class NotInvertibleError(IncoalgError):
    pass


class MismatchError(IncoalgError):
    """Operands live over different posets or fields."""


class InvalidSystemError(IncoalgError):
    """A multiplicative or additive system violates its defining relation."""


class NotAnAutomorphismError(IncoalgError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class NotADerivationError(IncoalgError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
