"""Exception hierarchy shared by the library and the CLI."""


class MinsepError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(MinsepError, ValueError):
    """Invalid graph construction or operation argument."""


class GraphFormatError(MinsepError, ValueError):
    """Malformed graph text input."""


class FamilyError(MinsepError, ValueError):
    """Unknown graph name or malformed family string."""


class OutOfScopeError(MinsepError, ValueError):
    """Input outside the hypotheses of the classifier (members with > 4 vertices)."""


class PreconditionError(MinsepError, ValueError):
    """A check was handed a graph outside the class it is stated for."""


class SamplingError(MinsepError, RuntimeError):
    """Rejection sampling ran out of draws."""


class ConsistencyError(MinsepError, RuntimeError):
    """An internal cross-check failed; carries a counterexample description."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
