"""Exception hierarchy shared by every module of the package."""


class OddGirthError(Exception):
    """Base class for all errors raised by :mod:`oddgirth`."""


class IndexOutOfRange(OddGirthError, IndexError):
    pass


class LoopEdge(OddGirthError, ValueError):
    pass


class ParamTooSmall(OddGirthError, ValueError):
    pass


class OddParam(OddGirthError, ValueError):
    pass


class SizeMismatch(OddGirthError, ValueError):
    pass


class ZeroClass(OddGirthError, ValueError):
    pass


class TooLarge(OddGirthError, ValueError):
    """The input exceeds a configured vertex bound."""


class PreconditionViolated(OddGirthError, ValueError):
    pass


class GirthTooSmall(PreconditionViolated):
    """The graph has an odd cycle shorter than ``2k+1``."""


class SearchBudgetExceeded(OddGirthError):
    """A bounded search ran out of nodes before reaching a verdict.

    This is an *inconclusive* outcome and must never be read as absence.
    """

    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exceeded node budget of {budget}")
        self.budget = budget


class HypothesisViolated(OddGirthError, ValueError):
    """The degree / odd girth hypotheses of the structure theorem fail."""

    def __init__(self, message: str, failed: str):
        super().__init__(message)
        self.failed = failed


class InternalContradiction(OddGirthError, AssertionError):
    """The constructive argument reached a state it proves impossible."""


class InvalidCertificate(OddGirthError, ValueError):
    pass


class ParseError(OddGirthError, ValueError):
    pass
