"""Exception types shared across the package."""


class TaubenchError(Exception):
    pass


class ParseError(TaubenchError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class AdmissibilityShape(TaubenchError):
    """A relation term of length < 2, or ill-matched endpoints."""


class CompletionBudgetExceeded(TaubenchError):
    pass


class InfiniteDimensional(TaubenchError):
    pass


class NotSourceOrSink(TaubenchError):
    pass


class NotANode(TaubenchError):
    pass


class IdealNotInRadical(TaubenchError):
    pass


class InfiniteField(TaubenchError):
    pass


class CensusCapExceeded(TaubenchError):
    pass


class LatticeCapExceeded(TaubenchError):
    pass


class NotSpecialBiserial(TaubenchError):
    pass


class NotAnIsomorphism(TaubenchError):
    pass


class NotSilting(TaubenchError):
    pass


class NotMutableInDirection(TaubenchError):
    pass


class MinimalNodeNotReached(TaubenchError):
    pass


class NoLabelFound(TaubenchError):
    pass


class BoundViolated(TaubenchError):
    """The silting-mutation dimension inequality failed; fatal."""


class SocleNotOneDimensional(TaubenchError):
    pass


class SearchBudgetExceeded(TaubenchError):
    pass


class ZeroModule(TaubenchError):
    pass


class FieldTooSmallForSplit(TaubenchError):
    pass


class InconsistencyAlert(TaubenchError):
    """Two independent certificates contradict each other; aborts the run."""
