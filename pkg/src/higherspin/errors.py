"""Exception hierarchy shared by all modules."""


class HigherSpinError(Exception):
    """Base class for every error raised by this package."""


class WeightError(HigherSpinError, ValueError):
    """A weight vector is not a valid highest weight for its algebra."""


class WrongLength(WeightError):
    pass


class NotDominant(WeightError):
    pass


class MixedParity(WeightError):
    pass


class InternalNonInteger(HigherSpinError, ArithmeticError):
    """The Weyl product produced a non-integer; this is always a bug."""


class RankMismatch(HigherSpinError, ValueError):
    pass


class UnsupportedFiber(HigherSpinError, ValueError):
    pass


class NotApplicable(HigherSpinError, ValueError):
    """The operator does not act on the requested family."""


class AbsentOperator(HigherSpinError, ValueError):
    """The operator is set to zero for these parameters and has no normalization."""


class NotASummand(HigherSpinError, ValueError):
    pass


class IncompleteTargets(HigherSpinError, ValueError):
    pass


class SingularElimination(HigherSpinError, ArithmeticError):
    pass


class DegreeOutOfRange(HigherSpinError, ValueError):
    pass


class FactorizationViolated(HigherSpinError, AssertionError):
    """A factorization product failed to vanish; carries the offending report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
