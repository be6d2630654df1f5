"""Exception hierarchy.

Errors fall in three families that the CLI maps to exit codes: input
problems (``ParseError``), failed validation (``ValidationFailure``) and
violated internal guarantees (``TheoremViolation``).
"""


class AffmvError(Exception):
    pass


class ParseError(AffmvError):
    """Malformed input text or JSON."""

    def __init__(self, message, pointer=""):
        super().__init__(f"{message} (at {pointer})" if pointer else message)
        self.pointer = pointer


class ValidationFailure(AffmvError):
    pass


class TheoremViolation(AffmvError):
    """A statement that must hold on valid input did not."""


class DimensionMismatch(AffmvError, ValueError):
    pass


class NotDominant(AffmvError, ValueError):
    pass


class NotInTitsConeInterior(AffmvError, ValueError):
    pass


class NonIntegralLevel(AffmvError, ValueError):
    pass


class NonReducedWord(AffmvError, ValueError):
    pass


class CutoffTooSmall(AffmvError):
    pass


class DepthExceeded(AffmvError):
    pass


class StabilizationCapExceeded(AffmvError):
    pass


class ClosureViolation(ValidationFailure):
    pass


class DiagonalNotActive(ValidationFailure):
    pass


class HypothesisNotMet(AffmvError, ValueError):
    pass


class DeltaTopAmbiguous(AffmvError, ValueError):
    pass


class BoundTooSmall(AffmvError):
    pass


class CompletionNotFound(TheoremViolation):
    pass


class CompletionNotUnique(TheoremViolation):
    pass


class ReductionFailed(TheoremViolation):
    pass


class NoMatch(TheoremViolation):
    pass


class MultipleMatches(TheoremViolation):
    pass
