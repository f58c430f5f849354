"""Exception types shared across the toolkit."""


class S1ReduxError(Exception):
    """Base class for every error raised by this package."""


class AllZeroWeights(S1ReduxError, ValueError):
    pass


class NotEffective(S1ReduxError, ValueError):
    pass


class DimensionMismatch(S1ReduxError, ValueError):
    pass


class EmptyLevelSet(S1ReduxError, ValueError):
    pass


class DegreeCapTooLow(UserWarning):
    """Hilbert basis frontier was still growing when the degree cap was hit.

    Issued as a warning: the partial basis is still returned, flagged
    ``complete=False``.
    """


class SeparationFailure(S1ReduxError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OutOfTable(S1ReduxError, LookupError):
    pass


class CatalogInsufficient(S1ReduxError):
    pass


class LevelTooLarge(S1ReduxError, ValueError):
    pass


class EnumerationBudgetExceeded(S1ReduxError):
    pass


class NotAWeakEquivalence(S1ReduxError):
    pass


class InvalidGroupoid(S1ReduxError, ValueError):
    pass


class HypothesisViolated(S1ReduxError, ValueError):
    pass


class SchemaError(S1ReduxError, ValueError):
    pass
