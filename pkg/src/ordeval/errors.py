"""Exception types raised by validation, metrics, and file ingestion."""


class EvalError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteProbability(EvalError):
    pass


class NegativeProbability(EvalError):
    pass


class SumOutOfTolerance(EvalError):
    pass


class LabelOutOfRange(EvalError):
    pass


class DuplicateId(EvalError):
    pass


class EmptyDataset(EvalError):
    pass


class ShapeMismatch(EvalError):
    pass


class UnknownRule(EvalError):
    pass


class UnknownMetric(EvalError):
    pass


class ZeroBins(EvalError):
    pass


class EmptyFractionList(EvalError):
    pass


class FractionOutOfRange(EvalError):
    pass


class GridMismatch(EvalError):
    pass


class InvalidConfig(EvalError):
    pass


class MalformedHeader(EvalError):
    pass


class RowArityMismatch(EvalError):
    pass


class NonNumericField(EvalError):
    pass
