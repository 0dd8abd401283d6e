"""Exception hierarchy. Every input error is a ``KneserError`` (and a ValueError)."""


class KneserError(ValueError):
    pass


class ParseError(KneserError):
    pass


class DimensionMismatch(KneserError):
    pass


class DuplicatePoints(KneserError):
    pass


class DegenerateInput(KneserError):
    pass


class OverlappingSets(KneserError):
    pass


class EmptySet(KneserError):
    pass


class BadTransversalSize(KneserError):
    pass


class KTooLarge(KneserError):
    pass


class BadT(KneserError):
    pass


class RangeViolation(KneserError):
    pass


class NotFound(KneserError):
    pass


class BadRange(KneserError):
    pass


class BadSupportSize(KneserError):
    pass


class BadJ(KneserError):
    pass


class OracleCapExceeded(KneserError):
    pass


class GridTooLarge(KneserError):
    pass


class NonIncreasingParams(KneserError):
    pass


class BoundViolation(RuntimeError):
    """A searched value left the proven [z, Z] window: an implementation bug, not bad input."""
