"""Exception types raised across the package."""

from __future__ import annotations


class BrunnianError(Exception):
    """Base class for all domain errors."""


class ParseError(BrunnianError, ValueError):
    pass


class NotSquare(BrunnianError, ValueError):
    pass


class NotOddSize(BrunnianError, ValueError):
    pass


class NotBlockForm(BrunnianError, ValueError):
    """A matrix cell contradicts the expected block layout.

    ``row`` and ``col`` are 0-based indices of the offending cell and
    ``reason`` names the violated part of the layout.
    """

    def __init__(self, reason: str, row: int | None = None, col: int | None = None,
                 value: int | None = None):
        self.reason = reason
        self.row = row
        self.col = col
        self.value = value
        where = "" if row is None else f" at ({row}, {col})"
        got = "" if value is None else f", found {value}"
        super().__init__(f"not in block form: {reason}{where}{got}")


class OddPart(BrunnianError, ValueError):
    pass


class DimensionMismatch(BrunnianError, ValueError):
    pass


class NotUnimodular(BrunnianError, ValueError):
    pass


class IndexOutOfRange(BrunnianError, IndexError):
    pass


class ValueOutOfRange(BrunnianError, ValueError):
    pass


class NotInBase(BrunnianError, ValueError):
    pass


class InvalidHistory(BrunnianError, ValueError):
    pass


class ModulusMismatch(BrunnianError, ValueError):
    pass


class InadmissibleChain(BrunnianError, ValueError):
    pass


class NotRealizable(BrunnianError, ValueError):
    def __init__(self, message: str, verdict=None):
        self.verdict = verdict
        super().__init__(message)


class InconsistentPlan(BrunnianError, ValueError):
    pass


class RangeError(BrunnianError, ValueError):
    pass
