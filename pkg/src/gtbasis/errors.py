"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class GTError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(GTError, ValueError):
    """Input data does not satisfy a structural invariant."""


class ShapeError(ValidationError):
    pass


class NegativeEntry(ValidationError):
    pass


class NotDecreasing(ValidationError):
    pass


class WeightTooLong(ValidationError):
    def __init__(self, weight, n):
        super().__init__(f"weight {tuple(weight)} has more than {n} nonzero parts")
        self.weight = tuple(weight)
        self.n = n


class InterlacingViolation(ValidationError):
    """Rows ``k`` and ``k - 1`` (1-indexed from the bottom) fail to interlace at entry ``i``."""

    def __init__(self, k: int, i: int, detail: str = ""):
        msg = f"interlacing fails between rows {k} and {k - 1} at i={i}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.k = k
        self.i = i


class EntryOutOfRange(ValidationError):
    pass


class IndexOutOfRange(GTError, IndexError):
    pass


class ZeroVector(GTError, ValueError):
    pass


class NotHomogeneous(GTError, ValueError):
    pass


class ZeroVectorProduced(GTError, ArithmeticError):
    """A basis vector came out zero; the operator ordering convention is broken."""


class RankDeficient(GTError, ArithmeticError):
    pass


class StabilityViolation(GTError, ArithmeticError):
    def __init__(self, rank: int, detail: str = ""):
        super().__init__(f"embedding from rank {rank} to {rank + 1} is not stable {detail}".rstrip())
        self.rank = rank
