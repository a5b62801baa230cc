"""Partitions, Gelfand-Tsetlin patterns and semistandard tableaux.

Patterns are stored bottom-up: ``rows[0]`` is the single entry of row 1 and
``rows[-1]`` is the top row, which carries the highest weight padded with
zeros to the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    EntryOutOfRange,
    InterlacingViolation,
    NegativeEntry,
    NotDecreasing,
    ShapeError,
    ValidationError,
    WeightTooLong,
)

HighestWeight = tuple[int, ...]


def highest_weight(parts: Iterable[int]) -> HighestWeight:
    """Validate ``parts`` as a polynomial highest weight and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for p in parts:
        if p < 0:
            raise NegativeEntry(f"negative part {p} in weight {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotDecreasing(f"weight {parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def padded(weight: Sequence[int], n: int) -> HighestWeight:
    weight = highest_weight(weight)
    if len(weight) > n:
        raise WeightTooLong(weight, n)
    return weight + (0,) * (n - len(weight))


def conjugate(weight: Sequence[int]) -> HighestWeight:
    """Column heights of the Young diagram."""
    weight = tuple(weight)
    if not weight:
        return ()
    return tuple(sum(1 for p in weight if p > c) for c in range(weight[0]))


def partitions(size: int, max_length: int | None = None) -> list[HighestWeight]:
    """All partitions of ``size``, in reverse lexicographic order."""
    out: list[HighestWeight] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_length is not None and len(prefix) == max_length:
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(size, size, [])
    return out


def weyl_dimension(weight: Sequence[int], n: int) -> int:
    """Dimension of the irreducible gl(n)-module with this highest weight.

    Uses the product formula over pairs i < j, independent of any enumeration.
    """
    lam = padded(weight, n)
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


@dataclass(frozen=True, order=False)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def weight(self) -> HighestWeight:
        return highest_weight(self.rows[-1]) if self.rows else ()

    def entry(self, k: int, i: int) -> int:
        """The entry lambda_{k i}, 1-indexed, row k counted from the bottom."""
        return self.rows[k - 1][i - 1]

    def row(self, k: int) -> tuple[int, ...]:
        return self.rows[k - 1]

    @cached_property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __lt__(self, other: GTPattern) -> bool:
        return (self.n, self.sort_key) < (other.n, other.sort_key)

    def to_dict(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> GTPattern:
        pattern = validate_pattern(data["rows"])
        if pattern.n != data.get("n", pattern.n):
            raise ShapeError(f"declared n={data['n']} but {pattern.n} rows given")
        return pattern

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in reversed(self.rows))


def _check_interlacing(rows: Sequence[Sequence[int]]) -> None:
    for k in range(2, len(rows) + 1):
        upper, lower = rows[k - 1], rows[k - 2]
        for i in range(1, k):
            if not upper[i - 1] >= lower[i - 1]:
                raise InterlacingViolation(k, i, f"{upper[i - 1]} >= {lower[i - 1]} fails")
            if not lower[i - 1] >= upper[i]:
                raise InterlacingViolation(k, i, f"{lower[i - 1]} >= {upper[i]} fails")


def validate_pattern(rows: Sequence[Sequence[int]]) -> GTPattern:
    """Check a bottom-up triangular array and return it as a :class:`GTPattern`."""
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if not rows:
        raise ShapeError("a pattern needs at least one row")
    for r, row in enumerate(rows, start=1):
        if len(row) != r:
            raise ShapeError(f"row {r} has length {len(row)}, expected {r}")
        for x in row:
            if x < 0:
                raise NegativeEntry(f"negative entry {x} in row {r}")
    top = rows[-1]
    if any(a < b for a, b in zip(top, top[1:])):
        raise NotDecreasing(f"top row {top} is not weakly decreasing")
    _check_interlacing(rows)
    return GTPattern(rows)


def enumerate_patterns(weight: Sequence[int], n: int) -> list[GTPattern]:
    """All patterns with top row ``weight`` (zero-padded to ``n``).

    Ordered lexicographically on the rows concatenated bottom-up.
    """
    top = padded(weight, n)
    found: list[tuple[tuple[int, ...], ...]] = []

    def descend(chain):
        row = chain[-1]
        if len(row) == 1:
            found.append(tuple(reversed(chain)))
            return
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        for below in product(*ranges):
            descend(chain + [below])

    descend([top])
    return sorted((GTPattern(r) for r in found), key=lambda p: p.sort_key)


def pattern_weight(pattern: GTPattern) -> tuple[int, ...]:
    sums = [0] + [sum(r) for r in pattern.rows]
    return tuple(sums[k] - sums[k - 1] for k in range(1, pattern.n + 1))


# --- semistandard tableaux -------------------------------------------------


@dataclass(frozen=True)
class SSYT:
    shape: HighestWeight
    rows: tuple[tuple[int, ...], ...]
    max_entry: int

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ShapeError(f"row lengths {[len(r) for r in self.rows]} do not match shape {self.shape}")
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if not 1 <= x <= self.max_entry:
                    raise EntryOutOfRange(f"entry {x} outside 1..{self.max_entry}")
                if c and row[c - 1] > x:
                    raise ValidationError(f"row {r + 1} is not weakly increasing")
                if r and self.rows[r - 1][c] >= x:
                    raise ValidationError(f"column {c + 1} is not strictly increasing")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], max_entry: int) -> SSYT:
        rows = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        return cls(highest_weight(len(r) for r in rows), rows, max_entry)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        if not self.shape:
            return ()
        return tuple(
            tuple(row[c] for row in self.rows if len(row) > c) for c in range(self.shape[0])
        )

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}


def pattern_to_tableau(pattern: GTPattern) -> SSYT:
    """Row j of the tableau holds ``lambda_{v j} - lambda_{v-1, j}`` copies of each value v."""
    n = pattern.n
    shape = pattern.weight
    rows = []
    for j in range(1, len(shape) + 1):
        row: list[int] = []
        prev = 0
        for v in range(j, n + 1):
            count = pattern.entry(v, j)
            row.extend([v] * (count - prev))
            prev = count
        rows.append(tuple(row))
    return SSYT(shape, tuple(rows), n)


def tableau_to_pattern(tableau: SSYT, n: int | None = None) -> GTPattern:
    n = tableau.max_entry if n is None else n
    if any(x > n for row in tableau.rows for x in row):
        raise EntryOutOfRange(f"tableau has entries larger than {n}")
    if len(tableau.shape) > n:
        raise WeightTooLong(tableau.shape, n)
    rows = []
    for i in range(1, n + 1):
        rows.append(
            tuple(
                sum(1 for x in tableau.rows[j] if x <= i) if j < len(tableau.rows) else 0
                for j in range(i)
            )
        )
    return GTPattern(tuple(rows))


def enumerate_tableaux(weight: Sequence[int], n: int) -> list[SSYT]:
    """Semistandard tableaux of the given shape with entries in 1..n, via the pattern bijection."""
    return [pattern_to_tableau(p) for p in enumerate_patterns(weight, n)]


# --- infinite patterns -----------------------------------------------------


def _last_change(rows: Sequence[Sequence[int]]) -> int:
    last = 1
    for k in range(2, len(rows) + 1):
        if any(rows[k - 1][i] != rows[k - 2][i] for i in range(k - 1)):
            last = k
    return last


@dataclass(frozen=True)
class InfiniteGTPattern:
    """An infinite pattern, stored as its triangle up to the degree.

    Every row above the stored triangle equals the weight padded with zeros.
    """

    weight: HighestWeight
    triangle: GTPattern

    def __post_init__(self):
        deg = self.triangle.n
        if self.triangle.rows[-1] != padded(self.weight, deg):
            raise ShapeError("top row of the triangle must be the padded weight")
        if deg != max(1, len(self.weight), _last_change(self.triangle.rows)):
            raise ValidationError(f"triangle of rank {deg} is not truncated at the degree")

    @property
    def degree(self) -> int:
        return self.triangle.n

    @classmethod
    def from_pattern(cls, pattern: GTPattern) -> InfiniteGTPattern:
        """Read a finite pattern as an infinite one and truncate at its degree."""
        weight = pattern.weight
        deg = max(1, len(weight), _last_change(pattern.rows))
        return cls(weight, GTPattern(pattern.rows[:deg]))

    @classmethod
    def from_tableau(cls, tableau: SSYT) -> InfiniteGTPattern:
        n = max([tableau.max_entry, len(tableau.shape), 1])
        return cls.from_pattern(tableau_to_pattern(tableau, n))

    def at_rank(self, n: int) -> GTPattern:
        if n < self.degree:
            raise ValueError(f"rank {n} is below the degree {self.degree}")
        extra = tuple(padded(self.weight, k) for k in range(self.degree + 1, n + 1))
        return GTPattern(self.triangle.rows + extra)

    def to_dict(self) -> dict:
        return {"weight": list(self.weight), "degree": self.degree, "pattern": self.triangle.to_dict()}


def pattern_degree(pattern: InfiniteGTPattern | GTPattern) -> int:
    """Smallest rank past which consecutive rows stop changing (at least the weight length, at least 1)."""
    if isinstance(pattern, InfiniteGTPattern):
        pattern = pattern.triangle
    return max(1, len(pattern.weight), _last_change(pattern.rows))


def degree_strata(weight: Sequence[int], max_degree: int) -> dict[int, list[InfiniteGTPattern]]:
    weight = highest_weight(weight)
    strata: dict[int, list[InfiniteGTPattern]] = {d: [] for d in range(1, max_degree + 1)}
    for p in enumerate_patterns(weight, max_degree):
        inf = InfiniteGTPattern.from_pattern(p)
        strata[inf.degree].append(inf)
    for members in strata.values():
        members.sort(key=lambda p: p.triangle.sort_key)
    return strata


def enumerate_infinite_patterns(weight: Sequence[int], max_degree: int) -> list[InfiniteGTPattern]:
    """Infinite patterns of degree at most ``max_degree``, grouped by increasing degree."""
    strata = degree_strata(weight, max_degree)
    return [p for d in sorted(strata) for p in strata[d]]
