"""The polynomial gl(n)-module V^lambda as a quotient of a tensor product of wedges.

A basis monomial is a tuple of columns, one per column of the Young diagram;
column ``c`` is a strictly increasing tuple of indices in ``1..n`` of length
equal to the height of that column, and stands for the wedge of the
corresponding basis vectors of C^n. Column-sorting a raw filling introduces a
sign, and a repeated index kills the monomial.

The quotient is taken modulo the exchange relations between columns. A
vector is *straightened* when every monomial in it is semistandard (rows
weakly increasing), and the semistandard monomials form a basis of the
quotient.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import cache
from itertools import combinations, product
from numbers import Rational

from .combinatorics import (
    SSYT,
    HighestWeight,
    conjugate,
    enumerate_tableaux,
    highest_weight,
    padded,
)
from .errors import (
    IndexOutOfRange,
    NotHomogeneous,
    ShapeError,
    ValidationError,
    ZeroVector,
)

Columns = tuple[tuple[int, ...], ...]
Weight = tuple[int, ...]


def _normal_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class ModuleVector:
    """Sparse exact-rational combination of column monomials in V^lambda for gl(n).

    Instances are treated as immutable; arithmetic returns new vectors.
    """

    __slots__ = ("shape", "n", "_terms")

    def __init__(self, shape: Sequence[int], n: int, terms: Mapping[Columns, Rational] | None = None):
        self.shape: HighestWeight = tuple(shape)
        self.n = n
        self._terms: dict[Columns, Rational] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self._terms[mono] = _normal_coeff(c)

    @classmethod
    def _raw(cls, shape, n, terms: dict) -> ModuleVector:
        v = cls.__new__(cls)
        v.shape, v.n, v._terms = shape, n, terms
        return v

    @classmethod
    def zero(cls, shape: Sequence[int], n: int) -> ModuleVector:
        return cls(highest_weight(shape), n)

    @classmethod
    def monomial(cls, shape: Sequence[int], n: int, columns: Iterable[Iterable[int]], coeff: Rational = 1) -> ModuleVector:
        """A single (possibly unsorted) filling, normalized to canonical form."""
        shape = highest_weight(shape)
        columns = tuple(tuple(c) for c in columns)
        check_filling(shape, n, columns)
        normal = normalize_monomial(columns)
        if normal is None:
            return cls(shape, n)
        mono, sign = normal
        return cls(shape, n, {mono: sign * coeff})

    @property
    def terms(self) -> dict[Columns, Rational]:
        return dict(self._terms)

    def items(self) -> list[tuple[Columns, Rational]]:
        """Terms in canonical monomial order."""
        return sorted(self._terms.items())

    def coefficient(self, mono: Columns) -> Rational:
        return self._terms.get(mono, 0)

    def __iter__(self) -> Iterator[Columns]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check_context(self, other: ModuleVector) -> None:
        if (self.shape, self.n) != (other.shape, other.n):
            raise ShapeError(
                f"vectors live in different modules: {(self.shape, self.n)} vs {(other.shape, other.n)}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (self.shape, self.n) == (other.shape, other.n) and self._terms == other._terms

    def __hash__(self):
        return hash((self.shape, self.n, frozenset(self._terms.items())))

    def __add__(self, other: ModuleVector) -> ModuleVector:
        self._check_context(other)
        terms = dict(self._terms)
        _accumulate(terms, other._terms.items())
        return ModuleVector._raw(self.shape, self.n, terms)

    def __neg__(self) -> ModuleVector:
        return ModuleVector._raw(self.shape, self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        return self + (-other)

    def __mul__(self, scalar: Rational) -> ModuleVector:
        if not scalar:
            return ModuleVector._raw(self.shape, self.n, {})
        scalar = _normal_coeff(scalar)
        return ModuleVector._raw(
            self.shape, self.n, {m: _normal_coeff(c * scalar) for m, c in self._terms.items()}
        )

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return f"ModuleVector({self.shape}, n={self.n}, 0)"
        body = " + ".join(f"{c}*{[list(col) for col in m]}" for m, c in self.items())
        return f"ModuleVector({self.shape}, n={self.n}, {body})"

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.shape),
            "n": self.n,
            "terms": [
                {"columns": [list(col) for col in m], "coeff": str(Fraction(c))} for m, c in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> ModuleVector:
        shape = highest_weight(data["lambda"])
        n = int(data["n"])
        out = cls(shape, n)
        for term in data["terms"]:
            out = out + cls.monomial(shape, n, term["columns"], Fraction(term["coeff"]))
        return out


def _accumulate(terms: dict, items) -> None:
    for m, c in items:
        value = terms.get(m, 0) + c
        if value:
            terms[m] = value
        else:
            terms.pop(m, None)


def check_filling(shape: Sequence[int], n: int, columns: Columns) -> None:
    heights = conjugate(shape)
    if tuple(len(c) for c in columns) != heights:
        raise ShapeError(f"column heights {[len(c) for c in columns]} do not match shape {tuple(shape)}")
    for col in columns:
        for x in col:
            if not 1 <= x <= n:
                raise IndexOutOfRange(f"index {x} outside 1..{n}")


def normalize_monomial(columns: Iterable[Iterable[int]]) -> tuple[Columns, int] | None:
    """Sort every column, tracking the sign; ``None`` when a column repeats an index."""
    sign = 1
    out = []
    for col in columns:
        col = list(col)
        if len(set(col)) != len(col):
            return None
        # inversion count gives the parity of the sorting permutation
        inv = sum(1 for a in range(len(col)) for b in range(a + 1, len(col)) if col[a] > col[b])
        if inv % 2:
            sign = -sign
        out.append(tuple(sorted(col)))
    return tuple(out), sign


def is_semistandard(mono: Columns) -> bool:
    for left, right in zip(mono, mono[1:]):
        for a, b in zip(left, right):
            if a > b:
                return False
    return True


def _first_violation(mono: Columns) -> tuple[int, int] | None:
    for c, (left, right) in enumerate(zip(mono, mono[1:])):
        for r, (a, b) in enumerate(zip(left, right)):
            if a > b:
                return c, r
    return None


def _perm_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


@cache
def garnir_terms(mono: Columns) -> tuple[tuple[Columns, int], ...]:
    """Rewrite a non-semistandard monomial as a combination of strictly smaller ones.

    At the leftmost violating column pair and the first row ``r`` where the
    left entry exceeds the right one, the entries from row ``r`` down in the
    left column together with those from the top to row ``r`` in the right
    column number one more than the left column height, so their alternating
    shuffle sum vanishes in the module. Every other shuffle moves a smaller
    index into the left column, so each returned monomial precedes ``mono``
    in the lexicographic order on concatenated columns.
    """
    spot = _first_violation(mono)
    if spot is None:
        return ((mono, 1),)
    c, r = spot
    left, right = mono[c], mono[c + 1]
    pool = left[r:] + right[: r + 1]
    keep = len(left) - r
    identity = tuple(range(keep))
    out: dict[Columns, int] = {}
    for chosen in combinations(range(len(pool)), keep):
        if chosen == identity:
            continue
        rest = tuple(k for k in range(len(pool)) if k not in chosen)
        sign = _perm_sign(chosen + rest)
        raw = list(mono)
        raw[c] = left[:r] + tuple(pool[k] for k in chosen)
        raw[c + 1] = tuple(pool[k] for k in rest) + right[r + 1 :]
        normal = normalize_monomial(raw)
        if normal is None:
            continue
        new, s = normal
        # mono + sum_{other shuffles} sign * T = 0
        _accumulate(out, [(new, -sign * s)])
    return tuple(sorted(out.items()))


@cache
def straighten_monomial(mono: Columns) -> tuple[tuple[Columns, int], ...]:
    """Semistandard expansion of a canonical monomial (integer coefficients)."""
    if is_semistandard(mono):
        return ((mono, 1),)
    out: dict[Columns, int] = {}
    for smaller, c in garnir_terms(mono):
        _accumulate(out, ((m, c * d) for m, d in straighten_monomial(smaller)))
    return tuple(sorted(out.items()))


def straighten(v: ModuleVector) -> ModuleVector:
    terms: dict = {}
    for mono, c in v._terms.items():
        _accumulate(terms, ((m, c * d) for m, d in straighten_monomial(mono)))
    return ModuleVector._raw(v.shape, v.n, {m: _normal_coeff(c) for m, c in terms.items()})


def is_straightened(v: ModuleVector) -> bool:
    return all(is_semistandard(m) for m in v._terms)


def highest_weight_vector(weight: Sequence[int], n: int) -> ModuleVector:
    """Column c holds the indices 1..height(c)."""
    shape = highest_weight(weight)
    padded(shape, n)
    mono = tuple(tuple(range(1, h + 1)) for h in conjugate(shape))
    return ModuleVector._raw(shape, n, {mono: 1})


@cache
def _act_on_monomial(i: int, j: int, mono: Columns) -> tuple[tuple[Columns, int], ...]:
    """E_ij on one semistandard monomial, by the Leibniz rule, straightened."""
    raw: dict[Columns, int] = {}
    for c, col in enumerate(mono):
        for r, x in enumerate(col):
            if x != j:
                continue
            if i != j and i in col:
                continue
            new_col = col[:r] + (i,) + col[r + 1 :]
            normal = normalize_monomial((new_col,))
            (sorted_col,), s = normal
            _accumulate(raw, [(mono[:c] + (sorted_col,) + mono[c + 1 :], s)])
    out: dict[Columns, int] = {}
    for m, c in raw.items():
        _accumulate(out, ((t, c * d) for t, d in straighten_monomial(m)))
    return tuple(out.items())


def act_E(i: int, j: int, v: ModuleVector) -> ModuleVector:
    """Action of the matrix unit E_ij, result straightened."""
    if not (1 <= i <= v.n and 1 <= j <= v.n):
        raise IndexOutOfRange(f"E_{i},{j} is not in gl({v.n})")
    terms: dict = {}
    for mono, c in v._terms.items():
        if not is_semistandard(mono):
            for m, d in straighten_monomial(mono):
                _accumulate(terms, ((t, c * d * e) for t, e in _act_on_monomial(i, j, m)))
        else:
            _accumulate(terms, ((t, c * e) for t, e in _act_on_monomial(i, j, mono)))
    return ModuleVector._raw(v.shape, v.n, terms)


def monomial_weight(mono: Columns, n: int) -> Weight:
    counts = [0] * n
    for col in mono:
        for x in col:
            counts[x - 1] += 1
    return tuple(counts)


def weight_of(v: ModuleVector) -> Weight:
    if not v:
        raise ZeroVector("the zero vector has no weight")
    weights = {monomial_weight(m, v.n) for m in v._terms}
    if len(weights) > 1:
        raise NotHomogeneous(f"vector mixes weights {sorted(weights)}")
    return weights.pop()


def embed(v: ModuleVector, n: int | None = None) -> ModuleVector:
    """Reinterpret ``v`` in the module of a larger rank (default ``v.n + 1``)."""
    n = v.n + 1 if n is None else n
    if n < v.n:
        raise ValueError(f"cannot embed rank {v.n} into smaller rank {n}")
    return ModuleVector._raw(v.shape, n, dict(v._terms))


def semistandard_monomials(weight: Sequence[int], n: int) -> list[Columns]:
    return sorted(t.columns() for t in enumerate_tableaux(weight, n))


def monomial_to_tableau(mono: Columns, n: int) -> SSYT:
    if not mono:
        return SSYT((), (), n)
    height = len(mono[0])
    rows = tuple(tuple(col[r] for col in mono if len(col) > r) for r in range(height))
    return SSYT.of(rows, n)


def cyclic_span_dimension(weight: Sequence[int], n: int) -> int:
    """Dimension of the closure of {v_lambda} under every E_ij."""
    from .linalg import EchelonBasis

    basis = EchelonBasis()
    start = highest_weight_vector(weight, n)
    basis.add(start._terms)
    queue = [start]
    while queue:
        v = queue.pop()
        for i, j in product(range(1, n + 1), repeat=2):
            w = act_E(i, j, v)
            if w and basis.add(w._terms):
                queue.append(w)
    return basis.rank


# --- exchange relations as written, for checking the quotient ---------------


def exchange_terms(
    filling: Columns, left: int, right: int, cells: Sequence[int]
) -> list[Columns]:
    """Fillings obtained by swapping the chosen cells of column ``right`` with
    every same-size set of cells of column ``left``, vertical order kept.

    Column and cell indices are 0-based; ``left < right``. The returned
    fillings are raw (unsorted).
    """
    if not 0 <= left < right < len(filling):
        raise ValidationError(f"need 0 <= left < right < {len(filling)}")
    cells = sorted(cells)
    if not cells or any(not 0 <= r < len(filling[right]) for r in cells):
        raise ValidationError(f"invalid cells {cells} for column {right}")
    out = []
    for targets in combinations(range(len(filling[left])), len(cells)):
        lcol, rcol = list(filling[left]), list(filling[right])
        for t, r in zip(targets, cells):
            lcol[t], rcol[r] = filling[right][r], filling[left][t]
        new = list(filling)
        new[left], new[right] = tuple(lcol), tuple(rcol)
        out.append(tuple(new))
    return out


def exchange_relation(
    shape: Sequence[int], n: int, filling: Columns, left: int, right: int, cells: Sequence[int]
) -> ModuleVector:
    """The element ``w - sum w'`` of the tensor product, before passing to the quotient."""
    rel = ModuleVector.monomial(shape, n, filling)
    for other in exchange_terms(filling, left, right, cells):
        rel = rel - ModuleVector.monomial(shape, n, other)
    return rel
