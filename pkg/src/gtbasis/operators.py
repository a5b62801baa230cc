"""Lowering operators, the Gelfand-Tsetlin basis, and quantum minors of L(u) = u + E."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .combinatorics import GTPattern, enumerate_patterns, pattern_weight, weyl_dimension
from .errors import IndexOutOfRange, RankDeficient, ZeroVectorProduced
from .linalg import EchelonBasis
from .weyl_module import (
    ModuleVector,
    act_E,
    highest_weight_vector,
    monomial_weight,
)


class UPolyVector:
    """Polynomial in the spectral parameter u with module-vector coefficients.

    ``coeffs[s]`` is the coefficient of u**s; trailing zeros are dropped.
    """

    __slots__ = ("shape", "n", "coeffs")

    def __init__(self, coeffs: Sequence[ModuleVector], shape=None, n=None):
        coeffs = list(coeffs)
        if coeffs:
            shape, n = coeffs[0].shape, coeffs[0].n
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.shape, self.n = shape, n
        self.coeffs: tuple[ModuleVector, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, s: int) -> ModuleVector:
        if 0 <= s < len(self.coeffs):
            return self.coeffs[s]
        return ModuleVector(self.shape, self.n)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPolyVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: UPolyVector) -> UPolyVector:
        size = max(len(self.coeffs), len(other.coeffs))
        if not size:
            return UPolyVector([], self.shape, self.n)
        return UPolyVector([self[s] + other[s] for s in range(size)])

    def __mul__(self, scalar) -> UPolyVector:
        return UPolyVector([c * scalar for c in self.coeffs], self.shape, self.n)

    __rmul__ = __mul__

    def times_linear(self, shift) -> UPolyVector:
        """Multiply by (u + shift)."""
        if not self.coeffs:
            return self
        zero = ModuleVector(self.shape, self.n)
        up = [zero] + list(self.coeffs)
        return UPolyVector([up[s] + self[s] * shift for s in range(len(up))])

    def apply(self, i: int, j: int) -> UPolyVector:
        return UPolyVector([act_E(i, j, c) for c in self.coeffs], self.shape, self.n)

    def to_dict(self) -> dict:
        return {"coefficients": [c.to_dict() for c in self.coeffs]}


# --- lowering operators -----------------------------------------------------


def _cartan_factor(v: ModuleVector, i: int, others: Sequence[int]) -> ModuleVector:
    """Apply prod_j (E_ii - E_jj + j - i), diagonal on monomials."""
    if not others:
        return v
    terms = {}
    for mono, c in v.terms.items():
        w = monomial_weight(mono, v.n)
        scale = 1
        for j in others:
            scale *= w[i - 1] - w[j - 1] + j - i
        if scale:
            terms[mono] = c * scale
    return ModuleVector(v.shape, v.n, terms)


def lowering_z(k: int, i: int, v: ModuleVector) -> ModuleVector:
    """Apply z_{ki}: a sum over chains i < i_1 < ... < i_p < k (p = 0 included).

    Each chain contributes the word E_{i_1 i} E_{i_2 i_1} ... E_{k i_p} times
    the Cartan factors over the indices of (i, k) missing from the chain; the
    Cartan factors stand rightmost and act first.
    """
    if not 1 <= i < k <= v.n:
        raise IndexOutOfRange(f"z_{k},{i} needs 1 <= i < k <= {v.n}")
    result = ModuleVector(v.shape, v.n)
    if not v:
        return result
    middle = range(i + 1, k)
    for p in range(len(middle) + 1):
        for chain in combinations(middle, p):
            rest = [j for j in middle if j not in chain]
            w = _cartan_factor(v, i, rest)
            targets = chain + (k,)
            sources = (i,) + chain
            for a, b in reversed(list(zip(targets, sources))):
                if not w:
                    break
                w = act_E(a, b, w)
            result = result + w
    return result


def pattern_exponents(pattern: GTPattern) -> dict[tuple[int, int], int]:
    """Exponent lambda_{ki} - lambda_{k-1,i} of z_{ki}, for 1 <= i < k <= n."""
    return {
        (k, i): pattern.entry(k, i) - pattern.entry(k - 1, i)
        for k in range(2, pattern.n + 1)
        for i in range(1, k)
    }


@lru_cache(maxsize=None)
def gt_basis_vector(pattern: GTPattern) -> ModuleVector:
    """The basis vector e_Lambda, built from v_lambda by lowering operators.

    Blocks for k = 2..n are written left to right, so the k = n block acts
    first; inside block k, z_{k,k-1} acts first and z_{k1} last.
    """
    v = highest_weight_vector(pattern.weight, pattern.n)
    exps = pattern_exponents(pattern)
    for k in range(pattern.n, 1, -1):
        for i in range(k - 1, 0, -1):
            for _ in range(exps[k, i]):
                v = lowering_z(k, i, v)
    if not v:
        raise ZeroVectorProduced(f"e_Lambda vanished for pattern {pattern}")
    return v


def gt_basis(weight: Sequence[int], n: int) -> list[tuple[GTPattern, ModuleVector]]:
    """One vector per pattern, checked to be linearly independent and complete."""
    family = [(p, gt_basis_vector(p)) for p in enumerate_patterns(weight, n)]
    basis = EchelonBasis()
    for p, v in family:
        if not basis.add(v.terms):
            raise RankDeficient(f"e_Lambda for {p} lies in the span of earlier vectors")
    dim = weyl_dimension(weight, n)
    if basis.rank != dim:
        raise RankDeficient(f"rank {basis.rank} differs from dimension {dim}")
    return family


# --- quantum minors ------------------------------------------------------------


def quantum_minor_apply(m: int, v: ModuleVector) -> UPolyVector:
    """A_m(u) v as a polynomial in u.

    A_m(u) = sum_sigma sgn(sigma) L(u)_{sigma(1) 1} ... L(u-m+1)_{sigma(m) m}
    with L(u - s)_{ab} = (u - s) delta_ab + E_ab. Factors are applied from the
    right; partial products are shared between permutations that agree on the
    columns already applied, so only subsets of rows are tracked.
    """
    if not 1 <= m <= v.n:
        raise IndexOutOfRange(f"quantum minor A_{m} needs 1 <= m <= {v.n}")
    states: dict[int, UPolyVector] = {0: UPolyVector([v], v.shape, v.n)}
    for t in range(m, 0, -1):
        shift = -(t - 1)
        nxt: dict[int, UPolyVector] = {}
        for used, poly in states.items():
            if not poly:
                continue
            for r in range(1, m + 1):
                bit = 1 << (r - 1)
                if used & bit:
                    continue
                # inversions between column t and the columns to its right
                sign = -1 if bin(used & (bit - 1)).count("1") % 2 else 1
                term = poly.apply(r, t)
                if r == t:
                    term = term + poly.times_linear(shift)
                key = used | bit
                term = term * sign
                nxt[key] = nxt[key] + term if key in nxt else term
        states = nxt
    return states.get((1 << m) - 1, UPolyVector([], v.shape, v.n))


@dataclass(frozen=True)
class EigenvaluePolynomial:
    """prod_i (u + shifts[i]) with shifts[i] = lambda_{m,i} - i + 1."""

    shifts: tuple[int, ...]

    @classmethod
    def for_pattern(cls, pattern: GTPattern, m: int) -> EigenvaluePolynomial:
        return cls(tuple(pattern.entry(m, i) - i + 1 for i in range(1, m + 1)))

    def coefficients(self) -> list[int]:
        """Integer coefficients, constant term first."""
        coeffs = [1]
        for a in self.shifts:
            nxt = [0] * (len(coeffs) + 1)
            for s, c in enumerate(coeffs):
                nxt[s] += a * c
                nxt[s + 1] += c
            coeffs = nxt
        return coeffs


@dataclass
class SpectralReport:
    pattern: GTPattern
    m: int
    expected: list[int]
    status: str
    mismatched_powers: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.status == "match"

    def to_dict(self) -> dict:
        out = {"pattern": self.pattern.to_dict(), "m": self.m, "expected": self.expected, "status": self.status}
        if self.mismatched_powers:
            out["mismatched_powers"] = self.mismatched_powers
        return out


def spectral_check(pattern: GTPattern, m: int, vector: ModuleVector | None = None) -> SpectralReport:
    """Compare A_m(u) e_Lambda with the predicted eigenvalue polynomial, exactly.

    ``vector`` overrides e_Lambda, which lets callers test perturbed vectors.
    """
    if not 1 <= m <= pattern.n:
        raise IndexOutOfRange(f"m={m} outside 1..{pattern.n}")
    v = gt_basis_vector(pattern) if vector is None else vector
    expected = EigenvaluePolynomial.for_pattern(pattern, m).coefficients()
    if not v:
        # the zero vector is not an eigenvector
        return SpectralReport(pattern, m, expected, "mismatch", list(range(len(expected))))
    got = quantum_minor_apply(m, v)
    bad = [
        s
        for s in range(max(len(expected), len(got.coeffs)))
        if got[s] != v * (expected[s] if s < len(expected) else 0)
    ]
    return SpectralReport(pattern, m, expected, "mismatch" if bad else "match", bad)


@dataclass
class CentralityResult:
    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def gz_centrality_check(m: int, i: int, samples: Sequence[ModuleVector]) -> CentralityResult:
    """Check that a_{mi}, the u^{m-i} coefficient of A_m(u), commutes with E_pq for p, q <= m.

    On failure the witness is ``(p, q, sample_index)``.
    """
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"coefficient index {i} outside 1..{m}")
    power = m - i
    for idx, v in enumerate(samples):
        central_v = quantum_minor_apply(m, v)[power]
        for p in range(1, m + 1):
            for q in range(1, m + 1):
                lhs = quantum_minor_apply(m, act_E(p, q, v))[power]
                rhs = act_E(p, q, central_v)
                if lhs != rhs:
                    return CentralityResult(False, (p, q, idx))
    return CentralityResult(True)


def eigenvalue_signature(pattern: GTPattern) -> tuple[tuple[int, ...], ...]:
    """Eigenvalue polynomials of A_1 .. A_n on e_Lambda, as coefficient tuples."""
    return tuple(tuple(EigenvaluePolynomial.for_pattern(pattern, m).coefficients()) for m in range(1, pattern.n + 1))


def check_pattern_weight(pattern: GTPattern) -> bool:
    from .weyl_module import weight_of

    return weight_of(gt_basis_vector(pattern)) == pattern_weight(pattern)
