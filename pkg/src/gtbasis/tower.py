"""Finite truncations of the gl(infinity) picture.

Nothing infinite is materialized: a basis vector indexed by an infinite
pattern is computed at the pattern's degree and carried to larger ranks by
the canonical embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinatorics import InfiniteGTPattern, GTPattern
from .errors import StabilityViolation, ValidationError
from .operators import gt_basis, gt_basis_vector
from .weyl_module import ModuleVector, embed


@dataclass(frozen=True)
class TowerVector:
    representative: ModuleVector
    base_rank: int

    def at_rank(self, n: int) -> ModuleVector:
        if n < self.base_rank:
            raise ValueError(f"rank {n} is below the base rank {self.base_rank}")
        v = self.representative
        while v.n < n:
            v = embed(v)
        return v


def stable_basis_vector(pattern: InfiniteGTPattern) -> TowerVector:
    return TowerVector(gt_basis_vector(pattern.triangle), pattern.degree)


def stability_check(pattern: InfiniteGTPattern, up_to: int) -> bool:
    """e_Lambda at rank n, embedded into rank n + 1, must equal e_Lambda computed at n + 1."""
    if up_to < pattern.degree:
        raise ValueError(f"up_to={up_to} is below the degree {pattern.degree}")
    current = gt_basis_vector(pattern.triangle)
    for n in range(pattern.degree, up_to):
        lifted = gt_basis_vector(pattern.at_rank(n + 1))
        if embed(current) != lifted:
            raise StabilityViolation(n, f"for pattern {pattern.triangle}")
        current = lifted
    return True


@dataclass(frozen=True)
class FundamentalElement:
    """A wedge monomial e_{i_1} ^ ... ^ e_{i_k} and the GT vector equal to ``scalar`` times it."""

    indices: tuple[int, ...]
    vector: ModuleVector
    pattern: GTPattern
    scalar: Fraction


def fundamental_basis(k: int, n: int) -> list[FundamentalElement]:
    """Wedge monomials with strictly increasing indices, matched to the GT basis of the k-th wedge power."""
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={n}")
    shape = (1,) * k
    by_monomial = {}
    for pattern, v in gt_basis(shape, n):
        if len(v) != 1:
            raise ValidationError(f"GT vector for {pattern} is not a single wedge monomial: {v}")
        ((mono, c),) = v.items()
        by_monomial[mono[0]] = (pattern, Fraction(c))
    out = []
    for indices in combinations(range(1, n + 1), k):
        if indices not in by_monomial:
            raise ValidationError(f"wedge monomial {indices} has no GT partner")
        pattern, scalar = by_monomial.pop(indices)
        out.append(FundamentalElement(indices, ModuleVector(shape, n, {(indices,): 1}), pattern, scalar))
    return out
