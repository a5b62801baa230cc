"""Exact sparse row reduction over the rationals.

Vectors are dicts from sortable keys to rational coefficients. Each stored
row is normalized so that its largest key (the pivot) has coefficient 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


class EchelonBasis:
    def __init__(self):
        self._rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of ``vec`` after eliminating every stored pivot."""
        vec = {k: Fraction(c) for k, c in vec.items() if c}
        while True:
            hits = [k for k in vec if k in self._rows]
            if not hits:
                return vec
            pivot = max(hits)
            factor = vec[pivot]
            for k, c in self._rows[pivot].items():
                value = vec.get(k, 0) - factor * c
                if value:
                    vec[k] = value
                else:
                    vec.pop(k, None)

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return False when it already lies in the span."""
        rest = self.reduce(vec)
        if not rest:
            return False
        pivot = max(rest)
        lead = rest[pivot]
        self._rows[pivot] = {k: c / lead for k, c in rest.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping]) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank
