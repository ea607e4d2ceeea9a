"""Incremental exact rank tracking by sparse Gaussian elimination.

Vectors are sparse dicts mapping totally ordered coordinate keys to nonzero
`Fraction`s. Each stored row is scaled so its smallest coordinate (its pivot)
has coefficient 1, and pivots are distinct across rows, so reducing a vector
means repeatedly cancelling its smallest coordinate until it is either empty
or introduces a new pivot. All arithmetic is rational: rank decisions are
exact, never a float tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable

Vector = dict[Hashable, Fraction]


class RowSpace:
    """Grows one vector at a time; `rank` is the dimension of the span.

    With track=True every stored row remembers its expansion in terms of the
    vectors that were inserted (by insertion id), so a dependent insert can
    report the exact linear combination that produces it.
    """

    def __init__(self, track: bool = False):
        self._rows: dict[Hashable, Vector] = {}  # pivot -> row (row[pivot] == 1)
        self._track = track
        self._combos: dict[Hashable, dict[int, Fraction]] = {}
        self._inserts = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Vector) -> tuple[Vector, dict[int, Fraction]]:
        residual = dict(vec)
        combo: dict[int, Fraction] = {}
        while residual:
            pivot = min(residual)
            row = self._rows.get(pivot)
            if row is None:
                break
            factor = residual[pivot]
            for key, c in row.items():
                acc = residual.get(key, Fraction(0)) - factor * c
                if acc:
                    residual[key] = acc
                else:
                    residual.pop(key, None)
            if self._track:
                for idx, c in self._combos[pivot].items():
                    acc = combo.get(idx, Fraction(0)) + factor * c
                    if acc:
                        combo[idx] = acc
                    else:
                        combo.pop(idx, None)
        return residual, combo

    def reduce(self, vec: Vector) -> Vector:
        """Normal form of `vec` modulo the current span (forward elimination)."""
        residual, _ = self._reduce(vec)
        return residual

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Vector) -> bool:
        """Insert a vector; returns True iff the rank grew."""
        grew, _ = self.add_with_witness(vec)
        return grew

    def add_with_witness(self, vec: Vector) -> tuple[bool, dict[int, Fraction]]:
        """Insert a vector.

        Returns (True, {}) when the rank grew. Returns (False, combo) when the
        vector was already in the span; with tracking enabled, combo maps
        insertion ids of previously added vectors to coefficients such that
        vec = sum(combo[i] * inserted_i). Insertion ids count every call,
        dependent or not.
        """
        insert_id = self._inserts
        self._inserts += 1
        residual, combo = self._reduce(vec)
        if not residual:
            return False, combo
        pivot = min(residual)
        lead = residual[pivot]
        row = {k: c / lead for k, c in residual.items()}
        self._rows[pivot] = row
        if self._track:
            # row = (vec - sum combo_i * inserted_i) / lead
            expansion = {insert_id: Fraction(1) / lead}
            for idx, c in combo.items():
                expansion[idx] = -c / lead
            self._combos[pivot] = expansion
        return True, {}
