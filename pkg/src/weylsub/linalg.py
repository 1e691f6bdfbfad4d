"""Incremental sparse semi-echelon form over Q with combination tracking.

Rows are sparse dicts ``monomial -> Fraction``; every stored row has a distinct
leading monomial (the maximum under ``key``) normalized to coefficient 1.  Each
row remembers how it was built from the labelled input vectors, which is what
turns a successful reduction into a certificate.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Hashable


def _axpy(target: dict, source: dict, factor) -> None:
    """target -= factor * source, dropping zeros."""
    for k, v in source.items():
        nv = target.get(k, 0) - factor * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Echelon:
    def __init__(self, key: Callable[[Hashable], tuple]):
        self.key = key
        self.rows: dict[Hashable, tuple[dict, dict]] = {}
        self.tags: dict[Hashable, int] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def _pivot(self, m, limit):
        if limit is not None and self.tags.get(m, 0) > limit:
            return None
        return self.rows.get(m)

    def _reduce(self, vec: dict, combo: dict, limit: int | None = None) -> Hashable | None:
        """Reduce in place; returns the surviving leading monomial or None.

        Rows tagged above ``limit`` are ignored, which replays the echelon as it
        stood when only inputs with tag <= limit had been added.
        """
        key = self.key
        heap = [(_neg(key(m)), m) for m in vec]
        heapq.heapify(heap)
        seen = set()
        while heap:
            _, m = heapq.heappop(heap)
            if m in seen or m not in vec:
                continue
            seen.add(m)
            pivot = self._pivot(m, limit)
            if pivot is None:
                return m
            row, row_combo = pivot
            factor = vec[m]
            for k in row:
                if k not in vec:
                    heapq.heappush(heap, (_neg(key(k)), k))
            _axpy(vec, row, factor)
            _axpy(combo, row_combo, factor)
        return None

    def add(self, vec: dict, label: Hashable, tag: int = 0) -> bool:
        """Insert a labelled vector; returns True when it enlarged the span.

        Tags must be non-decreasing across calls.
        """
        vec = dict(vec)
        combo = {label: Fraction(1)}
        lead = self._reduce(vec, combo, tag)
        if lead is None:
            return False
        inv = 1 / Fraction(vec[lead])
        self.rows[lead] = (
            {k: v * inv for k, v in vec.items()},
            {k: v * inv for k, v in combo.items()},
        )
        self.tags[lead] = tag
        return True

    def solve(self, vec: dict, limit: int | None = None) -> dict | None:
        """Combination of labels equal to ``vec``, or None if outside the span."""
        vec = dict(vec)
        combo: dict = {}
        if self._reduce(vec, combo, limit) is not None:
            return None
        return {k: -v for k, v in combo.items() if v}

    def remainder(self, vec: dict, limit: int | None = None) -> tuple[dict, dict]:
        """Fully reduce ``vec`` by leading monomials; returns (remainder, combination used).

        ``vec - remainder`` equals the returned combination of labels.
        """
        rem = dict(vec)
        combo: dict = {}
        key = self.key
        while True:
            candidates = [m for m in rem if self._pivot(m, limit) is not None]
            if not candidates:
                break
            m = max(candidates, key=key)
            row, row_combo = self.rows[m]
            factor = rem[m]
            _axpy(rem, row, factor)
            _axpy(combo, row_combo, factor)
        return rem, {k: -v for k, v in combo.items() if v}

    def basis(self, predicate: Callable[[Hashable], bool] | None = None,
              limit: int | None = None) -> list[tuple[dict, dict]]:
        leads = sorted(self.rows, key=self.key)
        return [self.rows[m] for m in leads
                if (predicate is None or predicate(m)) and self._pivot(m, limit) is not None]


def _neg(t: tuple) -> tuple:
    return tuple(-v for v in t)
