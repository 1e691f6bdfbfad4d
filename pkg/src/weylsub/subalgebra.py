"""Membership and base computation for finitely generated subalgebras of the Weyl algebra.

The unital subalgebra generated by a set G is the linear span of all words in
G.  Words are enumerated by length up to a bound and reduced into a sparse
echelon form ordered by (order, x-degree), so the span's elements of order
<= k are exactly the rows whose leading monomial has d-exponent <= k.
Negative answers are never proofs here: exhausting the bounds gives Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .certificate import Certificate, Unknown
from .linalg import Echelon
from .poly import Poly
from .weyl import WeylOp


@dataclass(frozen=True)
class SearchBounds:
    word_length: int = 5
    x_degree_cap: int = 24
    order_cap: int = 24

    def __post_init__(self):
        for name in ("word_length", "x_degree_cap", "order_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def as_dict(self) -> dict:
        return {"word_length": self.word_length, "x_degree_cap": self.x_degree_cap,
                "order_cap": self.order_cap}


@dataclass(frozen=True)
class FilteredGenSet:
    generators: tuple[tuple[str, WeylOp], ...]

    def __post_init__(self):
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if any(g.is_zero() for _, g in self.generators):
            raise ValueError("zero generator")

    @classmethod
    def of(cls, ops: Iterable[WeylOp], prefix: str = "g") -> "FilteredGenSet":
        return cls(tuple((f"{prefix}{k}", op) for k, op in enumerate(ops, start=1)))

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.generators]

    @property
    def ops(self) -> list[WeylOp]:
        return [g for _, g in self.generators]

    def env(self) -> dict[str, WeylOp]:
        return dict(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def weyl_key(mon: tuple[int, int]) -> tuple[int, int]:
    i, j = mon
    return (j, i)


@dataclass
class WordSpan:
    """Lazily extended span of words in a generator set under fixed degree caps."""

    gens: FilteredGenSet
    x_degree_cap: int
    order_cap: int
    length: int = 0
    echelon: Echelon = field(default_factory=lambda: Echelon(weyl_key))
    words: list[tuple[int, ...]] = field(default_factory=list)
    _frontier: list[tuple[tuple[int, ...], WeylOp]] = field(default_factory=list)

    def __post_init__(self):
        one = WeylOp.constant(1)
        self.words.append(())
        self.echelon.add(one._terms, 0)
        self._frontier = [((), one)]

    def _fits(self, op: WeylOp) -> bool:
        return op.x_degree <= self.x_degree_cap and op.order <= self.order_cap

    def extend_to(self, length: int) -> None:
        ops = self.gens.ops
        while self.length < length:
            nxt = []
            for word, value in self._frontier:
                for idx, g in enumerate(ops):
                    prod = value * g
                    # x-degree and order are additive, so pruned prefixes never recover
                    if prod.is_zero() or not self._fits(prod):
                        continue
                    w = word + (idx,)
                    nxt.append((w, prod))
                    self.words.append(w)
                    self.echelon.add(prod._terms, len(self.words) - 1, len(w))
            self._frontier = nxt
            self.length += 1
            if not nxt:
                self.length = max(self.length, length)

    def certificate(self, combo: dict) -> Certificate:
        names = self.gens.names
        return Certificate.from_combination(
            {tuple(names[i] for i in self.words[label]): c for label, c in combo.items()})

    def solve(self, target: WeylOp, length: int | None = None) -> Certificate | None:
        combo = self.echelon.solve(target._terms, length)
        return None if combo is None else self.certificate(combo)


@lru_cache(maxsize=64)
def word_span(gens: FilteredGenSet, x_degree_cap: int, order_cap: int) -> WordSpan:
    return WordSpan(gens, x_degree_cap, order_cap)


def _span_for(gens: FilteredGenSet, bounds: SearchBounds) -> WordSpan:
    span = word_span(gens, bounds.x_degree_cap, bounds.order_cap)
    span.extend_to(bounds.word_length)
    return span


def member(D: WeylOp, gens: FilteredGenSet, bounds: SearchBounds = SearchBounds()):
    """Certificate expressing D through the generators, or Unknown when the bounds run out.

    Lengths are tried in increasing order, so the certificate uses the shortest
    word length that suffices.
    """
    if D.is_zero():
        raise ValueError("membership of the zero operator is not queried")
    span = word_span(gens, bounds.x_degree_cap, bounds.order_cap)
    for L in range(0, bounds.word_length + 1):
        span.extend_to(L)
        cert = span.solve(D, L)
        if cert is not None:
            return cert
    return Unknown("word span exhausted", bounds)


def verify_certificate(cert: Certificate, gens: FilteredGenSet, target: WeylOp) -> bool:
    return cert.evaluate(gens.env(), WeylOp.constant(1)) == target


def span_basis(gens: FilteredGenSet, bounds: SearchBounds, max_order: int | None = None
               ) -> list[tuple[WeylOp, Certificate]]:
    """Echelon basis of the bounded word span, ascending by leading (order, x-degree)."""
    span = _span_for(gens, bounds)
    pred = None if max_order is None else (lambda m: m[1] <= max_order)
    rows = span.echelon.basis(pred, bounds.word_length)
    return [(WeylOp(row), span.certificate(combo)) for row, combo in rows]


def base(gens: FilteredGenSet, bounds: SearchBounds = SearchBounds()) -> list[Poly]:
    """Triangular basis (by x-degree, monic) of the order-0 part of the bounded word span."""
    return [op.as_poly() for op, _ in span_basis(gens, bounds, max_order=0)]


def base_with_certificates(gens: FilteredGenSet, bounds: SearchBounds
                           ) -> list[tuple[Poly, Certificate]]:
    return [(op.as_poly(), cert) for op, cert in span_basis(gens, bounds, max_order=0)]


def reduce_modulo_span(D: WeylOp, gens: FilteredGenSet, bounds: SearchBounds
                       ) -> tuple[WeylOp, Certificate]:
    """(R, cert) with D - R = cert evaluated, R reduced against the span's leading terms."""
    span = _span_for(gens, bounds)
    rem, combo = span.echelon.remainder(D._terms, bounds.word_length)
    return WeylOp(rem), span.certificate(combo)


__all__ = [
    "SearchBounds", "FilteredGenSet", "WordSpan", "member", "base", "base_with_certificates",
    "span_basis", "reduce_modulo_span", "verify_certificate", "word_span",
]
