"""Membership certificates: rational linear combinations of words in named generators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .poly import format_rational


def _word_str(word: tuple[str, ...], commutative: bool) -> str:
    if not word:
        return "1"
    if not commutative:
        return "*".join(word)
    counts = Counter(word)
    return "*".join(n if counts[n] == 1 else f"{n}^{counts[n]}" for n in sorted(counts))


@dataclass(frozen=True)
class Certificate:
    """``sum(c * word)`` where a word is a product of generator names (empty word = 1).

    Noncommutative certificates keep factor order; commutative ones store words sorted.
    """

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]
    commutative: bool = False

    @classmethod
    def from_combination(cls, combo: Mapping[tuple[str, ...], Fraction], commutative: bool = False):
        merged: dict[tuple[str, ...], Fraction] = {}
        for word, c in combo.items():
            w = tuple(sorted(word)) if commutative else tuple(word)
            merged[w] = merged.get(w, 0) + c
        ordered = sorted(((c, w) for w, c in merged.items() if c), key=lambda t: (-len(t[1]), t[1]))
        return cls(tuple(ordered), commutative)

    def evaluate(self, env: Mapping[str, object], one: object) -> object:
        total = None
        for c, word in self.terms:
            value = one
            for name in word:
                value = value * env[name]
            value = value * c
            total = value if total is None else total + value
        return one * 0 if total is None else total

    def generators_used(self) -> set[str]:
        return {n for _, w in self.terms for n in w}

    @property
    def max_word_length(self) -> int:
        return max((len(w) for _, w in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (c, word) in enumerate(self.terms):
            neg = c < 0
            mag = -c if neg else c
            body = _word_str(word, self.commutative)
            if word and mag != 1:
                body = f"{format_rational(mag)}*{body}"
            elif not word:
                body = format_rational(mag)
            sign = ("-" if neg else "") if idx == 0 else (" - " if neg else " + ")
            parts.append(sign + body)
        return "".join(parts)


@dataclass(frozen=True)
class IdealCertificate:
    """``target = sum(multiplier_i * generator_i)`` in a commutative ring."""

    multipliers: tuple[tuple[str, object], ...]

    def evaluate(self, env: Mapping[str, object], zero: object) -> object:
        total = zero
        for name, h in self.multipliers:
            total = total + h * env[name]
        return total

    def __str__(self) -> str:
        return " + ".join(f"({h})*{name}" for name, h in self.multipliers) or "0"


@dataclass(frozen=True)
class Unknown:
    """Search exhausted its bounds without deciding."""

    reason: str
    bounds: object = None


def check(cert: Certificate, env: Mapping[str, object], one: object, target: object,
          evaluate: Callable | None = None) -> bool:
    value = cert.evaluate(env, one) if evaluate is None else evaluate(cert)
    return value == target
