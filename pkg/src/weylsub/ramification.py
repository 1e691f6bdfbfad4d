"""Ramification of polynomial maps A^1 -> A^1 and the Riemann-Hurwitz count."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .poly import Poly


class UnsupportedFactorization(ValueError):
    """The derivative has a root outside Q."""


@dataclass(frozen=True)
class RamificationEntry:
    critical_value: Fraction
    points: tuple[Fraction, ...]
    indices: tuple[int, ...]
    unramified: int

    @property
    def fiber_indices(self) -> tuple[int, ...]:
        return self.indices + (1,) * self.unramified


@dataclass(frozen=True)
class RamificationProfile:
    degree: int
    entries: tuple[RamificationEntry, ...]

    @property
    def infinity_index(self) -> int:
        return self.degree


def rational_roots_with_multiplicity(f: Poly) -> list[tuple[Fraction, int]]:
    """All roots of f with multiplicities; raises if one is irrational."""
    x = sympy.Symbol("x")
    expr = sum((sympy.Rational(c.numerator, c.denominator) * x**k for k, c in f.items()),
               sympy.Integer(0))
    _, factors = sympy.factor_list(expr, x, domain=sympy.QQ)
    roots = []
    for fac, mult in factors:
        p = sympy.Poly(fac, x)
        if p.degree() == 0:
            continue
        if p.degree() > 1:
            raise UnsupportedFactorization(f"factor {fac} has no rational root")
        c1, c0 = p.all_coeffs()
        r = -sympy.Rational(c0) / sympy.Rational(c1)
        roots.append((Fraction(int(r.p), int(r.q)), int(mult)))
    return sorted(roots)


def ramification_profile(q: Poly) -> RamificationProfile:
    """Critical points of q grouped by critical value; local index = multiplicity in q' + 1."""
    d = q.degree
    if d is None or d < 1:
        raise ValueError("q must be non-constant")
    fibers: dict[Fraction, list[tuple[Fraction, int]]] = {}
    for root, mult in rational_roots_with_multiplicity(q.derivative()):
        fibers.setdefault(q(root), []).append((root, mult + 1))
    entries = []
    for value, pts in sorted(fibers.items(), key=lambda kv: min(p for p, _ in kv[1])):
        idx = tuple(e for _, e in pts)
        entries.append(RamificationEntry(value, tuple(p for p, _ in pts), idx, d - sum(idx)))
    return RamificationProfile(d, tuple(entries))


def uniform_ramified(q: Poly) -> bool:
    """All points over each critical value carry the same index, with no unramified sheet."""
    prof = ramification_profile(q)
    return all(e.unramified == 0 and len(set(e.indices)) == 1 for e in prof.entries)


def hurwitz_sides(q: Poly) -> tuple[int, int]:
    """(2g - 2 of the source P^1, -2d + ramification over A^1 + (d - 1) at infinity)."""
    prof = ramification_profile(q)
    d = prof.degree
    finite = sum(e - 1 for entry in prof.entries for e in entry.indices)
    return -2, -2 * d + finite + (prof.infinity_index - 1)


def hurwitz_check(q: Poly) -> bool:
    lhs, rhs = hurwitz_sides(q)
    return lhs == rhs


def shifted_pure_power(q: Poly) -> tuple[Fraction, Fraction, Fraction] | None:
    """(c, a, b) with q = c (x-a)^d + b, or None.  For d = 1 the center is taken as 0."""
    d = q.degree
    if d is None or d < 1:
        return None
    c = q.leading_coeff()
    a = Fraction(0) if d == 1 else -q.coeff(d - 1) / (d * c)
    b = q(a)
    if q == Poly.shifted_power(a, d) * c + b:
        return c, a, b
    return None
