"""First Weyl algebra Q<x, d> with relation d*x - x*d = 1, kept in normal form sum c x^i d^j."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm, perm
from typing import Iterator, Mapping

from .poly import GradedPoly, Poly, Scalar, _clean, _join_terms, _power

# order of the zero operator
NEG_INF = float("-inf")


@lru_cache(maxsize=4096)
def _reorder(j: int, k: int) -> tuple[tuple[int, int], ...]:
    """Coefficients of d^j x^k = sum_t C(j,t) k!/(k-t)! x^(k-t) d^(j-t), as (t, coeff)."""
    return tuple((t, comb(j, t) * perm(k, t)) for t in range(min(j, k) + 1))


class WeylOp:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "WeylOp":
        op = cls.__new__(cls)
        op._terms = terms
        op._hash = None
        return op

    @classmethod
    def constant(cls, c: Scalar) -> "WeylOp":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "WeylOp":
        return cls({(1, 0): 1})

    @classmethod
    def d(cls) -> "WeylOp":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "WeylOp":
        return cls({(i, j): c})

    @classmethod
    def from_poly(cls, f: Poly) -> "WeylOp":
        return cls({(k, 0): c for k, c in f.items()})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def order(self):
        return max(j for _, j in self._terms) if self._terms else NEG_INF

    @property
    def x_degree(self) -> int | None:
        return max(i for i, _ in self._terms) if self._terms else None

    def coefficient_poly(self, j: int) -> Poly:
        """The function multiplying d^j."""
        return Poly({i: c for (i, jj), c in self._terms.items() if jj == j})

    def symbol(self) -> GradedPoly:
        if not self._terms:
            return GradedPoly()
        top = self.order
        return GradedPoly({(i, j): c for (i, j), c in self._terms.items() if j == top})

    def is_function(self) -> bool:
        return all(j == 0 for _, j in self._terms)

    def as_poly(self) -> Poly:
        if not self.is_function():
            raise ValueError("operator has positive order")
        return self.coefficient_poly(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylOp.constant(other)
        elif isinstance(other, Poly):
            other = WeylOp.from_poly(other)
        return isinstance(other, WeylOp) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "WeylOp":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return WeylOp._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "WeylOp":
        return WeylOp._raw({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "WeylOp":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "WeylOp":
        return _coerce(other) - self

    def scale(self, c: Scalar) -> "WeylOp":
        if c == 0:
            return WeylOp()
        return WeylOp._raw({key: v * c for key, v in self._terms.items()})

    def __mul__(self, other) -> "WeylOp":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        # integer arithmetic over a common denominator; one Fraction per output term
        lhs, den_l = _integral(self._terms)
        rhs, den_r = _integral(other._terms)
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in lhs:
            for (k, l), b in rhs:
                ab = a * b
                for t, n in _reorder(j, k):
                    key = (i + k - t, j + l - t)
                    out[key] = out.get(key, 0) + ab * n
        den = den_l * den_r
        return WeylOp._raw({key: Fraction(c, den) for key, c in out.items() if c})

    def __rmul__(self, other) -> "WeylOp":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return _coerce(other) * self

    def __pow__(self, e: int) -> "WeylOp":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = WeylOp.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, f: Poly) -> Poly:
        return apply(self, f)

    def to_str(self) -> str:
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)
        pieces = []
        for (i, j), c in ordered:
            mono = " ".join(p for p in (_power("x", i), _power("d", j)) if p)
            pieces.append((c, mono))
        return _join_terms(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"WeylOp({self.to_str()!r})"


def _integral(terms: dict) -> tuple[list, int]:
    den = lcm(*(c.denominator for c in terms.values())) if terms else 1
    return [(key, c.numerator * (den // c.denominator)) for key, c in terms.items()], den


def _coerce(value):
    if isinstance(value, WeylOp):
        return value
    if isinstance(value, (int, Fraction)):
        return WeylOp.constant(value)
    if isinstance(value, Poly):
        return WeylOp.from_poly(value)
    return NotImplemented


def add(D: WeylOp, E: WeylOp) -> WeylOp:
    return D + E


def mul(D: WeylOp, E: WeylOp) -> WeylOp:
    return D * E


def commutator(D: WeylOp, E: WeylOp) -> WeylOp:
    return D * E - E * D


def order(D: WeylOp):
    """Top d-exponent; ``-inf`` for the zero operator."""
    return D.order


def symbol(D: WeylOp) -> GradedPoly:
    return D.symbol()


def apply(D: WeylOp, f: Poly) -> Poly:
    """Action of D on Q[x]."""
    out: dict[int, Fraction] = {}
    for (i, j), c in D._terms.items():
        for k, a in f.items():
            if k < j:
                continue
            key = i + k - j
            out[key] = out.get(key, 0) + c * a * perm(k, j)
    return Poly(out)


def ad_power(f: Poly, D: WeylOp, k: int) -> WeylOp:
    """k-fold iterated commutator [f, [f, ... [f, D]]]."""
    if k < 0:
        raise ValueError("k must be non-negative")
    F = WeylOp.from_poly(f)
    for _ in range(k):
        if D.is_zero():
            break
        D = commutator(F, D)
    return D


def from_coefficients(coeffs: dict[int, Poly]) -> WeylOp:
    """Assemble sum_j coeffs[j](x) d^j."""
    return WeylOp({(i, j): c for j, f in coeffs.items() for i, c in f.items()})


def coefficients(D: WeylOp) -> dict[int, Poly]:
    """Split D = sum_j c_j(x) d^j."""
    orders = sorted({j for _, j in D._terms})
    return {j: D.coefficient_poly(j) for j in orders}


def recenter(D: WeylOp, a: Scalar) -> WeylOp:
    """Rewrite D in the coordinate u = x - a (d_x = d_u); the result is read with x as u."""
    if a == 0:
        return D
    return from_coefficients({j: f.taylor_shift(a) for j, f in coefficients(D).items()})


def uncenter(D: WeylOp, a: Scalar) -> WeylOp:
    """Inverse of :func:`recenter`."""
    if a == 0:
        return D
    return from_coefficients({j: f.from_shifted(a) for j, f in coefficients(D).items()})
