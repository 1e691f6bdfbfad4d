"""Sparse exact polynomials: univariate ``Poly`` in x and commutative ``GradedPoly`` in x, xi."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """``"num/den"`` or ``"num"`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _clean(terms: Mapping) -> dict:
    return {k: as_rational(v) for k, v in terms.items() if v != 0}


def _join_terms(pieces: list[tuple[Fraction, str]], sep: str = " ") -> str:
    """Render signed (coefficient, monomial) pairs as ``a - b + c``.

    ``sep`` goes between a coefficient and its monomial: univariate polynomials
    print compactly (``2x``), operators and symbols spaced (``4 x d``).
    """
    if not pieces:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{format_rational(mag)}{sep}{mono}"
        else:
            body = format_rational(mag)
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class Poly:
    """Univariate polynomial over Q, stored as ``{exponent: coefficient}`` without zeros."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls({0: c})

    @classmethod
    def x(cls) -> "Poly":
        return cls({1: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "Poly":
        """Coefficients in ascending degree order."""
        return cls({i: c for i, c in enumerate(coeffs)})

    @classmethod
    def shifted_power(cls, a: Scalar, m: int) -> "Poly":
        """``(x - a)**m`` expanded."""
        a = as_rational(a)
        return cls({k: comb(m, k) * (-a) ** (m - k) for k in range(m + 1)})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    @property
    def degree(self) -> int | None:
        """``None`` for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    def leading_coeff(self) -> Fraction:
        return self._terms[self.degree] if self._terms else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "Poly":
        other = _coerce_poly(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly({k: c * other for k, c in self._terms.items()})
        other = _coerce_poly(other)
        out: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Poly":
        s = as_rational(scalar)
        return Poly({k: c / s for k, c in self._terms.items()})

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "Poly":
        return Poly({k - 1: k * c for k, c in self._terms.items() if k > 0})

    def __call__(self, value: Scalar) -> Fraction:
        v = as_rational(value)
        return sum((c * v**k for k, c in self._terms.items()), Fraction(0))

    def compose(self, inner: "Poly") -> "Poly":
        result = Poly()
        for k, c in self._terms.items():
            result = result + (inner**k) * c
        return result

    def taylor_shift(self, a: Scalar) -> "Poly":
        """Coefficients of ``self`` in powers of ``u = x - a`` (returned as a Poly in u)."""
        return self.compose(Poly({0: as_rational(a), 1: 1}))

    def from_shifted(self, a: Scalar) -> "Poly":
        """Inverse of :meth:`taylor_shift`: read ``self`` as a polynomial in ``x - a``."""
        return self.compose(Poly({0: -as_rational(a), 1: 1}))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, Fraction] = {}
        r = dict(self._terms)
        dq, lc = other.degree, other.leading_coeff()
        while r and max(r) >= dq:
            k = max(r)
            c = r[k] / lc
            q[k - dq] = c
            for j, b in other._terms.items():
                val = r.get(j + k - dq, 0) - c * b
                if val:
                    r[j + k - dq] = val
                else:
                    r.pop(j + k - dq, None)
        return Poly(q), Poly(r)

    def to_str(self, var: str = "x") -> str:
        pieces = [(c, _power(var, k)) for k, c in sorted(self._terms.items(), reverse=True)]
        return _join_terms(pieces, sep="")

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"


def _coerce_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


class GradedPoly:
    """Element of the commutative ring Q[x, xi]; keys are ``(x_exponent, xi_exponent)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "GradedPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, k: int, c: Scalar = 1) -> "GradedPoly":
        return cls({(i, k): c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, i: int, k: int) -> Fraction:
        return self._terms.get((i, k), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0), Fraction(0))

    @property
    def xi_degree(self) -> int | None:
        return max(k for _, k in self._terms) if self._terms else None

    @property
    def x_degree(self) -> int | None:
        return max(i for i, _ in self._terms) if self._terms else None

    @property
    def total_degree(self) -> int | None:
        return max(i + k for i, k in self._terms) if self._terms else None

    def is_xi_homogeneous(self) -> bool:
        return len({k for _, k in self._terms}) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(other)
        return isinstance(other, GradedPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "GradedPoly":
        other = _coerce_graded(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return GradedPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPoly":
        return self + (-_coerce_graded(other))

    def __rsub__(self, other) -> "GradedPoly":
        return _coerce_graded(other) - self

    def __mul__(self, other) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            return GradedPoly({key: c * other for key, c in self._terms.items()})
        other = _coerce_graded(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self._terms.items():
            for (j, l), b in other._terms.items():
                key = (i + j, k + l)
                out[key] = out.get(key, 0) + a * b
        return GradedPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GradedPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = GradedPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x0: Scalar, xi0: Scalar) -> Fraction:
        x0, xi0 = as_rational(x0), as_rational(xi0)
        return sum((c * x0**i * xi0**k for (i, k), c in self._terms.items()), Fraction(0))

    def to_str(self) -> str:
        # descending xi-degree, then descending x-degree
        ordered = sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)
        pieces = []
        for (i, k), c in ordered:
            mono = " ".join(p for p in (_power("x", i), _power("xi", k)) if p)
            pieces.append((c, mono))
        return _join_terms(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"GradedPoly({self.to_str()!r})"


def _coerce_graded(value) -> GradedPoly:
    if isinstance(value, GradedPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return GradedPoly.constant(value)
    return NotImplemented
