"""The automorphisms d -> d + p(x), traces for t = (x-a)^m, and the canonical form of p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, Scalar, as_rational
from .weyl import WeylOp, coefficients


def twist(D: WeylOp, p: Poly) -> WeylOp:
    """Substitute d -> d + p in the normal form of D; functions are fixed."""
    if p.is_zero():
        return D
    eta = WeylOp.d() + WeylOp.from_poly(p)
    result = WeylOp()
    power, k = WeylOp.constant(1), 0
    for j, c in sorted(coefficients(D).items()):
        while k < j:
            power = power * eta
            k += 1
        result = result + WeylOp.from_poly(c) * power
    return result


def untwist(D: WeylOp, p: Poly) -> WeylOp:
    return twist(D, -p)


def trace_poly(f: Poly, m: int, a: Scalar = 0) -> Poly:
    """Trace from Q(x) down to Q((x-a)^m), restricted to polynomials.

    In the expansion by u = x - a, u^s maps to m*u^s when m divides s and to 0
    otherwise.
    """
    _check_m(m)
    g = f.taylor_shift(a)
    kept = Poly({s: m * c for s, c in g.items() if s % m == 0})
    return kept.from_shifted(a)


def derivation_t(f: Poly, m: int, a: Scalar = 0) -> Poly:
    """d/dt with t = (x-a)^m, i.e. u^s -> (s/m) u^(s-m); f must stay polynomial."""
    _check_m(m)
    g = f.taylor_shift(a)
    out = {}
    for s, c in g.items():
        if s == 0:
            continue
        if s < m:
            raise ValueError(f"d/dt of u^{s} is not a polynomial for m={m}")
        out[s - m] = c * Fraction(s, m)
    return Poly(out).from_shifted(a)


def lattice_form(r: Poly, m: int, a: Scalar = 0) -> Poly:
    """m u^(m-1) r(u^m): the pullback of r(t) dt, which twists D(X, Y) into itself."""
    _check_m(m)
    u_poly = Poly({m * k + m - 1: m * c for k, c in r.items()})
    return u_poly.from_shifted(a)


def canonicalize_p(p: Poly, m: int, a: Scalar = 0) -> tuple[Poly, Poly]:
    """Split p = p_canon + m u^(m-1) r(u^m) so that u*p_canon has no u-exponent divisible by m.

    Returns ``(p_canon, r)`` with r a polynomial in t = u^m.
    """
    _check_m(m)
    g = p.taylor_shift(a)
    canon, r = {}, {}
    for s, c in g.items():
        if (s + 1) % m == 0:
            r[(s + 1) // m - 1] = c / m
        else:
            canon[s] = c
    return Poly(canon).from_shifted(a), Poly(r)


def is_canonical(p: Poly, m: int, a: Scalar = 0) -> bool:
    return all((s + 1) % m for s, _ in p.taylor_shift(a).items())


@dataclass(frozen=True)
class TwistForm:
    """The 1-form p(x) dx measured against the covering t = (x-a)^m."""

    p: Poly
    a: Fraction = Fraction(0)
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        _check_m(self.m)

    @property
    def canonical(self) -> bool:
        return is_canonical(self.p, self.m, self.a)

    def canonicalized(self) -> "TwistForm":
        return TwistForm(canonicalize_p(self.p, self.m, self.a)[0], self.a, self.m)


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
