"""Subalgebras of the commutative symbol ring Q[x, xi]: membership and cofiniteness."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

import sympy

from .certificate import Certificate, IdealCertificate
from .linalg import Echelon
from .poly import GradedPoly
from .weyl import WeylOp


@dataclass(frozen=True)
class GradedGenSet:
    """Named generators with constant terms removed (the subalgebra is unital)."""

    generators: tuple[tuple[str, GradedPoly], ...]

    def __post_init__(self):
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        stripped = []
        for name, g in self.generators:
            g = g - g.constant_term()
            if not g.is_zero():
                stripped.append((name, g))
        object.__setattr__(self, "generators", tuple(stripped))

    @classmethod
    def of(cls, polys: Sequence[GradedPoly], prefix: str = "g") -> "GradedGenSet":
        return cls(tuple((f"{prefix}{k}", g) for k, g in enumerate(polys, start=1)))

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.generators]

    def env(self) -> dict[str, GradedPoly]:
        return dict(self.generators)


@dataclass(frozen=True)
class NotMember:
    reason: str


def common_weight(polys: Sequence[GradedPoly]) -> tuple[int, int] | None:
    """Positive integer weights (w_x, w_xi) making every poly homogeneous, if any exist."""
    direction = None
    for g in polys:
        mons = [m for m, _ in g.items()]
        base = mons[0]
        for (i, k) in mons[1:]:
            a, b = i - base[0], k - base[1]
            g_ = gcd(a, b)
            a, b = a // g_, b // g_
            if a < 0:
                a, b = -a, -b
            if direction is None:
                direction = (a, b)
            elif direction != (a, b):
                return None
    if direction is None:
        return (1, 1)
    a, b = direction
    if a == 0 or b >= 0:
        return None
    return (-b, a)


def _weighted_products(gens: GradedGenSet, w: tuple[int, int], targets: set[int]):
    """Exponent vectors whose product has weighted degree in ``targets``."""
    weights = []
    for _, g in gens.generators:
        (i, k), _ = next(g.items())
        weights.append(w[0] * i + w[1] * k)
    top = max(targets, default=0)
    n = len(weights)
    out = []

    def rec(idx: int, acc: list[int], total: int):
        if idx == n:
            if total in targets:
                out.append(tuple(acc))
            return
        e = 0
        while total + e * weights[idx] <= top:
            rec(idx + 1, acc + [e], total + e * weights[idx])
            e += 1

    rec(0, [], 0)
    return out


def _preference(exps: tuple[int, ...], names: list[str]):
    factors = sum(exps)
    distinct = sum(1 for e in exps if e)
    word = tuple(n for n, e in zip(names, exps) for _ in range(e))
    return (factors, distinct, word)


def graded_member(h: GradedPoly, gens: GradedGenSet):
    """Decide h in Q[gens]; returns a Certificate or NotMember.

    With a common positive weight grading, every product that can contribute
    has weighted degree equal to one of h's monomials, so the enumeration is
    finite and the answer exact.  Otherwise an elimination Groebner basis
    decides.
    """
    if h.is_zero():
        raise ValueError("membership of zero is not queried")
    c0 = h.constant_term()
    rest = h - c0
    if rest.is_zero():
        return Certificate(((c0, ()),), commutative=True)
    polys = [g for _, g in gens.generators]
    if not polys:
        return NotMember("no non-constant generators")
    w = common_weight(polys)
    if w is None:
        return _groebner_member(h, gens)
    names = gens.names
    targets = {w[0] * i + w[1] * k for (i, k), _ in rest.items()}
    candidates = sorted(_weighted_products(gens, w, targets), key=lambda e: _preference(e, names))
    ech = Echelon(lambda m: (m[0] + m[1], m[1], m[0]))
    for exps in candidates:
        value = GradedPoly.constant(1)
        for g, e in zip(polys, exps):
            if e:
                value = value * g**e
        ech.add(value._terms, exps)
    combo = ech.solve(rest._terms)
    if combo is None:
        return NotMember(f"no combination of products of weighted degree {sorted(targets)} "
                         f"(weights {w}) reaches the target")
    words = {tuple(n for n, e in zip(names, exps) for _ in range(e)): c for exps, c in combo.items()}
    if c0:
        words[()] = words.get((), 0) + c0
    return Certificate.from_combination(words, commutative=True)


def _to_sympy(g: GradedPoly, x, xi):
    return sum((sympy.Rational(c.numerator, c.denominator) * x**i * xi**k
                for (i, k), c in g.items()), sympy.Integer(0))


def _groebner_member(h: GradedPoly, gens: GradedGenSet):
    x, xi = sympy.symbols("x xi")
    ys = sympy.symbols(f"y0:{len(gens.generators)}")
    rels = [y - _to_sympy(g, x, xi) for y, (_, g) in zip(ys, gens.generators)]
    basis = sympy.groebner(rels, x, xi, *ys, order="lex", domain=sympy.QQ)
    _, r = basis.reduce(_to_sympy(h, x, xi))
    r = sympy.expand(r)
    if r.free_symbols & {x, xi}:
        return NotMember("elimination normal form still involves x or xi")
    names = gens.names
    words = {}
    for exps, c in sympy.Poly(r, *ys).terms():
        word = tuple(n for n, e in zip(names, exps) for _ in range(e))
        words[word] = Fraction(int(c.p), int(c.q))
    return Certificate.from_combination(words, commutative=True)


def verify_graded_certificate(cert: Certificate, gens: GradedGenSet, target: GradedPoly) -> bool:
    return cert.evaluate(gens.env(), GradedPoly.constant(1)) == target


class Status(str, enum.Enum):
    COFINITE = "Cofinite"
    NOT_COFINITE = "NotCofinite"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CofinitenessVerdict:
    status: Status
    nullstellensatz_degree: int | None = None
    witness: tuple[Fraction, Fraction] | None = None
    certificate: IdealCertificate | None = None
    base_generator: str | None = None
    reason: str = ""


def _ideal_echelon(G: list[tuple[str, GradedPoly]], max_degree: int) -> Echelon:
    ech = Echelon(lambda m: (m[0] + m[1], m[1], m[0]))
    for name, g in G:
        room = max_degree - g.total_degree
        for s in range(room + 1):
            for a in range(s + 1):
                mono = GradedPoly.monomial(a, s - a)
                ech.add((mono * g)._terms, (name, a, s - a))
    return ech


def _rational_roots(polys: list[sympy.Expr], var) -> list[Fraction]:
    polys = [p for p in polys if p != 0]
    if not polys:
        return [Fraction(0)]
    common = reduce(sympy.gcd, polys)
    roots = sympy.roots(sympy.Poly(common, var), filter="Q")
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


def cofinite_check(gens: GradedGenSet, max_degree: int = 20) -> CofinitenessVerdict:
    """Decide whether Q[x, xi] is a finite module over the subalgebra generated by ``gens``.

    Grading by xi-degree, the subalgebra is cofinite when its xi-degree-0 part
    contains a non-constant polynomial and the positive-degree generators have
    no common zero off the zero section {xi = 0}; the latter is certified by
    xi^N lying in their ideal.  A common zero (x0, xi0) with xi0 != 0 spans a
    whole line of common zeros, which rules cofiniteness out.
    """
    polys = [g for _, g in gens.generators]
    if any(not g.is_xi_homogeneous() for g in polys):
        return CofinitenessVerdict(Status.UNKNOWN, reason="generators must be homogeneous in xi")
    if polys and max_degree < max(g.total_degree for g in polys):
        raise ValueError("max_degree must be at least the largest generator degree")
    F = [(n, g) for n, g in gens.generators if g.xi_degree == 0]
    G = [(n, g) for n, g in gens.generators if g.xi_degree > 0]
    base_gen = F[0][0] if F else None
    if base_gen is None:
        return CofinitenessVerdict(Status.NOT_COFINITE, witness=(Fraction(1), Fraction(0)),
                                   reason="no non-constant generator of order 0")
    if G:
        ech = _ideal_echelon(G, max_degree)
        for N in range(1, max_degree + 1):
            combo = ech.solve({(0, N): Fraction(1)})
            if combo is not None:
                mult: dict[str, GradedPoly] = {}
                for (name, a, b), c in combo.items():
                    mult[name] = mult.get(name, GradedPoly()) + GradedPoly.monomial(a, b, c)
                cert = IdealCertificate(tuple((n, mult[n]) for n, _ in G if n in mult))
                return CofinitenessVerdict(Status.COFINITE, N, certificate=cert,
                                           base_generator=base_gen)
    x = sympy.Symbol("x")
    xi = sympy.Symbol("xi")
    sliced = [_to_sympy(g, x, xi).subs(xi, 1) for _, g in G]
    roots = _rational_roots(sliced, x)
    if roots:
        # prefer a zero of every generator; otherwise (x0, 1) still spans the
        # line {x = x0}, which lies in a single fiber of the quotient map
        common = [r for r in roots if all(g.evaluate(r, 0) == 0 for _, g in F)]
        pool = common or roots
        x0 = Fraction(0) if Fraction(0) in pool else pool[0]
        reason = ("all generators vanish at the witness" if common else
                  "positive-order generators vanish on the line x = x0, an infinite fiber")
        return CofinitenessVerdict(Status.NOT_COFINITE, witness=(x0, Fraction(1)),
                                   base_generator=base_gen, reason=reason)
    return CofinitenessVerdict(Status.UNKNOWN, base_generator=base_gen,
                               reason=f"no certificate with N <= {max_degree} and no rational witness")


def graded_generators(ops: Sequence[WeylOp], word_length: int) -> list[GradedPoly]:
    """Symbols of an echelon basis of the span of words of length <= word_length.

    Taking symbols after forming combinations matters: x^2 and d^2 alone have
    symbols x^2, xi^2, but a commutator of them has symbol 4 x xi.
    """
    from .subalgebra import FilteredGenSet, SearchBounds, span_basis

    if word_length < 1:
        raise ValueError("word_length must be at least 1")
    gens = FilteredGenSet.of(ops)
    x_cap = max(1, word_length * max(op.x_degree for op in ops))
    o_cap = max(1, word_length * max(op.order for op in ops))
    rows = span_basis(gens, SearchBounds(word_length, x_cap, o_cap))
    seen, out = set(), []
    for op, _ in rows:
        s = op.symbol()
        if s.total_degree == 0 or s in seen:
            continue
        seen.add(s)
        out.append(s)
    return sorted(out, key=lambda s: (s.xi_degree, s.x_degree, s.to_str()))


__all__ = ["GradedGenSet", "NotMember", "graded_member", "cofinite_check", "graded_generators",
           "CofinitenessVerdict", "Status"]
