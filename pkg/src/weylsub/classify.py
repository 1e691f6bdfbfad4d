"""Graded cofinite subalgebras of the Weyl algebra as triples (a, m, p).

Every such subalgebra is generated by u^m and eta^m with u = x - a and
eta = d + p(x), where p is canonical: u*p has no u-exponent divisible by m.
``forward`` builds the generators from a triple; ``classify`` recovers the
triple from arbitrary generators and proves both inclusions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .certificate import Certificate, Unknown
from .invariants import WeightObstruction, weight_obstruction
from .poly import Poly, as_rational, format_rational
from .ramification import shifted_pure_power
from .subalgebra import (FilteredGenSet, SearchBounds, base_with_certificates, member,
                         reduce_modulo_span)
from .twist import canonicalize_p, is_canonical
from .weyl import WeylOp


class InconsistentBase(ValueError):
    """The smallest base element found cannot belong to any Q[(x-a)^m]."""

    def __init__(self, message: str, element: Poly, certificate: Certificate):
        super().__init__(message)
        self.element = element
        self.certificate = certificate


@dataclass(frozen=True)
class Triple:
    a: Fraction
    m: int
    p: Poly = field(default_factory=Poly)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("m must be a positive integer")
        if self.m == 1 and (self.a != 0 or not self.p.is_zero()):
            raise ValueError("m = 1 triples are normalized to a = 0, p = 0")
        if not is_canonical(self.p, self.m, self.a):
            raise ValueError("p is not canonical for (m, a)")

    @classmethod
    def normalized(cls, a, m: int, p: Poly | None = None) -> "Triple":
        """Bring arbitrary data to the canonical triple describing the same algebra."""
        p = p or Poly()
        if m == 1:
            return cls(Fraction(0), 1, Poly())
        return cls(as_rational(a), m, canonicalize_p(p, m, a)[0])

    @property
    def u(self) -> Poly:
        return Poly({0: -self.a, 1: 1})

    def as_dict(self) -> dict:
        return {"a": format_rational(self.a), "m": self.m, "p": self.p.to_str()}


def forward(t: Triple) -> FilteredGenSet:
    """Generators u^m, eta^m of the algebra described by ``t``."""
    u = WeylOp.from_poly(t.u)
    eta = WeylOp.d() + WeylOp.from_poly(t.p)
    return FilteredGenSet((("g1", u**t.m), ("g2", eta**t.m)))


@dataclass(frozen=True)
class Verification:
    """Outcome of comparing <gens> with the algebra of a triple.

    ``status`` is True (both inclusions certified), False (an obstruction
    proves the algebras differ) or None (bounds exhausted).
    """

    status: bool | None
    triple_in_gens: tuple[Certificate, ...] = ()
    gens_in_triple: tuple[Certificate, ...] = ()
    obstruction: WeightObstruction | None = None
    reason: str = ""


@dataclass(frozen=True)
class Classification:
    triple: Triple
    verification: Verification


def _base_element(gens: FilteredGenSet, bounds: SearchBounds):
    nonconst = [(f, c) for f, c in base_with_certificates(gens, bounds) if not f.is_constant()]
    if not nonconst:
        return None
    return min(nonconst, key=lambda fc: fc[0].degree)


def _smallest_subring_power(b: Poly) -> int:
    """Largest k >= 1 with b in Q[(x-a)^k] for the forced center a (k = 1 always works)."""
    d = b.degree
    a = -b.coeff(d - 1) / (d * b.leading_coeff())
    g = b.taylor_shift(a)
    exps = [s for s, _ in g.items() if s > 0]
    k = 0
    for s in exps:
        k = s if k == 0 else _gcd(k, s)
    return max(k, 1)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def extract_triple(gens: FilteredGenSet, bounds: SearchBounds = SearchBounds()):
    """Read off the candidate triple without proving the algebra equality.

    Returns a Triple or Unknown; raises InconsistentBase when the smallest base
    element found lies in no Q[(x-a)^k] with k >= 2 yet has degree >= 2.
    """
    found = _base_element(gens, bounds)
    if found is None:
        return Unknown("no non-constant base element within bounds", bounds)
    b, b_cert = found
    b = b / b.leading_coeff()
    m = b.degree
    if m == 1:
        return Triple(Fraction(0), 1)
    shape = shifted_pure_power(b)
    if shape is None:
        k = _smallest_subring_power(b)
        if k >= 2:
            return Unknown(f"smallest base element {b} lies in Q[u^{k}] but is no pure power; "
                           "smaller base elements may lie beyond the bounds", bounds)
        raise InconsistentBase(
            f"base element {b} (= {b_cert}) is not of the form c (x-a)^{m} + const: "
            f"its derivative has no root of multiplicity {m - 1}", b, b_cert)
    _, a, _ = shape
    u_d = WeylOp({(1, 1): 1, (0, 1): -a})
    rem, _ = reduce_modulo_span(u_d, gens, bounds)
    if rem.order != 0 and not rem.is_zero():
        return Unknown(f"no order-1 element with symbol (x - {format_rational(a)}) xi "
                       "within bounds", bounds)
    q = -rem.as_poly() if not rem.is_zero() else Poly()
    c = q(a)
    p_raw, r = (q - c).divmod(Poly({0: -a, 1: 1}))
    assert r.is_zero()
    return Triple.normalized(a, m, p_raw)


def _obstruction_against(triple: Triple, named_ops) -> WeightObstruction | None:
    for name, op in named_ops:
        obs = weight_obstruction(name, op, triple.m, triple.a, triple.p)
        if obs is not None:
            return obs
    return None


def verify_triple(t: Triple, gens: FilteredGenSet,
                  bounds: SearchBounds = SearchBounds()) -> Verification:
    """Check <gens> == <u^m, eta^m>.

    False is returned only with a weight obstruction: either some generator
    lies outside the twisted invariant ring containing <u^m, eta^m>, or all
    generators lie in another such ring that misses u^m or eta^m.
    """
    target = forward(t)
    obs = _obstruction_against(t, gens.generators)
    if obs is not None:
        return Verification(False, obstruction=obs, reason="a generator lies outside <u^m, eta^m>")
    try:
        candidate = extract_triple(gens, bounds)
    except InconsistentBase:
        candidate = None
    if isinstance(candidate, Triple) and candidate != t:
        if _obstruction_against(candidate, gens.generators) is None:
            named = (("u^m", target.ops[0]), ("eta^m", target.ops[1]))
            obs = _obstruction_against(candidate, named)
            if obs is not None:
                return Verification(False, obstruction=obs,
                                    reason="<gens> lies in a twisted invariant ring missing "
                                           f"{obs.element}")
    there = []
    for op in target.ops:
        cert = member(op, gens, bounds)
        if isinstance(cert, Unknown):
            return Verification(None, reason="a triple generator was not reached within bounds")
        there.append(cert)
    back = []
    for _, op in gens.generators:
        cert = member(op, target, bounds)
        if isinstance(cert, Unknown):
            return Verification(None, tuple(there),
                                reason="a generator was not reached from u^m, eta^m within bounds")
        back.append(cert)
    return Verification(True, tuple(there), tuple(back))


def classify(gens: FilteredGenSet, bounds: SearchBounds = SearchBounds()):
    """Recover the triple of <gens> with certificates for both inclusions, or Unknown."""
    if len(gens) == 0:
        raise ValueError("empty generator set")
    cand = extract_triple(gens, bounds)
    if isinstance(cand, Unknown):
        return cand
    ver = verify_triple(cand, gens, bounds)
    if ver.status is True:
        return Classification(cand, ver)
    if ver.status is False:
        return Unknown(f"candidate {cand.as_dict()} refuted: {ver.obstruction}", bounds)
    return Unknown(f"candidate {cand.as_dict()} not verified: {ver.reason}", bounds)
