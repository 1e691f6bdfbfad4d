"""Membership in D(X, Y): operators on Q[x] that preserve a subring Q[t] for a covering t(x)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import Poly, as_rational
from .weyl import WeylOp, apply


@dataclass(frozen=True)
class PurePower:
    """t = (x - a)^m."""

    a: Fraction = Fraction(0)
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        if self.m < 1:
            raise ValueError("m must be positive")

    @property
    def q(self) -> Poly:
        return Poly.shifted_power(self.a, self.m)


@dataclass(frozen=True)
class GeneralPoly:
    """t = q(x); membership is only checked on q^0 .. q^K."""

    q: Poly
    power_bound: int | None = None

    def __post_init__(self):
        if self.q.degree is None or self.q.degree < 1:
            raise ValueError("covering polynomial must be non-constant")


Covering = Union[PurePower, GeneralPoly]


@dataclass(frozen=True)
class DxyVerdict:
    member: bool
    k: int | None = None
    residue: Poly | None = None
    heuristic_bound: int | None = None

    def __bool__(self) -> bool:
        return self.member


def subring_residue(f: Poly, q: Poly) -> Poly:
    """Part of f outside Q[q].

    Expands f = sum r_i q^i with deg r_i < deg q and drops the constant terms of
    the r_i; zero iff f lies in Q[q].
    """
    residue = Poly()
    power = Poly.constant(1)
    rest = f
    while not rest.is_zero():
        rest, r = rest.divmod(q)
        r_nonconst = r - r.coeff(0)
        residue = residue + r_nonconst * power
        power = power * q
    return residue


def dxy_member(D: WeylOp, cov: Covering) -> DxyVerdict:
    """Decide whether D maps Q[t] into itself.

    For t = (x-a)^m the checks k = 0..order(D) on t^k are conclusive: writing D
    in u = x - a, the coefficient of u^(s+e) in D(u^s) is a polynomial of degree
    <= order(D) in s that must vanish at every multiple of m.  For a general t
    the answer is only certified for k <= power_bound.
    """
    if D.is_zero():
        raise ValueError("membership of the zero operator is not queried")
    if isinstance(cov, PurePower):
        ks, q, bound = range(D.order + 1), cov.q, None
    else:
        bound = cov.power_bound
        if bound is None:
            bound = D.order + cov.q.degree + 4
        ks, q = range(bound + 1), cov.q
    pk = Poly.constant(1)
    for k in ks:
        if k > 0:
            pk = pk * q
        res = subring_residue(apply(D, pk), q)
        if not res.is_zero():
            return DxyVerdict(False, k, res, bound)
    return DxyVerdict(True, heuristic_bound=bound)


def dxy_closure_check(gens, cov: Covering, samples: int = 20, seed: int = 0,
                      max_length: int = 4) -> bool:
    """Random products of member generators stay members."""
    ops = [g for _, g in gens.generators] if hasattr(gens, "generators") else list(gens)
    members = [g for g in ops if dxy_member(g, cov)]
    if not members:
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        length = rng.randint(2, max_length)
        prod = WeylOp.constant(1)
        for _ in range(length):
            prod = prod * rng.choice(members)
        if not prod.is_zero() and not dxy_member(prod, cov):
            return False
    return True
