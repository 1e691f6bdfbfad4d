"""The mu_n action x -> zeta^-1 x, d -> zeta d on the Weyl algebra and its invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, Scalar, as_rational, format_rational
from .twist import untwist
from .weyl import WeylOp, recenter


class NonInvariantFlank(ValueError):
    pass


def weight(i: int, j: int, n: int) -> int:
    """Weight of x^i d^j, in 0..n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    return (j - i) % n


def weight_components(D: WeylOp, n: int) -> dict[int, WeylOp]:
    parts: dict[int, dict] = {}
    for (i, j), c in D.items():
        parts.setdefault(weight(i, j, n), {})[(i, j)] = c
    return {w: WeylOp(t) for w, t in sorted(parts.items())}


def reynolds(D: WeylOp, n: int) -> WeylOp:
    """Average over mu_n; monomials are eigenvectors, so this keeps the weight-0 terms."""
    return WeylOp({(i, j): c for (i, j), c in D.items() if weight(i, j, n) == 0})


def is_invariant(D: WeylOp, n: int) -> bool:
    return all(weight(i, j, n) == 0 for (i, j), _ in D.items())


def invariant_basis(n: int, dmax: int) -> list[WeylOp]:
    """Invariant monomials x^i d^j with i + j <= dmax, ascending by (i + j, i)."""
    return [WeylOp.monomial(i, s - i)
            for s in range(dmax + 1) for i in range(s + 1) if weight(i, s - i, n) == 0]


def retraction_check(A: WeylOp, D: WeylOp, B: WeylOp, n: int) -> bool:
    """reynolds(A D B) == A reynolds(D) B for invariant A, B."""
    for name, flank in (("A", A), ("B", B)):
        if not is_invariant(flank, n):
            raise NonInvariantFlank(f"{name} is not mu_{n}-invariant")
    return reynolds(A * D * B, n) == A * reynolds(D, n) * B


@dataclass(frozen=True)
class WeightObstruction:
    """An element outside the twisted invariant ring determined by (center, n, twist).

    Every element of that ring, untwisted and rewritten in u = x - center, has
    only weight-0 terms; ``component`` is a nonzero term of another weight.
    """

    element: str
    center: Fraction
    n: int
    twist: Poly
    weight: int
    component: WeylOp

    def __str__(self) -> str:
        where = f"u = x - {format_rational(self.center)}" if self.center else "u = x"
        tw = f" after untwisting by {self.twist}" if not self.twist.is_zero() else ""
        comp = self.component.to_str().replace("x", "u")
        return (f"{self.element} has a mu_{self.n}-weight-{self.weight} component {comp} "
                f"in {where}{tw}; the ring generated consists of weight-0 elements only")


def weight_obstruction(name: str, D: WeylOp, n: int, center: Scalar = 0,
                       p: Poly | None = None) -> WeightObstruction | None:
    """Obstruction to D lying in twist_p(translate_center(D^{mu_n})), or None if D lies there."""
    center = as_rational(center)
    p = p or Poly()
    local = recenter(untwist(D, p), center)
    for w, comp in weight_components(local, n).items():
        if w != 0:
            return WeightObstruction(name, center, n, p, w, comp)
    return None
