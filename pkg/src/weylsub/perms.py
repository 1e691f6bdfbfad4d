"""Permutations of {1..n} in cycle notation and the transposition test on generated subgroups."""

from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Sequence, Union

Perm = tuple[int, ...]

_CYCLE = re.compile(r"\(([^()]*)\)")


class InvalidPermutation(ValueError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def parse_permutation(text: str, n: int) -> Perm:
    """Parse ``"(1 2 3)(4 5)"`` (1-based, whitespace separated) into 0-based images."""
    stripped = text.strip()
    pos, images = 0, list(range(n))
    seen: set[int] = set()
    for match in _CYCLE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise InvalidPermutation(f"unexpected text {stripped[pos:match.start()]!r}")
        pos = match.end()
        tokens = match.group(1).split()
        try:
            points = [int(t) for t in tokens]
        except ValueError as exc:
            raise InvalidPermutation(f"non-integer point in {match.group(0)!r}") from exc
        for p in points:
            if not 1 <= p <= n:
                raise InvalidPermutation(f"point {p} outside 1..{n}")
            if p in seen:
                raise InvalidPermutation(f"point {p} repeated")
            seen.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    if stripped[pos:].strip():
        raise InvalidPermutation(f"unexpected text {stripped[pos:]!r}")
    return tuple(images)


def format_permutation(p: Perm) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, k = [], start
        while k not in seen:
            seen.add(k)
            cyc.append(k + 1)
            k = p[k]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def generate(gens: Iterable[Perm], n: int) -> set[Perm]:
    """All elements of the subgroup generated by ``gens`` (breadth-first closure)."""
    gens = [g for g in gens if g != identity(n)]
    group = {identity(n)}
    queue = deque(group)
    while queue:
        h = queue.popleft()
        for g in gens:
            k = compose(g, h)
            if k not in group:
                group.add(k)
                queue.append(k)
    return group


def is_transposition(p: Perm) -> bool:
    moved = [i for i, v in enumerate(p) if v != i]
    return len(moved) == 2


def sn_uniform(n: int, h_generators: Sequence[Union[str, Perm]]) -> bool:
    """True iff the subgroup H of S_n generated by the inputs contains no transposition.

    The divisorial inertia groups of S_n acting on A^n are the groups generated
    by single transpositions, so this is the condition that H meets each of them
    trivially.
    """
    if not 2 <= n <= 9:
        raise ValueError("n must lie in 2..9")
    perms = [parse_permutation(g, n) if isinstance(g, str) else _check(tuple(g), n)
             for g in h_generators]
    return not any(is_transposition(h) for h in generate(perms, n))


def _check(p: Perm, n: int) -> Perm:
    if sorted(p) != list(range(n)):
        raise InvalidPermutation(f"{p} is not a permutation of 0..{n - 1}")
    return p
