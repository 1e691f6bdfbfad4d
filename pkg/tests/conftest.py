from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from weylsub import GradedPoly, Poly, WeylOp

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
nonzero_rationals = small_rationals.filter(bool)


@st.composite
def weyl_ops(draw, max_x: int = 4, max_d: int = 4, max_terms: int = 5):
    keys = draw(st.lists(st.tuples(st.integers(0, max_x), st.integers(0, max_d)),
                         max_size=max_terms, unique=True))
    return WeylOp({k: draw(small_rationals) for k in keys})


@st.composite
def polys(draw, max_deg: int = 4, max_terms: int = 4):
    keys = draw(st.lists(st.integers(0, max_deg), max_size=max_terms, unique=True))
    return Poly({k: draw(small_rationals) for k in keys})


@st.composite
def graded_polys(draw, max_x: int = 3, max_xi: int = 3, max_terms: int = 3):
    keys = draw(st.lists(st.tuples(st.integers(0, max_x), st.integers(0, max_xi)),
                         max_size=max_terms, unique=True))
    return GradedPoly({k: draw(small_rationals) for k in keys})


def random_rational(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def random_op(rng: random.Random, max_x: int, max_d: int, terms: int = 5) -> WeylOp:
    return WeylOp({(rng.randint(0, max_x), rng.randint(0, max_d)): random_rational(rng)
                   for _ in range(terms)})


def random_poly(rng: random.Random, max_deg: int, terms: int = 4) -> Poly:
    return Poly({rng.randint(0, max_deg): random_rational(rng) for _ in range(terms)})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


# one line per acceptance criterion, echoed after the run even when output is captured
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
