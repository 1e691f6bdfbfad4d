import random

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from weylsub import InvalidPermutation, sn_uniform
from weylsub.perms import compose, format_permutation, generate, is_transposition, parse_permutation


def test_examples():
    assert sn_uniform(3, ["(1 2 3)"])
    assert not sn_uniform(3, ["(1 2)"])
    assert sn_uniform(5, [])


def test_cycle_notation_round_trip():
    p = parse_permutation("(1 2 3)(4 5)", 5)
    assert p == (1, 2, 0, 4, 3)
    assert format_permutation(p) == "(1 2 3)(4 5)"
    assert format_permutation(parse_permutation("", 4)) == "()"
    assert is_transposition(parse_permutation("(2 4)", 4))


@pytest.mark.parametrize("text", ["(1 1)", "(0 2)", "(1 6)", "(1 2", "1 2", "(a b)"])
def test_malformed_cycles(text):
    with pytest.raises(InvalidPermutation):
        parse_permutation(text, 5)


def test_size_limits():
    with pytest.raises(ValueError):
        sn_uniform(10, [])


def _random_perm(rng, n):
    img = list(range(n))
    rng.shuffle(img)
    return tuple(img)


def test_subgroups_of_s4_match_sympy():
    rng = random.Random(3)
    for _ in range(100):
        gens = [_random_perm(rng, 4) for _ in range(rng.randint(0, 2))]
        group = PermutationGroup([Permutation(list(g)) for g in gens] or [Permutation(3)])
        has_transposition = any(sorted(e.cycle_structure.items()) == [(1, 2), (2, 1)]
                                for e in group.elements)
        assert sn_uniform(4, [format_permutation(g) for g in gens]) == (not has_transposition)
        assert len(generate(gens, 4)) == group.order()


def test_composition_is_associative():
    rng = random.Random(5)
    for _ in range(50):
        a, b, c = (_random_perm(rng, 6) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
