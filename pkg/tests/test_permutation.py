from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from symalg import (
    DegreeLimitError,
    Permutation,
    all_permutations,
    compose,
    cycle_type,
    identity,
    inverse,
    sign,
    transposition,
)
from symalg.permutation import adjacent_word, embed

from oracles import compose_lists, inversions_sign


def perms_of(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_identity():
    assert identity(3).images == (1, 2, 3)
    assert sign(identity(5)) == 1
    p = Permutation([3, 1, 4, 2])
    assert compose(identity(4), p) == p
    with pytest.raises(ValueError):
        identity(0)


def test_compose_examples():
    assert compose(Permutation([2, 1, 3]), Permutation([1, 3, 2])) == Permutation([2, 3, 1])
    p = Permutation([2, 3, 1])
    assert compose(p, inverse(p)) == identity(3)
    # brute-force oracle on the image lists
    assert compose(p, p).images == compose_lists((2, 3, 1), (2, 3, 1)) == (3, 1, 2)
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_inverse_examples():
    assert inverse(Permutation([2, 3, 1])) == Permutation([3, 1, 2])
    t = transposition(4, 1, 3)
    assert inverse(t) == t
    p = Permutation([4, 1, 3, 2])
    assert inverse(inverse(p)) == p


def test_sign_examples():
    assert sign(Permutation([2, 1, 3])) == -1
    assert sign(Permutation([2, 3, 1])) == inversions_sign((2, 3, 1)) == 1


def test_cycle_type_examples():
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert cycle_type(Permutation([2, 3, 1])) == (3,)
    assert cycle_type(Permutation([2, 1, 4, 3])) == (2, 2)


def test_all_permutations():
    assert len(all_permutations(3)) == 6
    assert all_permutations(1) == [Permutation([1])]
    perms = all_permutations(5)
    assert len(perms) == 120 == len(set(perms))
    assert perms == sorted(perms)


def test_all_permutations_limit(monkeypatch):
    monkeypatch.setenv("SYMALG_MAX_DEGREE", "4")
    with pytest.raises(DegreeLimitError, match="n <= 4"):
        all_permutations(5)


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([])


@pytest.mark.parametrize("n", range(1, 7))
def test_sign_matches_inversion_count_and_half_are_even(n):
    perms = all_permutations(n)
    assert all(sign(p) == inversions_sign(p.images) for p in perms)
    if n >= 2:
        assert sum(1 for p in perms if sign(p) == 1) == factorial(n) // 2


@pytest.mark.parametrize("n", range(1, 6))
def test_cycle_type_is_a_class_function(n):
    perms = all_permutations(n)
    for p, q in product(perms, perms):
        assert cycle_type(q * p * inverse(q)) == cycle_type(p)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(perms_of(n), perms_of(n), perms_of(n))))
def test_group_laws(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert sign(p * q) == sign(p) * sign(q)
    assert p * inverse(p) == inverse(p) * p == identity(p.degree)
    assert sum(cycle_type(p)) == p.degree


@given(st.integers(1, 7).flatmap(perms_of))
def test_adjacent_word_reproduces_permutation(p):
    n = p.degree
    result = identity(n)
    for i in adjacent_word(p):
        result = result * transposition(n, i, i + 1)
    assert result == p


def test_transposition_sign_and_embed():
    for i, j in [(1, 2), (1, 3), (2, 4)]:
        assert sign(transposition(4, i, j)) == -1
    assert embed(Permutation([2, 1])) == Permutation([2, 1, 3])


def test_json_roundtrip():
    p = Permutation([2, 3, 1])
    assert p.to_json() == [2, 3, 1]
    assert Permutation.from_json(p.to_json()) == p
