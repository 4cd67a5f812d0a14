import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqschubert.combinat import (
    Composition,
    Partition,
    Permutation,
    compositions_in_box,
    contains,
    fixed_point_indices,
    grassmannian_partition,
    grassmannian_permutation,
    is_grassmannian,
    iterate_sk,
    parse_sequence,
    partitions_in_box,
    reduced_word,
    reduced_words,
    staircase,
    straighten_composition,
)
from eqschubert.errors import PartTooLarge

permutations = st.integers(1, 6).flatmap(
    lambda k: st.permutations(list(range(1, k + 1))).map(lambda w: Permutation(tuple(w)))
)


def test_partition_validation_and_trailing_zeros():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert hash(Partition((2, 1, 0))) == hash(Partition((2, 1)))
    assert Partition((2, 1)).padded(4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))
    with pytest.raises(ValueError):
        Partition((1, 1, 1)).padded(2)


def test_composition():
    assert Composition((0, 2)).padded(3) == (0, 2, 0)
    assert not Composition((0, 2)).is_partition()
    with pytest.raises(ValueError):
        Composition((0, 2, 1)).padded(2)


def test_iterate_sk():
    assert [w.oneline for w in iterate_sk(1)] == [(1,)]
    assert [w.oneline for w in iterate_sk(2)] == [(1, 2), (2, 1)]
    s3 = list(iterate_sk(3))
    assert len(s3) == 6 and sum(w.sign for w in s3) == 0


def test_reduced_word_examples():
    assert reduced_word(Permutation.identity(3)) == ()
    assert reduced_word(Permutation((2, 1))) == (1,)
    assert len(reduced_word(Permutation.longest(3))) == 3


@given(permutations)
def test_reduced_word_is_reduced(w):
    word = w.reduced_word()
    assert len(word) == w.length()
    assert Permutation.from_word(word, w.k) == w


def test_all_reduced_words_of_longest_s4():
    words = reduced_words(Permutation.longest(4))
    assert len(words) == 16
    assert all(Permutation.from_word(wd, 4) == Permutation.longest(4) for wd in words)


@given(permutations, permutations)
def test_composition_convention(u, v):
    if u.k != v.k:
        return
    uv = u * v
    assert all(uv(i) == u(v(i)) for i in range(1, u.k + 1))
    assert (u * u.inverse()) == Permutation.identity(u.k)
    assert uv.sign == u.sign * v.sign


def test_staircase():
    assert staircase(1) == Partition((0,))
    assert staircase(2).parts == (1, 0)
    assert staircase(4).parts == (3, 2, 1, 0)


def test_fixed_point_indices():
    assert fixed_point_indices((), 3) == (1, 2, 3)
    assert fixed_point_indices((2, 1), 2) == (2, 4)
    assert fixed_point_indices((3, 3, 3), 3) == (4, 5, 6)


def test_grassmannian_permutation():
    assert grassmannian_permutation((), 2, 4) == Permutation.identity(4)
    assert grassmannian_permutation((1,), 1, 2) == Permutation((2, 1))
    with pytest.raises(PartTooLarge):
        grassmannian_permutation((3,), 1, 3)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (3, 5)])
def test_grassmannian_bijection(k, n):
    grass = [w for w in iterate_sk(n) if is_grassmannian(w, k)]
    lams = partitions_in_box(k, n - k)
    assert len(grass) == len(lams)
    for lam in lams:
        w = grassmannian_permutation(lam, k, n)
        assert is_grassmannian(w, k)
        assert grassmannian_partition(w, k) == lam


def test_straighten_examples():
    assert straighten_composition((1, 2)).is_zero
    out = straighten_composition((0, 2))
    assert (out.sign, out.partition) == (-1, Partition((1, 1)))
    out = straighten_composition((2, 1))
    assert (out.sign, out.partition, out.witness) == (1, Partition((2, 1)), Permutation.identity(2))


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_straighten_consistency(mu):
    out = straighten_composition(mu)
    k = len(mu)
    delta = list(range(k - 1, -1, -1))
    shifted = [m + d for m, d in zip(mu, delta)]
    if out.is_zero:
        assert len(set(shifted)) < k
        return
    lam = out.partition.padded(k)
    assert [lam[i] + delta[i] for i in range(k)] == [shifted[out.witness(i) - 1] for i in range(1, k + 1)]
    assert sum(lam) == sum(mu)


def test_contains():
    assert contains((2, 1), (1, 1))
    assert not contains((1, 1), (2, 0))
    assert contains((3, 2), (3, 2))


def test_boxes():
    assert len(partitions_in_box(3, 3)) == 20
    assert len(partitions_in_box(2, 2)) == 6
    assert len(compositions_in_box(3, 3)) == 64
    assert [c.parts for c in compositions_in_box(2, 1)] == list(itertools.product(range(2), repeat=2))


def test_parse_sequence():
    assert parse_sequence("2,1,0") == (2, 1, 0)
    assert parse_sequence("") == ()
    with pytest.raises(ValueError):
        parse_sequence("2,a")
