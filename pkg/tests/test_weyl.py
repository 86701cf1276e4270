from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afgr.errors import DomainError, RankMismatch
from afgr.weyl import (
    AffineRoot,
    Root,
    alcove_barycenter,
    bruhat_leq,
    compose,
    elements_up_to_length,
    finite_bruhat_leq,
    finite_weyl_group,
    from_word,
    identity,
    length,
    lower_interval,
    moment_image,
    perm_length,
    reduced_word,
    reflection,
    simple_reflection,
    translation,
    vadd,
)
from oracles import all_perms, bruhat_leq_subword, finite_bruhat_subword, perm_inversions, word_lengths

words = st.lists(st.integers(0, 2), max_size=7)


def test_sl2_translations_from_words():
    s01 = from_word([0, 1], 2)
    assert compose(s01, s01) == translation((2, -2))
    s10 = from_word([1, 0], 2)
    assert compose(s10, s10) == translation((-2, 2))
    assert s10 == translation((-1, 1))


def test_s0_is_affine_reflection():
    for n in (2, 3, 4):
        s0 = simple_reflection(0, n)
        assert compose(s0, s0) == identity(n)
        theta = Root(0, n - 1)
        assert reflection(AffineRoot(theta, 1), n) == s0


def test_barycenter_values():
    assert alcove_barycenter(2) == (Fraction(1, 4), Fraction(-1, 4))
    assert alcove_barycenter(3) == (Fraction(1, 3), Fraction(0), Fraction(-1, 3))


def test_length_examples():
    assert length(identity(2)) == 0
    assert length(from_word([0, 1, 0], 2)) == 3
    assert length(translation((2, -2))) == 4
    assert length(translation((1, 0, -1))) == 4


@pytest.mark.parametrize("n,max_len", [(2, 6), (3, 6), (4, 4)])
def test_length_matches_word_length(n, max_len):
    dist = word_lengths(n, max_len)
    for x, k in dist.items():
        assert length(x) == k


def test_elements_up_to_length_counts():
    assert len(elements_up_to_length(2, 4)) == 1 + 2 * 4
    assert {x for x in elements_up_to_length(3, 4)} == set(word_lengths(3, 4))


@given(words)
def test_reduced_word_roundtrip(word):
    x = from_word(word, 3)
    w = reduced_word(x)
    assert from_word(w, 3) == x
    assert len(w) == length(x)


@given(words, words)
def test_length_subadditive(a, b):
    x, y = from_word(a, 3), from_word(b, 3)
    assert length(compose(x, y)) <= length(x) + length(y)
    assert length(x.inverse()) == length(x)


@given(words)
def test_moment_image_is_interior(word):
    # barycenters never lie on a wall
    x = from_word(word, 3)
    c = moment_image(x)
    for i in range(3):
        for j in range(i + 1, 3):
            assert (c[i] - c[j]).denominator != 1


@pytest.mark.parametrize("n,max_len", [(2, 5), (3, 4)])
def test_bruhat_matches_subword_oracle(n, max_len):
    elts = elements_up_to_length(n, max_len)
    for y in elts:
        below = set(lower_interval(y))
        for x in elts:
            assert (x in below) == bruhat_leq(x, y) == bruhat_leq_subword(x, y)


def test_finite_bruhat_oracle():
    for n in (3, 4):
        for p in all_perms(n):
            assert perm_length(p) == perm_inversions(p)
            for q in all_perms(n):
                assert finite_bruhat_leq(p, q) == finite_bruhat_subword(p, q)


def test_finite_weyl_group_size():
    assert len(finite_weyl_group(4)) == 24


def test_errors():
    with pytest.raises(DomainError):
        simple_reflection(3, 3)
    with pytest.raises(RankMismatch):
        vadd((1, -1), (1, 0, -1))
    with pytest.raises(DomainError):
        length(translation((1, 0)))
    with pytest.raises(RankMismatch):
        compose(identity(2), identity(3))
