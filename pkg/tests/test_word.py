import pytest
from hypothesis import given

from bql.word import (Word, WordSyntaxError, commutator, conjugate, cyclic_conjugates,
                      cyclically_reduce, exponent_sum, invert, multiply, reduce)

from strategies import letters

W = Word.parse


@pytest.mark.parametrize("raw, expected", [
    ([1, -1], ()),
    ([2, 1, -1, 2], (2, 2)),
    ([3, -2], (3, -2)),
    ([1, 2, -2, -1, 3], (3,)),
])
def test_reduce_examples(raw, expected):
    assert reduce(raw) == expected


def test_algebra_examples():
    assert multiply(W("1"), W("-1")) == Word()
    assert invert(W("2 -1")) == W("1 -2")
    assert conjugate(W("2 -1"), Word()) == W("2 -1")
    assert conjugate(W("1"), W("2")) == W("2 1 -2")
    assert commutator(W("1"), W("3")) == W("1 3 -1 -3")
    assert W("2 -1") ** 2 == W("2 -1 2 -1")
    assert W("2 -1") ** -1 == W("1 -2")


def test_exponent_sum_examples():
    assert exponent_sum(W("2 -1")) == 0
    assert exponent_sum(W("1 2 1")) == 3
    assert exponent_sum(Word()) == 0


def test_cyclic_conjugates_examples():
    assert cyclic_conjugates(W("1 2")) == {W("1 2"), W("2 1")}
    assert cyclic_conjugates(Word()) == {Word()}
    assert cyclic_conjugates(W("1 2 -1")) == {W("2")}
    assert cyclically_reduce(W("-3 1 2 -1 3")) == W("2")


def test_parse_and_format():
    w = W("  2 -1\t3 ")
    assert w.letters == (2, -1, 3)
    assert str(w) == "2 -1 3"
    assert W("") == Word()
    for bad in ("0", "1 0", "a", "1.5"):
        with pytest.raises(WordSyntaxError):
            W(bad)
    with pytest.raises(WordSyntaxError):
        Word([1, 0])


def test_words_are_immutable_and_hashable():
    w = W("1 2")
    with pytest.raises(AttributeError):
        w.letters = (3,)
    assert {w: 1}[W("1 2")] == 1


@given(letters(4))
def test_reduce_idempotent_and_shortening(raw):
    once = reduce(raw)
    assert reduce(once) == once
    assert len(once) <= len(raw)
    assert all(a != -b for a, b in zip(once, once[1:]))


@given(letters(4), letters(4), letters(4))
def test_multiply_associative(a, b, c):
    a, b, c = Word(a), Word(b), Word(c)
    assert (a * b) * c == a * (b * c)


@given(letters(4), letters(4))
def test_exponent_sum_homomorphism(a, b):
    a, b = Word(a), Word(b)
    assert exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b)
    assert exponent_sum(~a) == -exponent_sum(a)


@given(letters(4), letters(4))
def test_conjugation_preserves_exponent_sum(a, g):
    assert exponent_sum(conjugate(Word(a), Word(g))) == exponent_sum(Word(a))


@given(letters(4))
def test_exponent_sum_invariant_under_reduction(raw):
    assert exponent_sum(Word(raw)) == exponent_sum(raw)


@given(letters(3, 12))
def test_cyclic_conjugates_are_conjugates(raw):
    w = Word(raw)
    core = cyclically_reduce(w)
    for c in cyclic_conjugates(w):
        assert len(c) == len(core)
        assert exponent_sum(c) == exponent_sum(w)
