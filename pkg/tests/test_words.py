import pytest
from hypothesis import given, strategies as st

from crystaltrees.words import (
    compact, descent_composition, descent_set, format_word, invert, inverse_standardization,
    is_standard, make_word, parse_word, standardize, weight, word_of_weight, words_over,
    words_up_to,
)

words = st.lists(st.integers(1, 6), max_size=9).map(tuple)


def test_parse_and_format_round_trip():
    assert parse_word("5 4 5 1") == (5, 4, 5, 1)
    assert parse_word(" 10 2 ") == (10, 2)
    assert parse_word("-") == ()
    assert format_word(()) == "-"
    assert format_word((6, 10, 2)) == "6 10 2"
    assert compact((2, 1, 1, 1)) == "2111"


@pytest.mark.parametrize("bad", ["", "1 0", "1 -3", "a b", "1.5"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_make_word_rejects_nonpositive():
    with pytest.raises(ValueError):
        make_word([1, 0])


def test_weight():
    assert weight(()) == ()
    assert weight((2, 1, 1, 1)) == (3, 1)
    assert weight(parse_word("1 1 2 4 4 5 5 5 6 7")) == (2, 1, 0, 2, 3, 1, 1)
    assert word_of_weight((2, 1, 0, 2)) == (1, 1, 2, 4, 4)


def test_standardize_worked_example():
    assert standardize((5, 4, 5, 1, 7, 6, 1, 5, 2, 4)) == (6, 4, 7, 1, 10, 9, 2, 8, 3, 5)
    assert standardize(()) == ()
    assert standardize((1, 2, 2, 1)) == (1, 3, 4, 2)


def test_invert():
    assert invert((6, 4, 7, 1, 10, 9, 2, 8, 3, 5)) == (4, 7, 9, 2, 10, 1, 3, 8, 6, 5)
    assert invert((1, 2, 3)) == (1, 2, 3)
    assert invert((1, 3, 4, 2)) == (1, 4, 2, 3)
    with pytest.raises(ValueError):
        invert((1, 1))


def test_descents():
    assert descent_set((1, 4, 2, 3)) == {2}
    assert descent_set((1, 2, 3, 4)) == set()
    assert descent_set((4, 3, 2, 1)) == {1, 2, 3}
    assert descent_composition((1, 4, 2, 3)) == (2, 2)
    assert descent_composition((1, 2, 3, 4)) == (4,)
    assert descent_composition(()) == ()


def test_enumeration_counts():
    assert len(list(words_over(3, 4))) == 81
    assert len(list(words_up_to(3, 3))) == 1 + 3 + 9 + 27
    assert len(set(words_up_to(2, 4))) == 31


@given(words)
def test_standardization_is_a_permutation_preserving_order(w):
    s = standardize(w)
    assert is_standard(s)
    for p in range(len(w)):
        for q in range(p + 1, len(w)):
            # equal letters are numbered left to right
            assert (s[p] < s[q]) == (w[p] <= w[q])


@given(words)
def test_standardization_idempotent_and_inverse_involutive(w):
    s = standardize(w)
    assert standardize(s) == s
    assert invert(invert(s)) == s
    assert inverse_standardization(w) == invert(s)


@given(words)
def test_descent_composition_sums_to_length(w):
    assert sum(descent_composition(w)) == len(w)
