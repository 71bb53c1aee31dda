import pytest
from hypothesis import given, strategies as st

from crystaltrees import oracles
from crystaltrees.operators import (
    apply_script, e_crystal, e_quasi, eps_crystal, f_crystal, f_quasi,
    is_highest_weight_crystal, is_highest_weight_quasi, phi_crystal,
)
from crystaltrees.words import standardize, weight, words_over

words = st.lists(st.integers(1, 5), max_size=8).map(tuple)
labels = st.integers(1, 5)


def test_eps_and_phi_examples():
    assert eps_crystal((3, 1, 1, 1), 2) == 1
    assert eps_crystal((1, 1, 1, 1), 1) == 0
    # the leading 2s are bracketed by the trailing 1s, so nothing can be raised
    assert eps_crystal((2, 2, 1, 1), 1) == 0
    assert phi_crystal((2, 1, 1, 1), 1) == 2
    assert phi_crystal((2, 1, 1, 1), 2) == 1
    assert phi_crystal((), 5) == 0


def test_crystal_operator_examples():
    assert e_crystal((3, 1, 1, 1), 2) == (2, 1, 1, 1)
    assert e_crystal((2, 1, 1, 2), 1) == (2, 1, 1, 1)
    assert e_crystal((1, 1, 1, 1), 3) is None
    assert f_crystal((2, 1, 1, 1), 2) == (3, 1, 1, 1)
    assert f_crystal((2, 1, 1, 3), 3) == (2, 1, 1, 4)
    assert f_crystal((2, 2, 2, 2), 1) is None


def test_quasi_operator_examples():
    assert e_quasi((3, 1, 2, 3), 2) is None
    assert e_quasi((1, 2, 1, 3), 1) is None
    assert e_quasi((1, 1, 3, 3), 2) == (1, 1, 2, 3)
    assert f_quasi((3, 1, 1, 3), 1) == (3, 1, 2, 3)
    assert f_quasi((3, 1, 3, 1), 2) is None
    assert f_quasi((1, 2, 1, 2), 2) == (1, 2, 1, 3)


def test_highest_weight_examples():
    # 2 1 cancels: 2111 tops its crystal component
    assert is_highest_weight_crystal((2, 1, 1, 1))
    assert is_highest_weight_crystal(())
    hw = (1, 1, 2, 1, 3, 3, 5, 4, 3, 2)
    assert is_highest_weight_quasi(hw)
    assert not is_highest_weight_crystal(hw)
    assert e_crystal(hw, 2) is not None
    assert not is_highest_weight_quasi((5, 4, 5, 1, 7, 6, 1, 5, 2, 4))
    assert is_highest_weight_quasi((1,))


def test_crystal_operators_can_change_standardization():
    assert f_crystal((1, 3, 2, 2), 2) == (1, 3, 2, 3)
    assert standardize((1, 3, 2, 2)) != standardize((1, 3, 2, 3))
    witnesses = [
        (w, i) for w in words_over(3, 4) for i in (1, 2)
        if f_crystal(w, i) is not None and standardize(f_crystal(w, i)) != standardize(w)
    ]
    assert witnesses


def test_index_must_be_positive():
    with pytest.raises(ValueError):
        e_crystal((1, 2), 0)
    with pytest.raises(ValueError):
        f_quasi((1, 2), -1)


def test_apply_script():
    assert apply_script((1, 3, 2, 2), "f2;f1") == [(1, 3, 2, 3), (2, 3, 2, 3)]
    assert apply_script((1, 1), "e1") == [None]
    assert apply_script((1, 2, 1, 2), "F2; qF3 ;E3") == [(1, 2, 1, 3), (1, 2, 1, 4), (1, 2, 1, 3)]
    assert apply_script((1,), "") == []
    with pytest.raises(ValueError):
        apply_script((1,), "g1")
    with pytest.raises(ValueError):
        apply_script((1,), "fx")


def test_signature_rule_matches_recursion_on_longer_words():
    for w in words_over(4, 5):
        for i in (1, 2, 3):
            assert e_crystal(w, i) == oracles.e_rec(w, i)
            assert f_crystal(w, i) == oracles.f_rec(w, i)


@given(words, labels)
def test_crystal_counts_match_iteration(w, i):
    assert eps_crystal(w, i) == oracles.eps_rec(w, i)
    assert phi_crystal(w, i) == oracles.phi_rec(w, i)


@given(words, labels)
def test_one_letter_changes_by_one(w, i):
    for op, delta in ((e_crystal, -1), (f_crystal, 1), (e_quasi, -1), (f_quasi, 1)):
        out = op(w, i)
        if out is None:
            continue
        diffs = [(a, b) for a, b in zip(w, out) if a != b]
        assert len(diffs) == 1 and diffs[0][1] - diffs[0][0] == delta


@given(words, labels)
def test_mutual_inverses(w, i):
    for up, down in ((e_crystal, f_crystal), (e_quasi, f_quasi)):
        if up(w, i) is not None:
            assert down(up(w, i), i) == w
        if down(w, i) is not None:
            assert up(down(w, i), i) == w


@given(words, labels)
def test_quasi_operators_preserve_standardization(w, i):
    for op in (e_quasi, f_quasi):
        if op(w, i) is not None:
            assert standardize(op(w, i)) == standardize(w)


@given(words, labels)
def test_quasi_defined_only_if_crystal_defined(w, i):
    # the quasi graph is a subgraph of the crystal graph
    if e_quasi(w, i) is not None:
        assert e_quasi(w, i) == e_crystal(w, i)
    if f_quasi(w, i) is not None:
        assert f_quasi(w, i) == f_crystal(w, i)


@given(words, labels)
def test_raising_moves_weight_up(w, i):
    out = e_crystal(w, i)
    if out is not None:
        wt, new = list(weight(w)) + [0], list(weight(out)) + [0]
        assert new[i - 1] == wt[i - 1] + 1 and new[i] == wt[i] - 1
