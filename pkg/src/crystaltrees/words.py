"""Words over the infinite ordered alphabet 1 < 2 < 3 < ...

A word is a plain ``tuple`` of positive ints. Positions are 1-indexed in
every public function that talks about positions (descents, intervals).
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]

EMPTY_WORD_TOKEN = "-"


def make_word(letters: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze a sequence of letters."""
    word = tuple(int(a) for a in letters)
    for a in word:
        if a < 1:
            raise ValueError(f"letters must be positive integers, got {a}")
    return word


def parse_word(text: str) -> tuple[int, ...]:
    """Parse the space-separated text syntax; ``-`` is the empty word.

    >>> parse_word("5 4 5 1")
    (5, 4, 5, 1)
    >>> parse_word("-")
    ()
    """
    text = text.strip()
    if text == EMPTY_WORD_TOKEN:
        return ()
    if not text:
        raise ValueError("empty string is not a word; spell the empty word '-'")
    try:
        return make_word(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"malformed word {text!r}: {exc}") from None


def format_word(word: Sequence[int]) -> str:
    if not word:
        return EMPTY_WORD_TOKEN
    return " ".join(str(a) for a in word)


def compact(word: Sequence[int]) -> str:
    """Concatenated digits, for reading small examples (``2111``)."""
    return "".join(str(a) for a in word) if word else EMPTY_WORD_TOKEN


def weight(word: Sequence[int]) -> tuple[int, ...]:
    """Letter multiplicities: entry ``i-1`` counts letter ``i``; trailing zeros trimmed."""
    if not word:
        return ()
    counts = [0] * max(word)
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


def word_of_weight(wt: Sequence[int]) -> tuple[int, ...]:
    """The unique weakly increasing word with the given weight."""
    return tuple(a for a, k in enumerate(wt, start=1) for _ in range(k))


def is_standard(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Renumber the letters 1..k, smallest letter first, equal letters left to right.

    >>> standardize((5, 4, 5, 1, 7, 6, 1, 5, 2, 4))
    (6, 4, 7, 1, 10, 9, 2, 8, 3, 5)
    """
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    result = [0] * len(word)
    for rank, pos in enumerate(order, start=1):
        result[pos] = rank
    return tuple(result)


def invert(perm: Sequence[int]) -> tuple[int, ...]:
    """Inverse of a standard word viewed as a permutation in one-line notation."""
    if not is_standard(perm):
        raise ValueError(f"not a standard word: {tuple(perm)}")
    inverse = [0] * len(perm)
    for pos, value in enumerate(perm, start=1):
        inverse[value - 1] = pos
    return tuple(inverse)


def inverse_standardization(word: Sequence[int]) -> tuple[int, ...]:
    """``invert(standardize(word))``; used everywhere shapes are computed."""
    return invert(standardize(word))


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def descent_composition(word: Sequence[int]) -> tuple[int, ...]:
    """Composition of ``len(word)`` whose partial sums are the descents."""
    if not word:
        return ()
    cuts = [0, *sorted(descent_set(word)), len(word)]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def words_over(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """All words of exactly ``length`` letters over ``1..n``, lexicographic."""
    return product(range(1, n + 1), repeat=length)


def words_up_to(n: int, max_length: int) -> Iterator[tuple[int, ...]]:
    for length in range(max_length + 1):
        yield from words_over(n, length)
