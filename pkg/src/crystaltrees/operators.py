"""Kashiwara and quasi-Kashiwara operators on words.

All operators are partial: an undefined application returns ``None``. A
defined application changes exactly one letter by one.

The crystal operators follow the bracketing rule: reading left to right,
each letter ``i+1`` opens a bracket and each letter ``i`` closes one.
After cancelling matched pairs the unmatched letters read
``i ... i (i+1) ... (i+1)``; ``f_crystal`` raises the rightmost unmatched
``i`` and ``e_crystal`` lowers the leftmost unmatched ``i+1``.
"""
from __future__ import annotations

from typing import Optional, Sequence

Word = tuple[int, ...]


def _unmatched(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions (0-based) of unmatched ``i`` and unmatched ``i+1`` letters."""
    open_stack: list[int] = []  # unmatched i+1 so far
    free_i: list[int] = []
    for pos, a in enumerate(word):
        if a == i + 1:
            open_stack.append(pos)
        elif a == i:
            if open_stack:
                open_stack.pop()
            else:
                free_i.append(pos)
    return free_i, open_stack


def _replace(word: Sequence[int], pos: int, letter: int) -> Word:
    return (*word[:pos], letter, *word[pos + 1:])


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"operator index must be >= 1, got {i}")


def eps_crystal(word: Sequence[int], i: int) -> int:
    """Number of times ``e_crystal(., i)`` can be applied in succession."""
    _check_index(i)
    if not word or i >= max(word):
        return 0
    return len(_unmatched(word, i)[1])


def phi_crystal(word: Sequence[int], i: int) -> int:
    """Number of times ``f_crystal(., i)`` can be applied in succession."""
    _check_index(i)
    if not word or i > max(word):
        return 0
    return len(_unmatched(word, i)[0])


def e_crystal(word: Sequence[int], i: int) -> Optional[Word]:
    _check_index(i)
    if not word or i >= max(word):
        return None
    opened = _unmatched(word, i)[1]
    if not opened:
        return None
    return _replace(word, opened[0], i)


def f_crystal(word: Sequence[int], i: int) -> Optional[Word]:
    _check_index(i)
    if not word or i > max(word):
        return None
    free = _unmatched(word, i)[0]
    if not free:
        return None
    return _replace(word, free[-1], i + 1)


def _has_descent_pair(word: Sequence[int], i: int) -> bool:
    """True when some ``i+1`` occurs to the left of some ``i``."""
    seen_upper = False
    for a in word:
        if a == i + 1:
            seen_upper = True
        elif a == i and seen_upper:
            return True
    return False


def e_quasi(word: Sequence[int], i: int) -> Optional[Word]:
    """Lower the leftmost ``i+1`` unless the word contains a subsequence ``(i+1) i``."""
    _check_index(i)
    if i + 1 not in word or _has_descent_pair(word, i):
        return None
    return _replace(word, word.index(i + 1), i)


def f_quasi(word: Sequence[int], i: int) -> Optional[Word]:
    """Raise the rightmost ``i`` unless the word contains a subsequence ``(i+1) i``."""
    _check_index(i)
    if i not in word or _has_descent_pair(word, i):
        return None
    pos = len(word) - 1 - tuple(reversed(word)).index(i)
    return _replace(word, pos, i + 1)


def is_highest_weight_crystal(word: Sequence[int]) -> bool:
    top = max(word, default=1)
    return all(e_crystal(word, i) is None for i in range(1, top))


def is_highest_weight_quasi(word: Sequence[int]) -> bool:
    top = max(word, default=1)
    return all(e_quasi(word, i) is None for i in range(1, top))


RAISING = {"crystal": e_crystal, "quasicrystal": e_quasi}
LOWERING = {"crystal": f_crystal, "quasicrystal": f_quasi}


def apply_script(word: Sequence[int], script: str) -> list[Optional[Word]]:
    """Apply a semicolon-separated script such as ``"f2;f1;e2"``.

    Letters ``e``/``f`` select crystal operators; ``E``/``F`` (or a ``q``
    prefix, ``qf2``) select quasi-Kashiwara operators. Returns each
    intermediate result; a ``None`` entry ends the list.
    """
    results: list[Optional[Word]] = []
    current: Optional[Word] = tuple(word)
    for raw in script.split(";"):
        step = raw.strip()
        if not step:
            continue
        op = _parse_step(step)
        current = op[0](current, op[1])
        results.append(current)
        if current is None:
            break
    return results


def _parse_step(step: str):
    quasi = step[0] in "EF" or step[0] == "q"
    body = step[1:] if step[0] == "q" else step
    name, digits = body[0].lower(), body[1:]
    if name not in "ef" or not digits.isdigit():
        raise ValueError(f"malformed operator {step!r}")
    kind = "quasicrystal" if quasi else "crystal"
    fn = RAISING[kind] if name == "e" else LOWERING[kind]
    return fn, int(digits)
