"""Slow, literal reference implementations used to cross-check the fast code.

Nothing here shares logic with the production modules: the crystal
operators follow the tensor-style recursion directly, and the counting and
class functions enumerate candidates by brute force.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Optional

from . import trees
from .trees import Tree


# ------------------------------------------------- crystal operator recursion

def _letter_e(a: int, i: int) -> Optional[tuple]:
    return (i,) if a == i + 1 else None


def _letter_f(a: int, i: int) -> Optional[tuple]:
    return (i + 1,) if a == i else None


@lru_cache(maxsize=None)
def e_rec(word: tuple, i: int, split: str = "first") -> Optional[tuple]:
    """``e_i`` by the recursion on ``word = uv``, splitting off one letter."""
    if not word:
        return None
    if len(word) == 1:
        return _letter_e(word[0], i)
    u, v = (word[:1], word[1:]) if split == "first" else (word[:-1], word[-1:])
    if eps_rec(u, i, split) > phi_rec(v, i, split):
        eu = e_rec(u, i, split)
        return None if eu is None else eu + v
    ev = e_rec(v, i, split)
    return None if ev is None else u + ev


@lru_cache(maxsize=None)
def f_rec(word: tuple, i: int, split: str = "first") -> Optional[tuple]:
    if not word:
        return None
    if len(word) == 1:
        return _letter_f(word[0], i)
    u, v = (word[:1], word[1:]) if split == "first" else (word[:-1], word[-1:])
    if eps_rec(u, i, split) >= phi_rec(v, i, split):
        fu = f_rec(u, i, split)
        return None if fu is None else fu + v
    fv = f_rec(v, i, split)
    return None if fv is None else u + fv


def _iterate_count(op, word: tuple, i: int, split: str) -> int:
    k = 0
    while True:
        word = op(word, i, split)
        if word is None:
            return k
        k += 1


def eps_rec(word: tuple, i: int, split: str = "first") -> int:
    return _iterate_count(e_rec, word, i, split)


def phi_rec(word: tuple, i: int, split: str = "first") -> int:
    return _iterate_count(f_rec, word, i, split)


# ------------------------------------------------------ quasi operators, literally

def _contains_pair(word: tuple, i: int) -> bool:
    n = len(word)
    return any(word[p] == i + 1 and word[q] == i for p in range(n) for q in range(p + 1, n))


def e_quasi_literal(word: tuple, i: int) -> Optional[tuple]:
    if _contains_pair(word, i):
        return None
    for p, a in enumerate(word):
        if a == i + 1:
            return word[:p] + (i,) + word[p + 1:]
    return None


def f_quasi_literal(word: tuple, i: int) -> Optional[tuple]:
    if _contains_pair(word, i):
        return None
    for p in range(len(word) - 1, -1, -1):
        if word[p] == i:
            return word[:p] + (i + 1,) + word[p + 1:]
    return None


# ---------------------------------------------------------- tree enumeration

def standard_decreasing_trees(s) -> int:
    """Count labellings of ``s`` by ``1..n`` that decrease from root to leaves."""
    n = trees.size(s)
    return sum(
        trees.is_decreasing(trees.label_shape(s, perm))
        for perm in permutations(range(1, n + 1))
    )


def right_strict_fillings(s, n: int) -> int:
    """Count labellings of ``s`` by letters ``1..n`` forming right strict search trees."""
    m = trees.size(s)
    return sum(
        trees.is_right_strict(_label_any(s, labels))
        for labels in product(range(1, n + 1), repeat=m)
    )


def _label_any(s, labels) -> Optional[Tree]:
    # labels are read in prefix order, unlike label_shape
    it = iter(labels)

    def build(t):
        if t is None:
            return None
        label = next(it)
        return Tree(label, build(t[0]), build(t[1]))

    return build(s)


# -------------------------------------------------------------- Baxter classes

def baxter_class_brute(word: tuple) -> frozenset:
    """All rearrangements of ``word`` with the same left and right insertion trees."""
    target = (trees.ltree(word), trees.rtree(word))
    return frozenset(
        p for p in set(permutations(word))
        if (trees.ltree(p), trees.rtree(p)) == target
    )


# ------------------------------------------------------------ interval labels

def intervals_constant(tree: Optional[Tree], side: str) -> bool:
    """Whether the ``a``-th interval (left or right partition) is labelled ``a`` throughout."""
    if tree is None:
        return True
    part = (trees.left_interval_partition if side == "left" else trees.right_interval_partition)(tree)
    labels = trees.infix_reading(tree)
    return all(
        labels[p - 1] == a
        for a, (start, end) in enumerate(part, start=1)
        for p in range(start, end + 1)
    )


def sylv_highest_weight_by_tree(word: tuple) -> bool:
    return intervals_constant(trees.rtree(word), "right")


def baxt_highest_weight_by_trees(word: tuple) -> bool:
    return intervals_constant(trees.ltree(word), "left") and intervals_constant(trees.rtree(word), "right")


def e_quasi_defined_by_tree(word: tuple, i: int) -> bool:
    """Tree-side test: a node ``i+1`` exists and none sits right of the topmost ``i``."""
    tree = trees.rtree(word)
    labels = trees.infix_reading(tree)
    if i + 1 not in labels:
        return False
    top = _topmost(tree, i)
    return top is None or i + 1 not in trees.infix_reading(top.right)


def _topmost(tree: Optional[Tree], label: int) -> Optional[Tree]:
    queue = [tree] if tree is not None else []
    while queue:
        nxt = []
        for t in queue:
            if t.label == label:
                return t
            nxt += [c for c in (t.left, t.right) if c is not None]
        queue = nxt
    return None
