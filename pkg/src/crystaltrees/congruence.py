"""P/Q symbols, abstract shapes and congruence decision for plac, hypo, sylv, baxt.

Each congruence can be decided by several independent routes:

``insertion``
    equality of P-symbols (Schensted tableau, right strict tree, twin pair).
``shape``
    equal weight plus equal abstract shape of ``invert(standardize(u))``.
``rewrite``
    reachability under the defining relations of the monoid presentation.
``graph``
    pinned isomorphism of bounded (quasi-)crystal components, see
    :mod:`crystaltrees.graphs`.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from . import trees
from .trees import Shape, Tree, TwinPair
from .words import descent_set, inverse_standardization, weight

KINDS = ("plac", "hypo", "sylv", "baxt")
METHODS = ("insertion", "shape", "rewrite", "graph")

Tableau = tuple  # tuple of rows, each a tuple of ints


def _check_kind(kind: str, allowed=KINDS) -> None:
    if kind not in allowed:
        raise ValueError(f"unknown or unsupported monoid kind {kind!r}; expected one of {allowed}")


# ------------------------------------------------------------------ plactic

def schensted(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion, left to right; returns ``(P, Q)`` as tuples of rows."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, a in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([a])
                q_rows.append([step])
                break
            current = p_rows[row]
            bump = next((k for k, x in enumerate(current) if x > a), None)
            if bump is None:
                current.append(a)
                q_rows[row].append(step)
                break
            current[bump], a = a, current[bump]
            row += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def p_plac(word: Sequence[int]) -> Tableau:
    return schensted(word)[0]


def q_plac(word: Sequence[int]) -> Tableau:
    return schensted(word)[1]


# ------------------------------------------------------- sylvester / Baxter

def p_sylv(word: Sequence[int]) -> Optional[Tree]:
    return trees.insert_right_word(word)[0]


def q_sylv(word: Sequence[int]) -> Optional[Tree]:
    return trees.insert_right_word(word)[1]


def p_baxt(word: Sequence[int]) -> TwinPair:
    return TwinPair(trees.insert_left_word(word)[0], trees.insert_right_word(word)[0])


def q_baxt(word: Sequence[int]) -> tuple[Optional[Tree], Optional[Tree]]:
    return trees.insert_left_word(word)[1], trees.insert_right_word(word)[1]


def sigma_sylv(word: Sequence[int]) -> Shape:
    """Shape of the decreasing tree of ``std(u)^-1``."""
    return trees.shape(trees.dectree(inverse_standardization(word)))


def sigma_baxt(word: Sequence[int]) -> tuple[Shape, Shape]:
    """``(increasing-tree shape, decreasing-tree shape)`` of ``std(u)^-1``."""
    inv = inverse_standardization(word)
    return trees.shape(trees.inctree(inv)), trees.shape(trees.dectree(inv))


def hypo_key(word: Sequence[int]):
    """Weight and descent set of ``std(u)^-1``: determines the hypoplactic class."""
    return weight(word), descent_set(inverse_standardization(word))


# ----------------------------------------------------------------- routes

def insertion_key(word: Sequence[int], kind: str):
    """Class invariant computed by insertion; equal keys mean congruent words."""
    _check_kind(kind)
    if kind == "plac":
        return p_plac(word)
    if kind == "sylv":
        return p_sylv(word)
    if kind == "baxt":
        return p_baxt(word)
    return hypo_key(word)


def shape_key(word: Sequence[int], kind: str):
    if kind == "sylv":
        return weight(word), sigma_sylv(word)
    if kind == "baxt":
        return weight(word), sigma_baxt(word)
    if kind == "hypo":
        return hypo_key(word)
    raise ValueError(f"no shape characterization for {kind!r}")


def equiv(u: Sequence[int], v: Sequence[int], kind: str, method: str = "insertion",
          bound: Optional[int] = None) -> bool:
    """Decide ``u == v`` in the monoid ``kind`` by the chosen route."""
    _check_kind(kind)
    u, v = tuple(u), tuple(v)
    if method == "insertion":
        return insertion_key(u, kind) == insertion_key(v, kind)
    if method == "shape":
        return shape_key(u, kind) == shape_key(v, kind)
    if method == "rewrite":
        if kind == "hypo":
            raise ValueError("no rewriting system for hypo")
        return len(u) == len(v) and v in rewrite_closure(u, kind)
    if method == "graph":
        from .graphs import congruent_via_graph
        return congruent_via_graph(u, v, kind, bound)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


# ---------------------------------------------------------------- rewriting

def _swap(word: tuple, i: int) -> tuple:
    return (*word[:i], word[i + 1], word[i], *word[i + 2:])


def _plac_moves(word: tuple):
    # acb <-> cab with a <= b < c; bac <-> bca with a < b <= c
    for i in range(len(word) - 2):
        x, y, z = word[i:i + 3]
        if x != y and min(x, y) <= z < max(x, y):
            yield _swap(word, i)
        if y != z and min(y, z) < x <= max(y, z):
            yield _swap(word, i + 1)


def _sylv_moves(word: tuple):
    # c a v b <-> a c v b with a <= b < c
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if x == y:
            continue
        lo, hi = min(x, y), max(x, y)
        if any(lo <= b < hi for b in word[i + 2:]):
            yield _swap(word, i)


def _baxt_moves(word: tuple):
    # c u d a v b <-> c u a d v b with a <= b < c <= d
    # b u d a v c <-> b u a d v c with a < b <= c < d
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if x == y:
            continue
        lo, hi = min(x, y), max(x, y)
        before, after = word[:i], word[i + 2:]
        if any(
            (lo <= r < l <= hi) or (lo < l <= r < hi)
            for l in before for r in after
        ):
            yield _swap(word, i)


_MOVES = {"plac": _plac_moves, "sylv": _sylv_moves, "baxt": _baxt_moves}


def rewrite_closure(word: Sequence[int], kind: str) -> frozenset:
    """Words reachable from ``word`` by applying defining relations in any context."""
    _check_kind(kind, ("plac", "sylv", "baxt"))
    return _closure(tuple(word), kind)


@lru_cache(maxsize=65536)
def _closure(start: tuple, kind: str) -> frozenset:
    moves = _MOVES[kind]
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for nxt in moves(current):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


# ----------------------------------------------------------- factorizations

def _splits(wt: tuple, total: int):
    """All ``(a, b)`` with ``a + b == wt`` componentwise and ``sum(a) == total``."""
    for a in product(*(range(k + 1) for k in wt)):
        if sum(a) == total:
            yield a, tuple(k - x for k, x in zip(wt, a))


def canonical_reading(tree_or_pair, kind: str) -> tuple[int, ...]:
    """Postfix reading (sylv) or left-consistent reading (baxt)."""
    if kind == "sylv":
        return trees.postfix_reading(tree_or_pair)
    if kind == "baxt":
        return trees.left_consistent_reading(tree_or_pair)
    raise ValueError(f"canonical readings are defined for sylv and baxt, not {kind!r}")


_NO_FILLING = object()


def _fill_one(s, wt: tuple, strictness: str):
    # None is a legitimate (empty) filling of the empty shape
    if s is None:
        return None
    tree = trees.fill_shape(s, wt, strictness)
    return _NO_FILLING if tree is None else tree


def _fill(s, wt: tuple, kind: str):
    if kind == "sylv":
        return _fill_one(s, wt, "right")
    left = _fill_one(s[0], wt, "left")
    right = _fill_one(s[1], wt, "right")
    if left is _NO_FILLING or right is _NO_FILLING or not trees.is_twin_pair(left, right):
        return _NO_FILLING
    return TwinPair(left, right)


def _shape_size(s, kind: str) -> int:
    return trees.size(s if kind == "sylv" else s[0])


def count_factorizations(w: Sequence[int], left_shape, right_shape, kind: str = "sylv") -> int:
    """Number of pairs of canonical words ``(u, v)`` of the given shapes with ``w == uv``.

    For ``baxt`` the shapes are ``(left shape, right shape)`` pairs.
    """
    _check_kind(kind, ("sylv", "baxt"))
    w = tuple(w)
    m = _shape_size(left_shape, kind)
    if m + _shape_size(right_shape, kind) != len(w):
        return 0
    target = insertion_key(w, kind)
    count = 0
    for wu, wv in _splits(weight(w), m):
        tu = _fill(left_shape, wu, kind)
        tv = _fill(right_shape, wv, kind)
        if tu is _NO_FILLING or tv is _NO_FILLING:
            continue
        uv = canonical_reading(tu, kind) + canonical_reading(tv, kind)
        if insertion_key(uv, kind) == target:
            count += 1
    return count


# ---------------------------------------------------------------- identities

IDENTITIES = {
    # sylv: xyxy = yxxy; baxt: xyxyxy = xyyxxy
    "sylv": (("x", "y", "x", "y"), ("y", "x", "x", "y")),
    "baxt": (("x", "y", "x", "y", "x", "y"), ("x", "y", "y", "x", "x", "y")),
}


def identity_sides(kind: str, x: Sequence[int], y: Sequence[int]) -> tuple[tuple, tuple]:
    _check_kind(kind, tuple(IDENTITIES))
    values = {"x": tuple(x), "y": tuple(y)}
    lhs, rhs = IDENTITIES[kind]
    return (
        tuple(a for var in lhs for a in values[var]),
        tuple(a for var in rhs for a in values[var]),
    )


def check_identity(kind: str, x: Sequence[int], y: Sequence[int]) -> bool:
    lhs, rhs = identity_sides(kind, x, y)
    return equiv(lhs, rhs, kind, "insertion")
