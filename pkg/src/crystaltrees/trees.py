"""Binary search trees, recording trees, readings, canopies and twin pairs.

Labelled trees are immutable :class:`Tree` nodes with ``None`` standing for
the empty tree. Unlabelled shapes are nested pairs ``(left, right)`` with
``None`` for the empty shape, so they hash and compare structurally.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Optional, Sequence

from .words import word_of_weight

Shape = Optional[tuple]  # None | (Shape, Shape)


@dataclass(frozen=True)
class Tree:
    label: int
    left: Optional["Tree"] = None
    right: Optional["Tree"] = None

    def __repr__(self) -> str:
        if self.left is None and self.right is None:
            return f"Tree({self.label})"
        return f"Tree({self.label}, {self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class TwinPair:
    """A left strict tree and a right strict tree with a common infix reading."""
    left: Optional[Tree]
    right: Optional[Tree]


# ---------------------------------------------------------------- insertion

def _insert(tree: Optional[Tree], a: int, strict_left: bool) -> tuple[Tree, tuple[bool, ...]]:
    """Leaf insertion; returns the new tree and the path (True = went right)."""
    if tree is None:
        return Tree(a), ()
    go_right = a >= tree.label if strict_left else a > tree.label
    if go_right:
        sub, path = _insert(tree.right, a, strict_left)
        return Tree(tree.label, tree.left, sub), (True, *path)
    sub, path = _insert(tree.left, a, strict_left)
    return Tree(tree.label, sub, tree.right), (False, *path)


def _graft(tree: Optional[Tree], path: tuple[bool, ...], label: int) -> Tree:
    if tree is None:
        if path:
            raise ValueError("path leaves the tree")
        return Tree(label)
    if not path:
        raise ValueError("path ends at an occupied node")
    if path[0]:
        return Tree(tree.label, tree.left, _graft(tree.right, path[1:], label))
    return Tree(tree.label, _graft(tree.left, path[1:], label), tree.right)


def leaf_insert_left(tree: Optional[Tree], a: int) -> Tree:
    """``T <- a``: equal labels go right, keeping the tree left strict."""
    return _insert(tree, a, strict_left=True)[0]


def leaf_insert_right(a: int, tree: Optional[Tree]) -> Tree:
    """``a -> T``: equal labels go left, keeping the tree right strict."""
    return _insert(tree, a, strict_left=False)[0]


def insert_left_word(word: Sequence[int]) -> tuple[Optional[Tree], Optional[Tree]]:
    """Left-to-right insertion: ``(ltree(u), lrectree(u))``."""
    tree = rec = None
    for index, a in enumerate(word, start=1):
        tree, path = _insert(tree, a, strict_left=True)
        rec = _graft(rec, path, index)
    return tree, rec


def insert_right_word(word: Sequence[int]) -> tuple[Optional[Tree], Optional[Tree]]:
    """Right-to-left insertion: ``(rtree(u), rrectree(u))``."""
    tree = rec = None
    for index in range(len(word), 0, -1):
        tree, path = _insert(tree, word[index - 1], strict_left=False)
        rec = _graft(rec, path, index)
    return tree, rec


def ltree(word: Sequence[int]) -> Optional[Tree]:
    return insert_left_word(word)[0]


def rtree(word: Sequence[int]) -> Optional[Tree]:
    return insert_right_word(word)[0]


# ----------------------------------------------------------------- readings

def infix_nodes(tree: Optional[Tree]) -> list[Tree]:
    out: list[Tree] = []

    def walk(t):
        if t is not None:
            walk(t.left)
            out.append(t)
            walk(t.right)

    walk(tree)
    return out


def infix_reading(tree: Optional[Tree]) -> tuple[int, ...]:
    return tuple(t.label for t in infix_nodes(tree))


def postfix_reading(tree: Optional[Tree]) -> tuple[int, ...]:
    if tree is None:
        return ()
    return (*postfix_reading(tree.left), *postfix_reading(tree.right), tree.label)


def size(tree) -> int:
    """Node count of a labelled tree or of a shape."""
    if tree is None:
        return 0
    if isinstance(tree, Tree):
        return 1 + size(tree.left) + size(tree.right)
    return 1 + size(tree[0]) + size(tree[1])


def tree_weight(tree: Optional[Tree]) -> tuple[int, ...]:
    from .words import weight
    return weight(infix_reading(tree))


# -------------------------------------------------- decreasing/increasing

def _extremal_tree(word: Sequence[int], pick) -> Optional[Tree]:
    if len(set(word)) != len(word):
        raise ValueError(f"word has repeated letters: {tuple(word)}")

    def build(lo: int, hi: int) -> Optional[Tree]:
        if lo >= hi:
            return None
        pos = pick(range(lo, hi), key=word.__getitem__)
        return Tree(word[pos], build(lo, pos), build(pos + 1, hi))

    return build(0, len(word))


def dectree(word: Sequence[int]) -> Optional[Tree]:
    """Decreasing tree: the maximum letter at the root, recursively on both sides."""
    return _extremal_tree(tuple(word), max)


def inctree(word: Sequence[int]) -> Optional[Tree]:
    """Increasing tree: the minimum letter at the root, recursively on both sides."""
    return _extremal_tree(tuple(word), min)


# ------------------------------------------------------------------ shapes

def shape(tree: Optional[Tree]) -> Shape:
    if tree is None:
        return None
    return (shape(tree.left), shape(tree.right))


def shape_pair(pair: TwinPair) -> tuple[Shape, Shape]:
    return shape(pair.left), shape(pair.right)


@lru_cache(maxsize=None)
def shapes_of_size(n: int) -> tuple:
    """Every binary tree shape with ``n`` nodes (Catalan many)."""
    if n == 0:
        return (None,)
    return tuple(
        (left, right)
        for k in range(n)
        for left in shapes_of_size(k)
        for right in shapes_of_size(n - 1 - k)
    )


def all_shapes(max_nodes: int) -> Iterator[Shape]:
    for n in range(max_nodes + 1):
        yield from shapes_of_size(n)


def _shape_flags(s: Shape) -> list[tuple[bool, bool]]:
    """``(has_left, has_right)`` for each node of a shape, in infix order."""
    if s is None:
        return []
    return [*_shape_flags(s[0]), (s[0] is not None, s[1] is not None), *_shape_flags(s[1])]


def _as_shape(tree) -> Shape:
    return shape(tree) if isinstance(tree, Tree) else tree


# --------------------------------------------------------- canopy/intervals

def canopy(tree) -> str:
    """0/1 word of empty subtrees met by an infix scan, ends trimmed.

    Accepts a labelled tree or a shape; the empty tree is rejected.
    """
    s = _as_shape(tree)
    if s is None:
        raise ValueError("canopy of the empty tree is not defined")
    bits: list[str] = []

    def walk(t):
        if t[0] is None:
            bits.append("1")
        else:
            walk(t[0])
        if t[1] is None:
            bits.append("0")
        else:
            walk(t[1])

    walk(s)
    return "".join(bits[1:-1])


def is_twin_pair(left, right) -> bool:
    """Equal infix readings and complementary canopies.

    With two shapes (unlabelled) only the canopy condition is tested.
    """
    if isinstance(left, Tree) or isinstance(right, Tree):
        if infix_reading(left) != infix_reading(right):
            return False
    if left is None or right is None:
        return left is None and right is None
    c_left, c_right = canopy(left), canopy(right)
    return len(c_left) == len(c_right) and all(x != y for x, y in zip(c_left, c_right))


def left_interval_partition(tree) -> list[tuple[int, int]]:
    """Inclusive 1-indexed infix ranges; a new interval starts at each node with a left child."""
    flags = _shape_flags(_as_shape(tree))
    if not flags:
        raise ValueError("interval partition of the empty tree is not defined")
    starts = [1] + [p for p, (has_left, _) in enumerate(flags, start=1) if has_left and p > 1]
    ends = [s - 1 for s in starts[1:]] + [len(flags)]
    return list(zip(starts, ends))


def right_interval_partition(tree) -> list[tuple[int, int]]:
    """Inclusive 1-indexed infix ranges; an interval ends at each node with a right child."""
    flags = _shape_flags(_as_shape(tree))
    if not flags:
        raise ValueError("interval partition of the empty tree is not defined")
    m = len(flags)
    ends = [p for p, (_, has_right) in enumerate(flags, start=1) if has_right and p < m] + [m]
    starts = [1] + [e + 1 for e in ends[:-1]]
    return list(zip(starts, ends))


def interval_lengths(partition: list[tuple[int, int]]) -> tuple[int, ...]:
    return tuple(b - a + 1 for a, b in partition)


# ------------------------------------------------------------- validators

def _labels(tree: Optional[Tree]) -> list[int]:
    return [t.label for t in infix_nodes(tree)]


def is_right_strict(tree: Optional[Tree]) -> bool:
    """Each label is >= everything on its left and < everything on its right."""
    if tree is None:
        return True
    ok_left = all(x <= tree.label for x in _labels(tree.left))
    ok_right = all(x > tree.label for x in _labels(tree.right))
    return ok_left and ok_right and is_right_strict(tree.left) and is_right_strict(tree.right)


def is_left_strict(tree: Optional[Tree]) -> bool:
    """Each label is > everything on its left and <= everything on its right."""
    if tree is None:
        return True
    ok_left = all(x < tree.label for x in _labels(tree.left))
    ok_right = all(x >= tree.label for x in _labels(tree.right))
    return ok_left and ok_right and is_left_strict(tree.left) and is_left_strict(tree.right)


def _heap_ordered(tree: Optional[Tree], above) -> bool:
    if tree is None:
        return True
    for child in (tree.left, tree.right):
        if child is not None and not above(tree.label, child.label):
            return False
    return _heap_ordered(tree.left, above) and _heap_ordered(tree.right, above)


def is_decreasing(tree: Optional[Tree]) -> bool:
    return _heap_ordered(tree, lambda parent, child: parent > child)


def is_increasing(tree: Optional[Tree]) -> bool:
    return _heap_ordered(tree, lambda parent, child: parent < child)


def is_standard_tree(tree: Optional[Tree]) -> bool:
    return sorted(_labels(tree)) == list(range(1, size(tree) + 1))


# ----------------------------------------------------------------- filling

def label_shape(s: Shape, word: Sequence[int]) -> Optional[Tree]:
    """Attach ``word`` to the nodes of ``s`` in infix order."""
    if len(word) != size(s):
        raise ValueError(f"shape has {size(s)} nodes but word has {len(word)} letters")
    letters = iter(word)

    def build(t):
        if t is None:
            return None
        left = build(t[0])
        label = next(letters)
        return Tree(label, left, build(t[1]))

    return build(s)


def fill_shape(s: Shape, wt: Sequence[int], strictness: str = "right") -> Optional[Tree]:
    """The unique binary search tree of shape ``s`` and weight ``wt``, if any.

    The infix reading of a search tree is forced to be the weakly increasing
    word of its weight, so the only candidate is checked for strictness.
    """
    if strictness not in ("left", "right"):
        raise ValueError(f"strictness must be 'left' or 'right', got {strictness!r}")
    if sum(wt) != size(s):
        raise ValueError(f"weight total {sum(wt)} does not match shape size {size(s)}")
    tree = label_shape(s, word_of_weight(wt))
    valid = is_right_strict(tree) if strictness == "right" else is_left_strict(tree)
    return tree if valid else None


# ----------------------------------------------------------------- counting

def hook_count(s) -> int:
    """Standard decreasing trees of shape ``s``: ``n! / prod(subtree sizes)``."""
    s = _as_shape(s)
    hooks: list[int] = []

    def walk(t) -> int:
        if t is None:
            return 0
        h = 1 + walk(t[0]) + walk(t[1])
        hooks.append(h)
        return h

    n = walk(s)
    return factorial(n) // prod(hooks)


def count_fillings(s, n: int) -> int:
    """Right strict search trees of shape ``s`` with labels in ``1..n``."""
    s = _as_shape(s)
    if s is None:
        return 1
    ell = len(right_interval_partition(s))
    if ell > n:
        return 0
    return comb(n + size(s) - ell, n - ell)


# ------------------------------------------------------------ Baxter reading

class _Flat:
    """Tree flattened to infix-indexed arrays for bitmask bookkeeping."""

    def __init__(self, tree: Optional[Tree]):
        nodes = infix_nodes(tree)
        index = {id(t): k for k, t in enumerate(nodes)}
        self.labels = [t.label for t in nodes]
        self.parent = [-1] * len(nodes)
        self.children_mask = [0] * len(nodes)
        for k, t in enumerate(nodes):
            for child in (t.left, t.right):
                if child is not None:
                    c = index[id(child)]
                    self.parent[c] = k
                    self.children_mask[k] |= 1 << c

    def roots(self, removed: int) -> list[int]:
        return [
            k for k in range(len(self.labels))
            if not removed >> k & 1 and (self.parent[k] < 0 or removed >> self.parent[k] & 1)
        ]

    def leaves(self, removed: int) -> list[int]:
        return [
            k for k in range(len(self.labels))
            if not removed >> k & 1 and self.children_mask[k] & ~removed == 0
        ]


def _reading_moves(left: _Flat, right: _Flat, removed_l: int, removed_r: int):
    """Available ``(label, left_node, right_node)`` choices, smallest label first."""
    roots = {left.labels[k]: k for k in left.roots(removed_l)}
    leaves = {right.labels[k]: k for k in right.leaves(removed_r)}
    return [(a, roots[a], leaves[a]) for a in sorted(roots.keys() & leaves.keys())]


def baxter_class_readings(pair: TwinPair) -> frozenset:
    """Every word produced by the nondeterministic root/leaf reading of a twin pair."""
    left, right = _Flat(pair.left), _Flat(pair.right)
    full = (1 << len(left.labels)) - 1
    if len(right.labels) != len(left.labels):
        return frozenset()

    @lru_cache(maxsize=None)
    def suffixes(removed_l: int, removed_r: int) -> frozenset:
        if removed_l == full and removed_r == full:
            return frozenset({()})
        out = set()
        for a, kl, kr in _reading_moves(left, right, removed_l, removed_r):
            for rest in suffixes(removed_l | 1 << kl, removed_r | 1 << kr):
                out.add((a, *rest))
        return frozenset(out)

    return suffixes(0, 0)


def left_consistent_reading(pair: TwinPair) -> tuple[int, ...]:
    """The reading that always takes the leftmost available root."""
    left, right = _Flat(pair.left), _Flat(pair.right)
    removed_l = removed_r = 0
    out: list[int] = []
    for _ in range(len(left.labels)):
        moves = _reading_moves(left, right, removed_l, removed_r)
        if not moves:
            raise ValueError("not a pair of twin binary search trees: reading is stuck")
        a, kl, kr = moves[0]
        out.append(a)
        removed_l |= 1 << kl
        removed_r |= 1 << kr
    if len(right.labels) != len(left.labels):
        raise ValueError("trees have different sizes")
    return tuple(out)


# ------------------------------------------------------------ serialization

def tree_to_json(tree: Optional[Tree]):
    if tree is None:
        return None
    return {"label": tree.label, "left": tree_to_json(tree.left), "right": tree_to_json(tree.right)}


def tree_from_json(obj) -> Optional[Tree]:
    if obj is None:
        return None
    if not isinstance(obj, dict) or set(obj) != {"label", "left", "right"}:
        raise ValueError(f"malformed tree node: {obj!r}")
    label = obj["label"]
    if not isinstance(label, int) or isinstance(label, bool) or label < 1:
        raise ValueError(f"tree labels must be positive integers, got {label!r}")
    return Tree(label, tree_from_json(obj["left"]), tree_from_json(obj["right"]))


def shape_to_json(s: Shape):
    if s is None:
        return None
    return {"left": shape_to_json(s[0]), "right": shape_to_json(s[1])}


def shape_from_json(obj) -> Shape:
    """Read a shape; labelled tree JSON is accepted and its labels ignored."""
    if obj is None:
        return None
    if not isinstance(obj, dict) or not {"left", "right"} <= set(obj):
        raise ValueError(f"malformed shape node: {obj!r}")
    return (shape_from_json(obj["left"]), shape_from_json(obj["right"]))


def pair_to_json(pair: TwinPair):
    return {"left": tree_to_json(pair.left), "right": tree_to_json(pair.right)}


def pair_from_json(obj) -> TwinPair:
    if not isinstance(obj, dict) or set(obj) != {"left", "right"}:
        raise ValueError(f"malformed twin pair: {obj!r}")
    return TwinPair(tree_from_json(obj["left"]), tree_from_json(obj["right"]))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def render(tree: Optional[Tree]) -> str:
    """Sideways ASCII drawing (root at the left, right subtree on top). Display only."""
    if tree is None:
        return "(empty)"
    lines: list[str] = []

    def walk(t, prefix: str, tag: str):
        if t.right is not None:
            walk(t.right, prefix + "    ", "/")
        lines.append(f"{prefix}{tag}-{t.label}" if tag else str(t.label))
        if t.left is not None:
            walk(t.left, prefix + "    ", "\\")

    walk(tree, "", "")
    return "\n".join(lines)
