"""Bounded slices of the crystal and quasi-crystal graphs.

The infinite-rank graphs have infinite components, so every view is cut
off at a label bound ``N``: only edges labelled ``1..N-1`` are followed,
which keeps all letters at most ``N``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .operators import LOWERING, RAISING
from .words import is_standard, weight

GRAPH_KINDS = ("crystal", "quasicrystal")


@dataclass(frozen=True)
class ComponentView:
    seed: tuple
    kind: str
    bound: int
    vertices: tuple  # sorted words
    edges: tuple  # sorted (source, label, target) triples

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, word) -> bool:
        return tuple(word) in self._vertex_set

    @property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def standard_vertices(self) -> list:
        return [w for w in self.vertices if is_standard(w)]


def graph_kind(kind: str) -> str:
    """Map a monoid kind (or graph kind) to the graph it lives on."""
    if kind in GRAPH_KINDS:
        return kind
    if kind == "plac":
        return "crystal"
    if kind in ("hypo", "sylv", "baxt"):
        return "quasicrystal"
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=1 << 18)
def _moves(word: tuple, kind: str, bound: int) -> tuple:
    """``(f_1, e_1, f_2, e_2, ...)`` results for labels below the bound."""
    lower, raise_ = LOWERING[kind], RAISING[kind]
    out = []
    for i in range(1, bound):
        out.append(lower(word, i))
        out.append(raise_(word, i))
    return tuple(out)


def _check_bound(bound: int) -> None:
    if bound < 2:
        raise ValueError(f"label bound must be at least 2, got {bound}")


def component(seed: Sequence[int], kind: str, bound: int) -> ComponentView:
    """Breadth-first closure of ``seed`` under the raising and lowering operators."""
    kind = graph_kind(kind)
    _check_bound(bound)
    seed = tuple(seed)
    seen = {seed}
    edges = set()
    queue = deque([seed])
    while queue:
        word = queue.popleft()
        moves = _moves(word, kind, bound)
        for label in range(1, bound):
            lowered = moves[2 * label - 2]
            if lowered is not None:
                edges.add((word, label, lowered))
                if lowered not in seen:
                    seen.add(lowered)
                    queue.append(lowered)
        for label in range(1, bound):
            raised = moves[2 * label - 1]
            if raised is not None:
                edges.add((raised, label, word))
                if raised not in seen:
                    seen.add(raised)
                    queue.append(raised)
    return ComponentView(seed, kind, bound, tuple(sorted(seen)), tuple(sorted(edges)))


def pinned_isomorphic(u: Sequence[int], v: Sequence[int], kind: str, bound: int) -> bool:
    """Whether the label-respecting correspondence pinned at ``u -> v`` is an isomorphism.

    Each vertex has at most one outgoing and one incoming edge per label, so
    the correspondence is forced; walking both components in lockstep either
    builds it or finds a mismatch.
    """
    kind = graph_kind(kind)
    _check_bound(bound)
    u, v = tuple(u), tuple(v)
    forward = {u: v}
    backward = {v: u}
    queue = deque([(u, v)])
    while queue:
        x, y = queue.popleft()
        for x2, y2 in zip(_moves(x, kind, bound), _moves(y, kind, bound)):
            if (x2 is None) != (y2 is None):
                return False
            if x2 is None:
                continue
            mapped, back = forward.get(x2), backward.get(y2)
            if mapped is None and back is None:
                forward[x2] = y2
                backward[y2] = x2
                queue.append((x2, y2))
            elif mapped != y2 or back != x2:
                return False
    return True


def default_bound(*words: Sequence[int]) -> int:
    top = max((max(w, default=0) for w in words), default=0)
    longest = max((len(w) for w in words), default=0)
    return max(top, longest) + 2


def congruent_via_graph(u: Sequence[int], v: Sequence[int], kind: str,
                        bound: Optional[int] = None) -> bool:
    """Weight equality, pinned isomorphism, and (sylv/baxt) equal abstract shape."""
    from .congruence import sigma_baxt, sigma_sylv

    u, v = tuple(u), tuple(v)
    if bound is None:
        bound = default_bound(u, v)
    if weight(u) != weight(v):
        return False
    if kind == "sylv" and sigma_sylv(u) != sigma_sylv(v):
        return False
    if kind == "baxt" and sigma_baxt(u) != sigma_baxt(v):
        return False
    return pinned_isomorphic(u, v, graph_kind(kind), bound)


def _dot_id(word: tuple) -> str:
    if not word:
        return '"-"'
    if max(word) < 10:
        return '"' + "".join(map(str, word)) + '"'
    return '"' + " ".join(map(str, word)) + '"'


def to_dot(view: ComponentView, name: str = "component") -> str:
    """Deterministic DOT text: sorted vertices, then sorted labelled edges."""
    lines = [f"digraph {name} {{"]
    lines += [f"  {_dot_id(w)};" for w in view.vertices]
    lines += [f'  {_dot_id(a)} -> {_dot_id(b)} [label="{i}"];' for a, i, b in view.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
