"""Acceptance suite: ten numbered checks, each returning a pass flag and a detail line.

``size="full"`` runs the stated domains; ``size="small"`` shrinks the
exhaustive sweeps for a quick smoke run.
"""
from __future__ import annotations

import json
import time
from collections import defaultdict
from dataclasses import dataclass
from importlib import resources
from itertools import combinations, product

from . import graphs, oracles, trees
from .congruence import (
    check_identity, count_factorizations, equiv, canonical_reading, q_sylv,
)
from .operators import (
    e_crystal, e_quasi, f_crystal, f_quasi, is_highest_weight_quasi,
)
from .words import (
    invert, parse_word, standardize, weight, words_up_to,
)


@dataclass(frozen=True)
class Result:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.detail})"


def load_data(name: str):
    text = resources.files("crystaltrees").joinpath("data", name).read_text()
    return json.loads(text)


def _digits(text: str) -> tuple:
    return tuple(int(c) for c in text)


def _equal_weight_pairs(words):
    groups = defaultdict(list)
    for w in words:
        groups[(len(w), weight(w))].append(w)
    for group in groups.values():
        yield from combinations(group, 2)


# ---------------------------------------------------------------- 1 fixtures

def _worked_example_values(word):
    left, left_rec = trees.insert_left_word(word)
    right, right_rec = trees.insert_right_word(word)
    return {
        "standardized": standardize(word),
        "inverse": invert(standardize(word)),
        "ltree": left,
        "rtree": right,
        "lrectree": left_rec,
        "rrectree": right_rec,
        "infix": trees.infix_reading(right),
        "postfix": trees.postfix_reading(right),
        "canopy_left": trees.canopy(left),
        "canopy_right": trees.canopy(right),
        "twin": trees.is_twin_pair(left, right),
    }


def criterion_1(size: str = "full") -> Result:
    gold = load_data("worked_example.json")
    word = parse_word(gold["word"])
    expected = {
        "standardized": parse_word(gold["standardized"]),
        "inverse": parse_word(gold["inverse"]),
        "ltree": trees.tree_from_json(gold["ltree"]),
        "rtree": trees.tree_from_json(gold["rtree"]),
        "lrectree": trees.tree_from_json(gold["lrectree"]),
        "rrectree": trees.tree_from_json(gold["rrectree"]),
        "infix": parse_word(gold["infix"]),
        "postfix": parse_word(gold["postfix"]),
        "canopy_left": gold["canopy_left"],
        "canopy_right": gold["canopy_right"],
        "twin": True,
    }
    got = _worked_example_values(word)
    wrong = sorted(k for k in expected if got[k] != expected[k])
    best = min(_timed(_worked_example_values, word) for _ in range(50))
    ok = not wrong and best < 1e-3
    detail = f"mismatches={wrong or 'none'}, best time {best * 1e3:.3f} ms"
    return Result(1, "worked-example fixtures", ok, detail)


def _timed(fn, *args) -> float:
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


# ------------------------------------------------------------ 2 figure edges

def criterion_2(size: str = "full") -> Result:
    data = load_data("graph_edges.json")
    missing = []
    checked = 0
    for key, lower in (("crystal_2111", f_crystal), ("quasicrystal_1212", f_quasi)):
        for src, label, dst in data[key]:
            checked += 1
            if lower(_digits(src), label) != _digits(dst):
                missing.append((key, src, label, dst))
    for group in data["quasicrystal_1212_2121_1221"]:
        for src, label, dst in group:
            checked += 1
            if f_quasi(_digits(src), label) != _digits(dst):
                missing.append(("fig5", src, label, dst))
    return Result(2, "figure edges", not missing, f"{checked} edges, {len(missing)} missing")


# ------------------------------------------------------- 3 operator coherence

def criterion_3(size: str = "full") -> Result:
    max_len = 6 if size == "full" else 4
    cases = mismatches = 0
    for w in words_up_to(3, max_len):
        for i in (1, 2, 3):
            cases += 1
            e, f = e_crystal(w, i), f_crystal(w, i)
            if e != oracles.e_rec(w, i) or f != oracles.f_rec(w, i):
                mismatches += 1
            if e != oracles.e_rec(w, i, "last") or f != oracles.f_rec(w, i, "last"):
                mismatches += 1
            eq, fq = e_quasi(w, i), f_quasi(w, i)
            if eq != oracles.e_quasi_literal(w, i) or fq != oracles.f_quasi_literal(w, i):
                mismatches += 1
            for up, down, x, y in ((e_crystal, f_crystal, e, f), (e_quasi, f_quasi, eq, fq)):
                if x is not None and down(x, i) != w:
                    mismatches += 1
                if y is not None and up(y, i) != w:
                    mismatches += 1
            std = standardize(w)
            if any(x is not None and standardize(x) != std for x in (eq, fq)):
                mismatches += 1
    return Result(3, "operator coherence", mismatches == 0,
                  f"{cases} (word, label) cases up to length {max_len}, {mismatches} mismatches")


# ---------------------------------------------------- 4 three-route agreement

def criterion_4(size: str = "full") -> Result:
    long_, short = (5, 4) if size == "full" else (4, 3)
    bad = pairs = 0
    for u, v in _equal_weight_pairs(words_up_to(3, long_)):
        pairs += 1
        if len({equiv(u, v, "sylv", m) for m in ("insertion", "shape", "rewrite")}) != 1:
            bad += 1
        if equiv(u, v, "plac", "insertion") != equiv(u, v, "plac", "rewrite"):
            bad += 1
    for u, v in _equal_weight_pairs(words_up_to(3, short)):
        if len({equiv(u, v, "baxt", m) for m in ("insertion", "shape", "rewrite")}) != 1:
            bad += 1
        if equiv(u, v, "hypo", "shape") != graphs.congruent_via_graph(u, v, "hypo", 8):
            bad += 1
    return Result(4, "three-route congruence agreement", bad == 0,
                  f"{pairs} equal-weight pairs up to length {long_}, {bad} disagreements")


# ------------------------------------------------------- 5 graph-route agreement

def criterion_5(size: str = "full") -> Result:
    separations = (
        graphs.congruent_via_graph((1, 2, 2, 1), (2, 1, 2, 1), "sylv", 8)
        and not graphs.congruent_via_graph((1, 2, 1, 2), (1, 2, 2, 1), "sylv", 8)
        and graphs.pinned_isomorphic((1, 2, 1, 2), (1, 2, 2, 1), "quasicrystal", 8)
    )
    max_len = 4 if size == "full" else 3
    words = list(words_up_to(3, max_len))
    bad = 0
    for kind in ("plac", "hypo", "sylv", "baxt"):
        for u in words:
            for v in words:
                if graphs.congruent_via_graph(u, v, kind, 8) != equiv(u, v, kind, "insertion"):
                    bad += 1
    ok = separations and bad == 0
    return Result(5, "graph route and separations", ok,
                  f"separations {'hold' if separations else 'FAIL'}, "
                  f"{len(words) ** 2} pairs x 4 kinds, {bad} disagreements")


# ------------------------------------------------ 6 highest-weight characterization

def criterion_6(size: str = "full") -> Result:
    max_len = 5 if size == "full" else 4
    bad = checked = 0
    for w in words_up_to(4, max_len):
        checked += 1
        hw = is_highest_weight_quasi(w)
        if hw != oracles.sylv_highest_weight_by_tree(w) or hw != oracles.baxt_highest_weight_by_trees(w):
            bad += 1
    witnesses = (
        is_highest_weight_quasi(parse_word("1 1 2 1 3 3 5 4 3 2"))
        and oracles.sylv_highest_weight_by_tree(parse_word("1 1 2 1 3 3 5 4 3 2"))
        and not is_highest_weight_quasi(parse_word("5 4 5 1 7 6 1 5 2 4"))
        and not oracles.sylv_highest_weight_by_tree(parse_word("5 4 5 1 7 6 1 5 2 4"))
    )
    return Result(6, "highest-weight characterizations", bad == 0 and witnesses,
                  f"{checked} words up to length {max_len}, {bad} mismatches, "
                  f"witnesses {'ok' if witnesses else 'FAIL'}")


# ------------------------------------------------------------------ 7 counting

def criterion_7(size: str = "full") -> Result:
    hook_nodes, fill_nodes = (5, 4) if size == "full" else (4, 3)
    bad = 0
    shapes = list(trees.all_shapes(hook_nodes))
    for s in shapes:
        if trees.hook_count(s) != oracles.standard_decreasing_trees(s):
            bad += 1
    zero_branch = 0
    fill_cases = 0
    for s in trees.all_shapes(fill_nodes):
        for n in range(1, 5):
            fill_cases += 1
            got = trees.count_fillings(s, n)
            if got != oracles.right_strict_fillings(s, n):
                bad += 1
            if s is not None and len(trees.right_interval_partition(s)) > n:
                zero_branch += 1
    ok = bad == 0 and zero_branch > 0
    return Result(7, "counting formulas", ok,
                  f"{len(shapes)} hook shapes, {fill_cases} filling cases "
                  f"({zero_branch} in the zero branch), {bad} mismatches")


# ------------------------------------------------ 8 factorization content-independence

def _weights(total: int, letters: int):
    """Contents of the given size over ``letters`` letters, trailing zeros trimmed."""
    seen = set()
    for wt in product(range(total + 1), repeat=letters):
        last = max((k for k, x in enumerate(wt, start=1) if x), default=0)
        trimmed = wt[:last]
        if sum(wt) == total and trimmed not in seen:
            seen.add(trimmed)
            yield trimmed


def _sylv_witnesses(t_shape, letters: int) -> list:
    out = []
    for wt in _weights(trees.size(t_shape), letters):
        tree = trees.fill_shape(t_shape, wt, "right")
        if tree is not None:
            out.append(canonical_reading(tree, "sylv"))
    return out


def _twin_shape_pairs(max_nodes: int) -> list:
    out = []
    for m in range(max_nodes + 1):
        for a in trees.shapes_of_size(m):
            for b in trees.shapes_of_size(m):
                if trees.is_twin_pair(a, b):
                    out.append((a, b))
    return out


def _baxt_witnesses(t_pair, letters: int) -> list:
    out = []
    for wt in _weights(trees.size(t_pair[0]), letters):
        left = trees.fill_shape(t_pair[0], wt, "left")
        right = trees.fill_shape(t_pair[1], wt, "right")
        if left is not None and right is not None and trees.is_twin_pair(left, right):
            out.append(canonical_reading(trees.TwinPair(left, right), "baxt"))
    return out


def _content_independent(kind: str, t_shapes, factor_shapes, witnesses) -> tuple[int, int, int, int]:
    shapes_checked = bad = nonzero = 0
    for t in t_shapes:
        ws = witnesses(t)
        if len({weight(w) for w in ws}) < 2:
            continue
        shapes_checked += 1
        n = trees.size(t if kind == "sylv" else t[0])
        for u in factor_shapes:
            for v in factor_shapes:
                m = trees.size(u if kind == "sylv" else u[0])
                k = trees.size(v if kind == "sylv" else v[0])
                if m + k != n:
                    continue
                counts = {count_factorizations(w, u, v, kind) for w in ws}
                if len(counts) != 1:
                    bad += 1
                nonzero += max(counts) > 0
    return shapes_checked, bad, len(t_shapes), nonzero


def criterion_8(size: str = "full") -> Result:
    t_nodes = 4 if size == "full" else 3
    # one spare letter so every shape admits at least two contents
    letters = t_nodes + 1
    sylv_t = [s for s in trees.all_shapes(t_nodes) if s is not None]
    sylv_uv = list(trees.all_shapes(3))
    s_checked, s_bad, s_total, s_hits = _content_independent(
        "sylv", sylv_t, sylv_uv, lambda t: _sylv_witnesses(t, letters))
    baxt_t = [p for p in _twin_shape_pairs(t_nodes) if p[0] is not None]
    baxt_uv = _twin_shape_pairs(3)
    b_checked, b_bad, b_total, b_hits = _content_independent(
        "baxt", baxt_t, baxt_uv, lambda t: _baxt_witnesses(t, letters))
    ok = (s_bad == 0 and b_bad == 0 and s_checked == s_total and b_checked == b_total
          and s_hits > 0 and b_hits > 0)
    return Result(8, "factorization content-independence", ok,
                  f"sylv {s_checked}/{s_total} shapes, baxt {b_checked}/{b_total} twin shapes, "
                  f"{s_hits + b_hits} nonzero (T, U, V) counts, {s_bad + b_bad} disagreements")


# ---------------------------------------------------------------- 9 identities

def criterion_9(size: str = "full") -> Result:
    sylv_len, baxt_len = (3, 2) if size == "full" else (2, 1)
    failures = cases = 0
    for kind, max_len in (("sylv", sylv_len), ("baxt", baxt_len)):
        words = list(words_up_to(3, max_len))
        for x in words:
            for y in words:
                cases += 1
                if not check_identity(kind, x, y):
                    failures += 1
    return Result(9, "identities", failures == 0, f"{cases} instances, {failures} failures")


# ---------------------------------------------------- 10 Q-indexing and standard words

def criterion_10(size: str = "full") -> Result:
    max_len = 5 if size == "full" else 4
    words = list(words_up_to(3, max_len))
    by_q = defaultdict(set)
    for w in words:
        by_q[(len(w), q_sylv(w))].add(standardize(w))
    q_bad = sum(len(stds) != 1 for stds in by_q.values())
    by_std = defaultdict(set)
    for w in words:
        by_std[standardize(w)].add((len(w), q_sylv(w)))
    q_bad += sum(len(qs) != 1 for qs in by_std.values())

    seen: set = set()
    components = comp_bad = 0
    for w in words:
        if w in seen:
            continue
        view = graphs.component(w, "quasicrystal", 8)
        seen.update(view.vertices)
        components += 1
        if len(view.standard_vertices()) != 1:
            comp_bad += 1
    ok = q_bad == 0 and comp_bad == 0
    return Result(10, "Q-indexing and standard words", ok,
                  f"{len(words)} words, {components} components, "
                  f"{q_bad} indexing and {comp_bad} component failures")


CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
)


def run_all(size: str = "full", echo=print) -> list[Result]:
    results = []
    for check in CRITERIA:
        result = check(size)
        echo(result.line())
        results.append(result)
    return results
