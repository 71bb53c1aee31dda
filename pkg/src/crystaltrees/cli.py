"""Command-line front end.

Words are passed as one space-separated argument (``"5 4 5 1"``; ``-`` is
the empty word). Decision verbs print one line and exit 0 for yes, 1 for no;
malformed input exits 2 with a one-line diagnostic.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance, graphs, trees
from .congruence import (
    KINDS, METHODS, check_identity, count_factorizations, equiv, identity_sides,
    p_baxt, q_baxt, rewrite_closure, schensted, p_sylv, q_sylv,
)
from .operators import apply_script
from .words import format_word, parse_word, standardize, words_up_to


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word(text: str) -> tuple:
    try:
        return parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def _shape_arg(path: str, kind: str = "sylv"):
    obj = _read_json(path)
    try:
        if kind == "baxt":
            if not isinstance(obj, list) or len(obj) != 2:
                raise ValueError("a Baxter shape is a JSON array [left shape, right shape]")
            return trees.shape_from_json(obj[0]), trees.shape_from_json(obj[1])
        return trees.shape_from_json(obj)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ------------------------------------------------------------------ verbs

def _insert(args, out):
    word = _word(args.word)
    if args.kind == "plac":
        p, q = schensted(word)
        payload = {"P": [list(r) for r in p], "Q": [list(r) for r in q]}
        art = ["P:", *(format_word(r) for r in p), "Q:", *(format_word(r) for r in q)]
    elif args.kind == "sylv":
        p, q = p_sylv(word), q_sylv(word)
        payload = {"P": trees.tree_to_json(p), "Q": trees.tree_to_json(q)}
        art = ["P:", trees.render(p), "Q:", trees.render(q)]
    else:
        p, (ql, qr) = p_baxt(word), q_baxt(word)
        payload = {"P": trees.pair_to_json(p),
                   "Q": {"left": trees.tree_to_json(ql), "right": trees.tree_to_json(qr)}}
        art = ["P left:", trees.render(p.left), "P right:", trees.render(p.right),
               "Q left:", trees.render(ql), "Q right:", trees.render(qr)]
    if args.format == "json":
        out.write(trees.dumps(payload) + "\n")
    else:
        out.write("\n".join(art) + "\n")
    return 0


def _std(args, out):
    out.write(format_word(standardize(_word(args.word))) + "\n")
    return 0


def _op(args, out):
    word = _word(args.word)
    try:
        steps = apply_script(word, args.script)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for result in steps:
        out.write(("UNDEFINED" if result is None else format_word(result)) + "\n")
    return 0


def _equiv(args, out):
    u, v = _word(args.u), _word(args.v)
    try:
        same = equiv(u, v, args.kind, args.method, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(("EQUIVALENT" if same else "NOT EQUIVALENT") + "\n")
    return 0 if same else 1


def _class(args, out):
    try:
        closure = rewrite_closure(_word(args.word), args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for w in sorted(closure):
        out.write(format_word(w) + "\n")
    return 0


def _graph(args, out):
    word = _word(args.word)
    bound = args.bound if args.bound is not None else graphs.default_bound(word)
    try:
        view = graphs.component(word, args.kind, bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.dot:
        text = graphs.to_dot(view)
    else:
        lines = [f"{len(view)} vertices, {len(view.edges)} edges (labels 1..{bound - 1})"]
        lines += [f"{format_word(a)} -{i}-> {format_word(b)}" for a, i, b in view.edges]
        text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return 0


def _count(args, out):
    s = _shape_arg(args.shape)
    if args.what == "hooks":
        out.write(f"{trees.hook_count(s)}\n")
        return 0
    if args.n is None:
        raise UsageError("count fillings needs an alphabet size n")
    out.write(f"{trees.count_fillings(s, args.n)}\n")
    return 0


def _identity(args, out):
    checked = 0
    words = list(words_up_to(args.alphabet, args.maxlen))
    for x in words:
        for y in words:
            checked += 1
            if not check_identity(args.kind, x, y):
                lhs, rhs = identity_sides(args.kind, x, y)
                out.write(f"FAILS at x={format_word(x)} y={format_word(y)}: "
                          f"{format_word(lhs)} vs {format_word(rhs)}\n")
                return 1
    out.write(f"HOLDS ({checked} instances)\n")
    return 0


def _readings(args, out):
    try:
        pair = trees.pair_from_json(_read_json(args.pair))
        lc = trees.left_consistent_reading(pair)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for w in sorted(trees.baxter_class_readings(pair)):
        mark = "  (left-consistent)" if w == lc else ""
        out.write(format_word(w) + mark + "\n")
    return 0


def _factorcount(args, out):
    w = _word(args.word)
    u, v = _shape_arg(args.left, args.kind), _shape_arg(args.right, args.kind)
    out.write(f"{count_factorizations(w, u, v, args.kind)}\n")
    return 0


def _selftest(args, out):
    results = acceptance.run_all(args.size, echo=lambda line: out.write(line + "\n"))
    failed = [r.number for r in results if not r.passed]
    out.write("all criteria passed\n" if not failed else f"failed criteria: {failed}\n")
    return 0 if not failed else 1


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crystaltrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("insert", help="P and Q symbols of a word")
    p.add_argument("kind", choices=("plac", "sylv", "baxt"))
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_insert)

    p = sub.add_parser("std", help="standardization")
    p.add_argument("word")
    p.set_defaults(run=_std)

    p = sub.add_parser("op", help="apply an operator script such as 'f2;f1;e2'")
    p.add_argument("script")
    p.add_argument("word")
    p.set_defaults(run=_op)

    p = sub.add_parser("equiv", help="decide congruence (exit 0 yes, 1 no)")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("method", choices=METHODS)
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(run=_equiv)

    p = sub.add_parser("class", help="congruence class by rewriting, sorted")
    p.add_argument("kind", choices=("plac", "sylv", "baxt"))
    p.add_argument("word")
    p.set_defaults(run=_class)

    p = sub.add_parser("graph", help="bounded (quasi-)crystal component")
    p.add_argument("kind", choices=(*KINDS, *graphs.GRAPH_KINDS))
    p.add_argument("word")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--output", default=None)
    p.set_defaults(run=_graph)

    p = sub.add_parser("count", help="hook count or right strict fillings of a shape")
    p.add_argument("what", choices=("hooks", "fillings"))
    p.add_argument("shape")
    p.add_argument("n", nargs="?", type=int, default=None)
    p.set_defaults(run=_count)

    p = sub.add_parser("identity", help="exhaustive identity check")
    p.add_argument("kind", choices=("sylv", "baxt"))
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--maxlen", type=int, default=2)
    p.set_defaults(run=_identity)

    p = sub.add_parser("readings", help="Baxter class of a twin pair")
    p.add_argument("pair")
    p.set_defaults(run=_readings)

    p = sub.add_parser("factorcount", help="count factorizations into canonical words")
    p.add_argument("kind", choices=("sylv", "baxt"))
    p.add_argument("word")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=_factorcount)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--size", choices=("small", "full"), default="small")
    p.set_defaults(run=_selftest)
    return parser


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out)
    except UsageError as exc:
        sys.stderr.write(f"crystaltrees: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
