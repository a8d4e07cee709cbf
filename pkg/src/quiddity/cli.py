"""Command line frontend.

Subcommands: verify, enumerate, dissect, frieze, decompose, farey.
Exit codes: 0 success, 1 domain negative (e.g. not a solution),
2 usage error, 3 budget exceeded.  The QUIDDITY_BUDGET environment
variable raises the enumeration ceilings globally.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import dissection as dmod
from . import limits, psl2, search, sturm
from .frieze import (
    check_glide,
    check_tame,
    farey_quiddity,
    frieze as build_frieze,
    is_totally_positive,
    render_text,
)
from .matrices import Mat2, Word, word_product
from .surgery import NotASolutionError, SolutionClass, classify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    pass


def _parse_word(text: str) -> Word:
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse word {text!r}; expected comma-separated integers")
    if not entries or any(a < 1 for a in entries):
        raise UsageError("word entries must be positive integers")
    return entries


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _frac(x: Fraction) -> str:
    return str(x)


def cmd_verify(args) -> int:
    word = _parse_word(args.word)
    cls, cert = classify(word)
    if cls is SolutionClass.NOT_A_SOLUTION:
        _emit(args, {"word": list(word), "class": "none"},
              [f"{word}: not a solution (trace {word_product(word).trace()})"])
        return EXIT_DOMAIN
    n = len(word)
    s_count, r_count = cert.type1_count, cert.type2_count
    total = sum(word)
    expected = 3 * n - 6 * r_count - (3 if cls is SolutionClass.PROBLEM_III else 6)
    bound = search.entry_bound(
        cls if cls is not SolutionClass.PROBLEM_III else SolutionClass.PROBLEM_III, n)
    index = sturm.rotation_index(word)
    payload = {
        "word": list(word),
        "class": cls.value,
        "trace": word_product(word).trace(),
        "S": s_count,
        "R": r_count,
        "sum": total,
        "sum_expected": expected,
        "max_entry_bound": bound,
        "index_twice": int(index * 2),
    }
    lines = [
        f"word {','.join(map(str, word))}",
        f"class: Problem {cls.value}",
        f"trace: {payload['trace']}",
        f"S = {s_count}, R = {r_count}",
        f"sum = {total} (expected {expected}): {'ok' if total == expected else 'MISMATCH'}",
        f"max entry {max(word)} <= bound {bound}: {'ok' if max(word) <= bound else 'MISMATCH'}",
        f"rotation index: {_frac(index)}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    problem = {"1": "I", "2": "II", "3": "III"}.get(args.problem, args.problem)
    budget = args.budget
    if args.engine in ("gen", "both"):
        gen = search.generative_enumerate(problem, args.n, budget=budget)
    if args.engine in ("brute", "both"):
        brute = search.brute_force_enumerate(problem, args.n, budget=budget)
    if args.engine == "both":
        if gen.words != brute.words:
            _emit(args, {"error": "engine mismatch"}, ["engine mismatch: brute != generative"])
            return EXIT_DOMAIN
        result = gen
    else:
        result = gen if args.engine == "gen" else brute
    if args.orbits != "none":
        reps = sorted({
            min([w[k:] + w[:k] for k in range(len(w))]
                + ([w[::-1][k:] + w[::-1][:k] for k in range(len(w))]
                   if args.orbits == "dihedral" else []))
            for w in result.words
        })
        shown: Sequence[Word] = reps
    else:
        shown = result.words
    if args.count:
        _emit(args, {"problem": problem, "n": args.n, "count": len(shown)}, [str(len(shown))])
    else:
        _emit(args, {"problem": problem, "n": args.n,
                     "words": [list(w) for w in shown]},
              [",".join(map(str, w)) for w in shown])
    return EXIT_OK


def _render_dissection(args, d) -> tuple[dict, list[str]]:
    if args.render == "dot":
        return d.to_json(), [dmod.to_dot(d)]
    if args.render == "svg":
        return d.to_json(), [dmod.to_svg(d)]
    doc = d.to_json()
    doc["faces"] = [list(f) for f in dmod.faces(d)]
    doc["quiddity"] = list(dmod.quiddity(d))
    return doc, [json.dumps(doc, sort_keys=True)]


def cmd_dissect(args) -> int:
    word = _parse_word(args.word)
    cls, cert = classify(word)
    if cls is SolutionClass.NOT_A_SOLUTION:
        _emit(args, {"word": list(word), "class": "none"}, [f"{word}: not a solution"])
        return EXIT_DOMAIN
    if args.all:
        found = dmod.dissections_with_quiddity(word, budget=args.budget)
        docs = [d.to_json() for d in found]
        _emit(args, {"word": list(word), "dissections": docs},
              [json.dumps(doc, sort_keys=True) for doc in docs])
        return EXIT_OK
    if cls is SolutionClass.PROBLEM_III:
        # the triangle-based replay needs an Id/-Id word; double first
        from .surgery import reduce_word
        d = dmod.from_certificate(reduce_word(word + word))
    else:
        d = dmod.from_certificate(cert)
    payload, lines = _render_dissection(args, d)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_frieze(args) -> int:
    word = _parse_word(args.word)
    try:
        f = build_frieze(word, r_max=args.rows)
    except NotASolutionError:
        _emit(args, {"word": list(word), "class": "none"}, [f"{word}: not a solution"])
        return EXIT_DOMAIN
    tame = check_tame(f)
    diagnostics = {"tame": tame}
    if args.rows is None and f.r_max == 2 * f.n - 2:
        diagnostics["glide"] = check_glide(f)
    doc = f.to_json()
    doc.update(diagnostics)
    lines = [render_text(f), f"tame: {tame}"]
    if "glide" in diagnostics:
        lines.append(f"glide symmetric: {diagnostics['glide']}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    try:
        a, b, c, d = (int(x) for x in args.matrix.split(","))
    except ValueError:
        raise UsageError(f"cannot parse matrix {args.matrix!r}; expected a,b,c,d")
    m = Mat2(a, b, c, d)
    if m.det() != 1:
        raise UsageError(f"matrix must have determinant 1, got {m.det()}")
    word = psl2.reduced_decomposition(m)
    q = psl2.element_quiddity(m)
    index = psl2.element_index(m)
    diss = psl2.element_dissection(m)
    payload = {
        "matrix": m.rows(),
        "reduced": list(word),
        "quiddity": list(q.combined),
        "index_twice": int(index * 2),
        "dissection": diss.to_json(),
        "faces": sorted(len(f) for f in dmod.faces(diss)),
    }
    lines = [
        f"reduced word: {','.join(map(str, word))}",
        f"quiddity: {','.join(map(str, q.combined))}",
        f"index: {_frac(index)}",
        f"dissection: {diss.n}-gon, faces {payload['faces']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_farey(args) -> int:
    if args.order < 2:
        raise UsageError("order must be >= 2")
    word = farey_quiddity(args.order)
    cls, cert = classify(word)
    payload = {
        "order": args.order,
        "word": list(word),
        "class": cls.value,
        "sum": sum(word),
        "sum_expected": 3 * len(word) - 6,
        "totally_positive": is_totally_positive(word),
    }
    lines = [
        f"quiddity: {','.join(map(str, word))}",
        f"class: Problem {cls.value}",
        f"sum = {payload['sum']} (3n-6 = {payload['sum_expected']})",
        f"totally positive: {payload['totally_positive']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiddity")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="classify a word and print its invariants")
    p.add_argument("word")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list or count all solutions of one length")
    p.add_argument("--problem", required=True, choices=("1", "2", "3", "I", "II", "III"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--engine", choices=("brute", "gen", "both"), default="gen")
    p.add_argument("--orbits", choices=("none", "rotation", "dihedral"), default="none")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dissect", help="build a dissection with the given quiddity")
    p.add_argument("word")
    p.add_argument("--render", choices=("json", "dot", "svg"), default="json")
    p.add_argument("--all", action="store_true",
                   help="list every dissection with this quiddity")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("frieze", help="print the frieze of a solution")
    p.add_argument("word")
    p.add_argument("--rows", type=int, default=None)
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("decompose", help="reduced decomposition of a matrix a,b,c,d")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("farey", help="quiddity of the Farey polygon of an order")
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_farey)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except limits.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotASolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
