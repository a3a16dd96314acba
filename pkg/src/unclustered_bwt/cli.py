"""Command-line interface.

Exit codes: 0 success, 1 valid input with a negative answer, 2 usage or
guard error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import graph, numtheory, oracle, untie
from .extend import construct_unclustered
from .words import (
    MAX_ALPHABET,
    bwt,
    format_word,
    inverse_bwt,
    is_alphabet_permutation_power,
    is_bwt_image_aperiodic,
    parse_word,
    rle,
    run_count,
)

SCHEMA_VERSION = 1
EDGE_LIMIT = 10 ** 4

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def envelope(command: str, parameters: dict, result) -> str:
    doc = {"command": command, "parameters": parameters, "result": result, "schema_version": SCHEMA_VERSION}
    return json.dumps(doc, sort_keys=True, indent=2)


def _emit(args, parameters: dict, result: dict, lines: list[str]) -> None:
    if getattr(args, "format", "text") == "json":
        print(envelope(args.command, parameters, result))
    else:
        print("\n".join(lines))


def _word_arg(text: str):
    try:
        w = parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not w:
        raise UsageError("empty word")
    return w


def cmd_construct(args) -> int:
    n, k = args.length, args.alphabet
    if n < 1 or not 3 <= k <= MAX_ALPHABET:
        raise UsageError(f"need length >= 1 and 3 <= alphabet <= {MAX_ALPHABET}")
    if args.all_letters and n < k:
        raise UsageError("length must be at least alphabet size with --all-letters")
    u = construct_unclustered(n, k, args.all_letters)
    w = bwt(u)
    runs = run_count(w)
    if runs != n or len(u) != n:
        print(f"internal error: {u} has {runs} runs", file=sys.stderr)
        return EXIT_INTERNAL
    params = {"length": n, "alphabet": k, "all_letters": args.all_letters}
    result = {"necklace": str(u), "bwt": format_word(w), "runs": runs}
    lines = [f"necklace {u}", f"bwt      {format_word(w)}", f"runs     {runs}"]
    if args.raw:
        result["raw_rotation"] = format_word(inverse_bwt(w).word)
        lines.append(f"raw      {result['raw_rotation']}")
    _emit(args, params, result, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    w = _word_arg(args.word)
    k = args.alphabet or max(2, max(w) + 1)
    if max(w) >= k:
        raise UsageError(f"letter {max(w)} does not fit an alphabet of size {k}")
    image = is_bwt_image_aperiodic(w)
    runs = run_count(w)
    app = is_alphabet_permutation_power(w, k)
    ties = untie.find_ties(w, k).blocks if app else None
    unclustered = image and runs == len(w)
    result = {
        "word": format_word(w),
        "alphabet": k,
        "length": len(w),
        "bwt_image": image,
        "runs": runs,
        "rle": [list(r) for r in rle(w)],
        "alphabet_permutation_power": app,
        "ties": ties,
        "gdbw_image": image and app,
        "necklace": str(inverse_bwt(w)) if image else None,
        "completely_unclustered": unclustered,
    }
    if args.raw:
        result["raw_rotation"] = format_word(inverse_bwt(w).word) if image else None
    lines = [f"{key}: {value}" for key, value in result.items() if key != "rle"]
    _emit(args, {"word": args.word, "alphabet": k}, result, lines)
    return EXIT_OK if unclustered else EXIT_NEGATIVE


def cmd_enumerate(args) -> int:
    n, k = args.length, args.alphabet
    if n < 1 or not 1 <= k <= MAX_ALPHABET:
        raise UsageError("need length >= 1 and a valid alphabet size")
    try:
        report = oracle.enumeration_report(k, n, args.unclustered_only, args.limit)
    except oracle.GuardExceeded as exc:
        raise UsageError(str(exc))
    lines = [f"necklaces   {report.total}", f"unclustered {report.unclustered}"]
    lines += report.witnesses
    if report.truncated:
        lines.append("...")
    params = {"length": n, "alphabet": k, "unclustered_only": args.unclustered_only, "limit": args.limit}
    _emit(args, params, report.to_dict(), lines)
    return EXIT_OK


def cmd_count(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be positive")
    phi = numtheory.phi_generalized(3, n)
    gdbw = numtheory.count_gdbw_ternary(n)
    bound = numtheory.lower_bound_unclustered(n)
    result = {"phi3": phi, "gdbw": gdbw, "lower_bound": str(bound)}
    lines = [f"Phi_3({n})          {phi}", f"gdbw of length {3 * n} {gdbw}", f"lower bound       {bound}"]
    _emit(args, {"n": n}, result, lines)
    return EXIT_OK


def cmd_artin(args) -> int:
    k, n_max = args.k, args.max_n
    if not 2 <= k <= MAX_ALPHABET or n_max < 1:
        raise UsageError(f"need 2 <= k <= {MAX_ALPHABET} and max-n >= 1")
    rows = []
    for n in range(1, n_max + 1):
        m = k * n + 1
        prime = numtheory.is_prime(m)
        root = numtheory.is_primitive_root(k, m) if prime else None
        image = numtheory.artin_lhs(k, n)
        if image != (prime and bool(root)) or image != numtheory.artin_lhs_modular(k, n):
            print(f"theorem violation at k={k}, n={n}", file=sys.stderr)
            return EXIT_INTERNAL
        rows.append({"n": n, "modulus": m, "prime": prime, "primitive_root": root, "bwt_image": image})

    def mark(v):
        return "-" if v is None else ("yes" if v else "no")

    lines = [f"{'n':>5} {'kn+1':>7} prime root image"]
    lines += [f"{r['n']:>5} {r['modulus']:>7} {mark(r['prime']):>5} {mark(r['primitive_root']):>4} {mark(r['bwt_image']):>5}"
              for r in rows]
    result = {"rows": rows, "holding": [r["n"] for r in rows if r["bwt_image"]]}
    _emit(args, {"k": k, "max_n": n_max}, result, lines)
    return EXIT_OK


def cmd_export_graph(args) -> int:
    if args.k < 2 or args.n < 1:
        raise UsageError("need k >= 2 and n >= 1")
    if args.k * args.n > EDGE_LIMIT:
        raise UsageError(f"{args.k * args.n} edges exceed the rendering limit {EDGE_LIMIT}")
    text = graph.export_dot(graph.GdbGraph(args.k, args.n), line_labels=args.with_line_labels)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_untie_trace(args) -> int:
    w = _word_arg(args.word)
    k = args.alphabet or max(3, max(w) + 1)
    if not graph.is_gdbw_image(w, k):
        raise UsageError(f"{args.word} is not the BWT of a generalized de Bruijn word over {k} letters")
    if k < 3:
        raise UsageError("untying needs k >= 3")
    final, steps = untie.untie_all(w, k)
    result = {
        "start": format_word(w),
        "steps": [s.to_dict() for s in steps],
        "final": format_word(final),
        "necklace": str(inverse_bwt(final)),
    }
    print(envelope("untie-trace", {"word": args.word, "alphabet": k}, result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unclustered-bwt", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    raw = argparse.ArgumentParser(add_help=False)
    raw.add_argument("--raw", action="store_true",
                     help="also print the rotation produced by the LF walk (it starts at the least row, "
                          "so it equals the canonical form)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[fmt, raw], help="build a necklace with a completely unclustered BWT")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--all-letters", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[fmt, raw], help="inspect a candidate BWT image")
    p.add_argument("word")
    p.add_argument("--alphabet", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[fmt], help="list necklaces by brute force")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=3)
    p.add_argument("--unclustered-only", action="store_true")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[fmt], help="exact counts for ternary gdbw of length 3n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("artin", parents=[fmt], help="tabulate the primitive-root criterion")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_artin)

    p = sub.add_parser("export-graph", help="write DB(k, n) as DOT")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot",), default="dot")
    p.add_argument("--with-line-labels", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_graph)

    p = sub.add_parser("untie-trace", help="JSON trace of the untying steps")
    p.add_argument("word")
    p.add_argument("--alphabet", type=int)
    p.set_defaults(func=cmd_untie_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, numtheory.TheoremViolation) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
