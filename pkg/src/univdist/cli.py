"""Command-line interface.

Exit status: 0 on success, 1 on usage or input errors (and on a failed
``verify`` / ``oracle-check``), 2 when the requested index is unreachable.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import _backend
from .distances import InfeasibleTarget, canonical_op, distance
from .witness import verify, witness
from .word import AlphabetMap, Word, WordError, arch_factorize, normalize, restore


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", metavar="PATH", help="read the word from a file ('-' for stdin)")
    p.add_argument("--ints", action="store_true",
                   help="letters are whitespace-separated integers instead of characters")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _op_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--op", required=True, type=_op, help="insert, delete or subst")
    p.add_argument("-k", required=True, type=_nonneg, dest="k", help="target universality index")
    p.add_argument("--force-generic", action="store_true",
                   help="use the general insertion DP even for binary words")
    p.add_argument("--backend", choices=_backend.available(), help=argparse.SUPPRESS)


def _op(text: str) -> str:
    try:
        return canonical_op(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="univdist", description="Edit distances to k-universal words.")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("index", help="universality index and arch factorization")
    p.add_argument("word", nargs="?")
    _input_flags(p)

    p = sub.add_parser("dist", help="minimal number of edits")
    p.add_argument("word", nargs="?")
    _input_flags(p)
    _op_flags(p)

    p = sub.add_parser("witness", help="minimal edits and a closest word")
    p.add_argument("word", nargs="?")
    _input_flags(p)
    _op_flags(p)

    p = sub.add_parser("verify", help="check a claimed closest word")
    p.add_argument("words", nargs="+", metavar="WORD [WITNESS]",
                   help="the word and the candidate (only the candidate with --file)")
    _input_flags(p)
    _op_flags(p)

    p = sub.add_parser("oracle-check", help="exhaustive comparison against brute force")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--sigma", type=_positive, required=True)
    p.add_argument("--op", type=_op, action="append", help="restrict to an operation (repeatable)")
    p.add_argument("--jobs", type=_positive, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="random word")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--sigma", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--ints", action="store_true")

    p = sub.add_parser("bench", help="time the three distances on a random word")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--sigma", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=_backend.available(), default=None)
    p.add_argument("--json", action="store_true")
    return parser


# -- input / output -------------------------------------------------------------

def _parse_symbols(text: str, ints: bool) -> list:
    if ints:
        try:
            return [int(t) for t in text.split()]
        except ValueError:
            raise UsageError("--ints expects whitespace-separated integers") from None
    return list(text.rstrip("\r\n"))


def _read_word(args, positional: str | None):
    if args.file is not None and positional is not None:
        raise UsageError("give the word either as an argument or with --file, not both")
    if positional is not None:
        text = positional
    elif args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e.strerror}") from None
    syms = _parse_symbols(text, args.ints)
    try:
        return normalize(syms)
    except WordError as e:
        raise UsageError(str(e)) from None


def _render(letters, amap: AlphabetMap, ints: bool) -> str:
    syms = restore(letters, amap)
    return " ".join(map(str, syms)) if ints else "".join(syms)


def _rest(w: Word, amap: AlphabetMap, ints: bool) -> str:
    fact = arch_factorize(w)
    return _render(w.letters[fact.rest_start - 1:], amap, ints)


def _header(w: Word, op: str, k: int, cost: int) -> dict:
    return {"op": op, "k": k, "cost": str(cost), "iota": arch_factorize(w).iota,
            "arch_ends": list(arch_factorize(w).arch_ends)}


# -- commands -----------------------------------------------------------------

def _cmd_index(args, out) -> int:
    w, amap = _read_word(args, args.word)
    fact = arch_factorize(w)
    rest = _rest(w, amap, args.ints)
    if args.json:
        out.write(json.dumps({"iota": fact.iota, "arch_ends": list(fact.arch_ends), "rest": rest}) + "\n")
    else:
        out.write(f"iota {fact.iota}\n")
        out.write("arch_ends " + " ".join(map(str, fact.arch_ends)) + "\n")
        out.write(f"rest {rest}\n")
    return 0


def _cmd_dist(args, out) -> int:
    w, _ = _read_word(args, args.word)
    res = distance(w, args.k, args.op, force_generic=args.force_generic, backend=args.backend)
    if args.json:
        out.write(json.dumps(_header(w, res.op, res.k, res.cost)) + "\n")
    else:
        out.write(f"{res.cost}\n")
    return 0


def _stream_witness(wit, amap: AlphabetMap, ints: bool, out, as_json: bool) -> None:
    first = True
    for chunk in wit.chunks():
        piece = _render(chunk, amap, ints)
        if ints and not first and piece:
            piece = " " + piece
        if as_json:
            piece = json.dumps(piece)[1:-1]
        out.write(piece)
        first = False


def _cmd_witness(args, out) -> int:
    w, amap = _read_word(args, args.word)
    cost, wit = witness(w, args.k, args.op, backend=args.backend)
    if args.json:
        head = json.dumps(_header(w, args.op, args.k, cost))
        out.write(head[:-1] + ', "witness": "')
        _stream_witness(wit, amap, args.ints, out, True)
        out.write('"}\n')
    else:
        out.write(f"{cost}\n")
        _stream_witness(wit, amap, args.ints, out, False)
        out.write("\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.file is not None:
        if len(args.words) != 1:
            raise UsageError("with --file give only the candidate")
        w, amap = _read_word(args, None)
        cand_text = args.words[0]
    else:
        if len(args.words) != 2:
            raise UsageError("expected WORD and WITNESS")
        w, amap = _read_word(args, args.words[0])
        cand_text = args.words[1]
    syms = _parse_symbols(cand_text, args.ints)
    try:
        cand = [amap.letter_of(s) for s in syms]
    except WordError as e:
        verdict_ok, cost, reason = False, None, str(e)
    else:
        v = verify(w, args.k, args.op, cand, backend=args.backend)
        verdict_ok, cost, reason = v.ok, v.cost, v.reason
    if args.json:
        out.write(json.dumps({"op": args.op, "k": args.k, "ok": verdict_ok,
                              "cost": None if cost is None else str(cost), "reason": reason}) + "\n")
    else:
        out.write(("ok" if verdict_ok else "rejected") + (f" cost {cost}" if cost is not None else "")
                  + (f": {reason}" if reason else "") + "\n")
    return 0 if verdict_ok else 1


def _cmd_oracle_check(args, out) -> int:
    from .sweep import OPS, sweep
    ops = tuple(dict.fromkeys(args.op)) if args.op else OPS
    if args.sigma > args.max_n:
        raise UsageError("--sigma cannot exceed --max-n")
    rep = sweep(args.max_n, args.sigma, ops, jobs=args.jobs)
    if args.json:
        out.write(json.dumps({"words": rep.words, "checks": rep.checks, "bfs_checks": rep.bfs_checks,
                              "mismatches": [list(map(str, m)) for m in rep.mismatches]}) + "\n")
    else:
        out.write(f"words {rep.words} checks {rep.checks} bfs_checks {rep.bfs_checks} "
                  f"mismatches {len(rep.mismatches)}\n")
        for m in rep.mismatches[:20]:
            out.write(f"  {m}\n")
    return 1 if rep.mismatches else 0


def random_word(n: int, sigma: int, seed=None) -> list[int]:
    """Uniform random word of length n using every letter of 1..sigma."""
    if sigma > n:
        raise UsageError("--sigma cannot exceed --n")
    rng = random.Random(seed)
    letters = list(range(1, sigma + 1)) + [rng.randint(1, sigma) for _ in range(n - sigma)]
    rng.shuffle(letters)
    return letters


def _cmd_gen(args, out) -> int:
    letters = random_word(args.n, args.sigma, args.seed)
    if args.ints:
        out.write(" ".join(map(str, letters)) + "\n")
    elif args.sigma <= 26:
        out.write("".join(chr(96 + a) for a in letters) + "\n")
    else:
        raise UsageError("text output supports sigma <= 26; use --ints")
    return 0


def _cmd_bench(args, out) -> int:
    w = Word.from_letters(random_word(args.n, args.sigma, args.seed))
    kern = _backend.load(args.backend)
    times = {}
    for op in ("insert", "delete", "subst"):
        k = args.k
        t0 = time.perf_counter()
        try:
            cost = str(distance(w, k, op, force_generic=True, backend=args.backend).cost)
        except InfeasibleTarget:
            cost = "infeasible"
        times[op] = (time.perf_counter() - t0, cost)
    if args.json:
        out.write(json.dumps({"backend": kern.NAME, "n": args.n, "k": args.k, "sigma": args.sigma,
                              "seconds": {op: t for op, (t, _) in times.items()},
                              "cost": {op: c for op, (_, c) in times.items()}}) + "\n")
    else:
        out.write(f"backend {kern.NAME} n {args.n} k {args.k} sigma {args.sigma}\n")
        for op, (t, c) in times.items():
            out.write(f"{op:7s} {t:9.3f}s  cost {c}\n")
    return 0


_COMMANDS = {"index": _cmd_index, "dist": _cmd_dist, "witness": _cmd_witness, "verify": _cmd_verify,
             "oracle-check": _cmd_oracle_check, "gen": _cmd_gen, "bench": _cmd_bench}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.cmd](args, out)
    except InfeasibleTarget as e:
        print(f"univdist: {e}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as e:
        print(f"univdist: error: {e}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
