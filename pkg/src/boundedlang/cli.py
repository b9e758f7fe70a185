"""Command-line front end.

Output formats per command:

    convert     json
    multiply    json
    regions     json, csv
    constants   json, plain
    grid        pgm, csv
    dfa         dot
    slender     json
    witness     json

JSON documents carry ``"schema": 1`` and render every number as a decimal
string. Exit codes: 0 ok, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from boundedlang.errors import EmptyRegion, NumerationError, WordSyntaxError
from boundedlang.multiplication import (
    constants,
    closed_form_tail,
    eq7_identity_check,
    length_gap,
    multiply,
    preserves_recognizability,
    region_min_mu,
    region_table,
)
from boundedlang.numeration import BoundedWord, decompose, parse_word, represent, value_of
from boundedlang.recognizability import build_bounded_dfa, growth_witness, grid_to_csv, grid_to_pgm, mod_grid
from boundedlang.slender import SlenderLanguage, slender_recognizable_profile

SCHEMA = 1


class UsageError(Exception):
    pass


def _s(n) -> str:
    return str(n)


def _word_json(w: BoundedWord) -> dict:
    n = value_of(w)
    return {
        "word": str(w),
        "value": _s(n),
        "exponents": [_s(e) for e in w.exponents],
        "z": [_s(z) for z in decompose(n, w.ell).z],
        "length": _s(w.length),
    }


def _dump(doc: dict) -> str:
    return json.dumps({"schema": SCHEMA, **doc}, ensure_ascii=False, indent=2) + "\n"


def _parse_natural(text: str) -> int:
    t = text.strip()
    if not t.isdigit():
        raise WordSyntaxError(f"not a natural number: {text!r}", 0)
    return int(t)


def _input_word(args) -> BoundedWord:
    if args.word is not None:
        return parse_word(args.word, args.ell)
    if args.value is None:
        raise UsageError("give a value or --word")
    return represent(_parse_natural(args.value), args.ell)


def _integer_root(n: int, k: int) -> int | None:
    lo, hi = 0, 1
    while hi**k < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None


def cmd_convert(args, out) -> int:
    w = _input_word(args)
    out.write(_dump({"ell": _s(args.ell), **_word_json(w)}))
    return 0


def cmd_multiply(args, out) -> int:
    w = _input_word(args)
    lam = args.lam
    image = multiply(w, lam)
    doc = {"ell": _s(args.ell), "lambda": _s(lam), "input": _word_json(w), "image": _word_json(image)}
    beta = _integer_root(lam, args.ell) if lam >= 1 else None
    if beta is not None and beta >= 1 and value_of(w) > 0:
        gap = length_gap(value_of(w), beta, args.ell)
        doc["length_gap"] = {"beta": _s(beta), "i": _s(gap.i), "in_regime": gap.in_regime}
    else:
        doc["length_gap"] = None
    doc["preserves_recognizability"] = preserves_recognizability(lam, args.ell) if lam >= 2 else None
    out.write(_dump(doc))
    return 0


def cmd_regions(args, out) -> int:
    try:
        info = region_min_mu(args.i, args.k, args.beta, args.ell)
    except EmptyRegion as exc:
        if args.strict:
            raise
        if args.format == "json":
            out.write(_dump({"ell": _s(args.ell), "beta": _s(args.beta), "i": _s(args.i), "k": _s(args.k), "empty": True, "reason": str(exc)}))
        return 0
    rows = region_table(args.i, args.k, args.beta, args.ell, args.rows)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(["j"] + [f"image_{t + 1}" for t in range(args.ell)] + [f"suffix_{t + 2}" for t in range(args.ell - 1)])
        for row in rows:
            image = list(row.image) if row.image is not None else [""] * args.ell
            writer.writerow([row.j] + image + list(row.suffix))
        out.write(buf.getvalue())
        return 0
    doc = {
        "ell": _s(args.ell),
        "beta": _s(args.beta),
        "i": _s(args.i),
        "k": _s(args.k),
        "empty": False,
        "m": _s(info.m),
        "mu": _s(info.mu),
        "size": _s(info.size),
        "rows": [
            {
                "j": _s(r.j),
                "image": None if r.image is None else [_s(x) for x in r.image],
                "suffix": [_s(x) for x in r.suffix],
            }
            for r in rows
        ],
    }
    out.write(_dump(doc))
    return 0


def cmd_constants(args, out) -> int:
    a = constants(args.beta, args.ell)
    tail = closed_form_tail(args.beta, args.ell, args.q, a) if args.q is not None else None
    eq7 = eq7_identity_check(args.beta, args.ell)
    if args.format == "plain":
        for k in range(args.ell - 1, -1, -1):
            out.write(f"c_{k} = {a.constant(k)}\n")
        out.write(f"integer = {str(a.all_integer).lower()}\n")
        out.write(f"monotone = {str(a.monotone_nonincreasing).lower()}\n")
        out.write(f"tail_identity = {str(eq7).lower()}\n")
        if a.applicable:
            out.write(f"q_min = {a.q_min}\n")
        if tail is not None:
            out.write(f"tail = {tail}\n")
        return 0
    doc = {
        "ell": _s(args.ell),
        "beta": _s(args.beta),
        "c": [str(x) for x in a.c],
        "integer": a.all_integer,
        "monotone": a.monotone_nonincreasing,
        "tail_identity": eq7,
        "q_min": _s(a.q_min) if a.applicable else None,
    }
    if tail is not None:
        doc["tail"] = {"q": _s(args.q), **_word_json(tail)}
    out.write(_dump(doc))
    return 0


def cmd_grid(args, out) -> int:
    grid = mod_grid(args.p, args.size)
    fmt = args.format
    if fmt == "pgm" and args.p > 256:
        fmt = "csv"
    if fmt == "pgm":
        data = grid_to_pgm(grid, args.p)
    else:
        data = grid_to_csv(grid).encode("ascii")
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        target = getattr(out, "buffer", None)
        if target is not None:
            out.flush()
            target.write(data)
            target.flush()
        else:
            out.write(data.decode("latin-1"))
    return 0


def cmd_dfa(args, out) -> int:
    out.write(build_bounded_dfa(args.ell).to_dot())
    return 0


def _parse_loop(spec: str) -> tuple[str, str, str]:
    parts = spec.split(",")
    if len(parts) != 3 or not parts[1]:
        raise UsageError(f"loop must be x,y,z with y nonempty: {spec!r}")
    return parts[0], parts[1], parts[2]


def _parse_progression(spec: str) -> tuple[int, int]:
    parts = spec.split(",")
    if len(parts) != 2:
        raise UsageError(f"progression must be q,p: {spec!r}")
    return _parse_natural(parts[0]), _parse_natural(parts[1])


def cmd_slender(args, out) -> int:
    loops = [_parse_loop(s) for s in args.loop]
    letters = args.alphabet or "".join(sorted(set("".join("".join(lp) for lp in loops) + "".join(args.finite))))
    lang = SlenderLanguage(letters, loops, args.finite, window=args.window)
    doc: dict = {"language": str(lang), "alphabet": letters, "window": _s(args.window)}
    if args.value is not None:
        n = _parse_natural(args.value)
        doc["value"] = _s(n)
        doc["word"] = lang.rep(n)
    if args.word is not None:
        doc["word"] = args.word
        doc["value"] = _s(lang.value(args.word))
    if args.profile is not None:
        doc["profile"] = [_s(c) for c in lang.profile(args.profile)]
    if args.progression is not None:
        progs = [_parse_progression(s) for s in args.progression]
        subset = slender_recognizable_profile(lang, progs)
        doc["recognizable"] = {
            "expression": str(subset),
            "loops": [
                {"x": p.x, "y": p.y, "z": p.z, "start": _s(p.start), "step": _s(p.step)} for p in subset.loops
            ],
            "finite": subset.finite,
        }
    out.write(_dump(doc))
    return 0


def cmd_witness(args, out) -> int:
    lam = args.beta**args.ell
    tail = [0] * (args.ell - 1)
    points = [multiply(BoundedWord(tuple(tail) + (q,)), lam).exponents for q in range(args.q_from, args.q_to + 1)]
    points.sort(key=sum)
    found = growth_witness(points, args.k)
    doc = {"ell": _s(args.ell), "beta": _s(args.beta), "k": _s(args.k), "witness": None}
    if found is not None:
        doc["witness"] = {
            "coordinates": [_s(j + 1) for j in found.indices],
            "block_minima": [_s(m) for m in found.block_minima],
            "points": _s(len(found.subsequence)),
        }
    out.write(_dump(doc))
    return 0


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boundedlang", description="Numeration systems on bounded languages a1*...al*.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="value <-> word <-> combinatorial decomposition (json)")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("value", nargs="?")
    p.add_argument("--word")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("multiply", help="image of a word under multiplication by lambda (json)")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", type=_nonneg, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--value")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("regions", help="region R_{i,k} and its table (json, csv)")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--rows", type=_nonneg, default=3)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--strict", action="store_true", help="exit 1 on an empty region")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("constants", help="tail constants c_k for beta^ell (json, plain)")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--q", type=_nonneg, help="also print the closed-form image of a_l^q")
    p.add_argument("--format", choices=["json", "plain"], default="json")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("grid", help="residues of val_2(a^i b^j) mod p (pgm, csv)")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--size", type=_positive, default=20)
    p.add_argument("--format", choices=["pgm", "csv"], default="pgm")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("dfa", help="automaton of B_ell (dot)")
    p.add_argument("--ell", type=_positive, required=True)
    p.set_defaults(func=cmd_dfa)

    p = sub.add_parser("slender", help="rank/unrank in a union of loops x y* z (json)")
    p.add_argument("--loop", action="append", required=True, metavar="X,Y,Z")
    p.add_argument("--finite", action="append", default=[], metavar="WORD")
    p.add_argument("--alphabet", help="ordered letters; default is sorted letters in use")
    p.add_argument("--window", type=_positive, default=256)
    p.add_argument("--value")
    p.add_argument("--word")
    p.add_argument("--profile", type=_nonneg, metavar="MAXLEN")
    p.add_argument("--progression", action="append", metavar="Q,P")
    p.set_defaults(func=cmd_slender)

    p = sub.add_parser("witness", help="growth witness for f_{beta^ell} on a_l^q (json)")
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--k", type=_nonneg, default=1)
    p.add_argument("--q-from", type=_nonneg, default=50)
    p.add_argument("--q-to", type=_nonneg, default=400)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (WordSyntaxError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
