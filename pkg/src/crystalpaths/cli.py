"""Command-line interface.

Subcommands: apply, star, walls, graph, extremal, bmax, pw-verify,
oracle-check.  Elements are read as JSON from --file or stdin.  Operator
words are whitespace-separated tokens e0, e1, f0, f1 (plain) and E0, E1,
F0, F1 (starred), applied left to right.

Exit codes: 0 all checks pass / result produced; 1 a check failed; 2 a
bounded search was inconclusive; 64 malformed element JSON; 65 precondition
violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import serialize
from .core import TensorElement, bfs_component
from .elementary import EndMarker, LimitEntry
from .extremal import (bmax_contains, bmax_seed, enum_bmax, extremal_cert,
                       is_extremal)
from .halfpath import HalfPath, left_path, u_inf
from .levelpath import LevelPath, ModElement, lp_join, lp_split
from .peterweyl import pw_report, verify_c1, verify_c2, verify_c3
from .seqreal import SeqElement
from .star import star_binf, star_bminf, star_mod
from .weights import Weight, classical

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_BADJSON, EXIT_PRECONDITION = 64, 65


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_element(args):
    try:
        text = open(args.file).read() if args.file else sys.stdin.read()
    except OSError as exc:
        raise CliError(EXIT_PRECONDITION, f"cannot read input: {exc}")
    try:
        return serialize.loads(text)
    except (json.JSONDecodeError, ValueError, KeyError, TypeError, AttributeError) as exc:
        raise CliError(EXIT_BADJSON, f"malformed element JSON: {exc}")


def _parse_lambda(text: str) -> Weight:
    try:
        parts = [int(v) for v in text.split(",")]
        m, l = (parts + [0])[:2]
    except ValueError:
        raise CliError(EXIT_PRECONDITION, f"bad --lambda value: {text!r}")
    return classical(m, l)


def _as_mod(elt) -> ModElement:
    if isinstance(elt, ModElement):
        return elt
    if isinstance(elt, LevelPath):
        return lp_split(elt)
    raise CliError(EXIT_PRECONDITION,
                   f"{type(elt).__name__} does not support this operation")


_PLAIN = {"e0": ("e", 0), "e1": ("e", 1), "f0": ("f", 0), "f1": ("f", 1)}
_STARRED = {"E0": ("e", 0), "E1": ("e", 1), "F0": ("f", 0), "F1": ("f", 1)}


def cmd_apply(args) -> int:
    elt = _read_element(args)
    was_level_path = isinstance(elt, LevelPath)
    tokens = args.ops.split()
    needs_star = any(t in _STARRED for t in tokens)
    if needs_star or was_level_path:
        try:
            elt = _as_mod(elt)
        except CliError:
            raise CliError(EXIT_PRECONDITION,
                           "starred operators need a level path or three-factor element")
    for tok in tokens:
        if tok in _PLAIN:
            kind, i = _PLAIN[tok]
            elt = elt.e(i) if kind == "e" else elt.f(i)
        elif tok in _STARRED:
            kind, i = _STARRED[tok]
            from .star import starred_e, starred_f
            elt = starred_e(elt, i) if kind == "e" else starred_f(elt, i)
        else:
            raise CliError(EXIT_PRECONDITION, f"unknown operator token {tok!r}")
        if elt is None:
            print("0")
            return EXIT_OK
    if was_level_path and isinstance(elt, ModElement):
        elt = lp_join(elt)
    print(serialize.dumps(elt))
    return EXIT_OK


def cmd_star(args) -> int:
    elt = _read_element(args)
    try:
        if isinstance(elt, HalfPath):
            out = star_binf(elt) if elt.side == "left" else star_bminf(elt)
        elif isinstance(elt, SeqElement):
            from .seqreal import path_to_seq, seq_to_path
            out = path_to_seq(star_binf(seq_to_path(elt)), elt.first_color)
        elif isinstance(elt, LevelPath):
            out = lp_join(star_mod(lp_split(elt)))
        elif isinstance(elt, ModElement):
            out = star_mod(elt)
        else:
            raise CliError(EXIT_PRECONDITION, "star needs a crystal element")
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    print(serialize.dumps(out))
    return EXIT_OK


def cmd_walls(args) -> int:
    elt = _read_element(args)
    if isinstance(elt, ModElement):
        elt = lp_join(elt)
    if not isinstance(elt, (HalfPath, LevelPath)):
        raise CliError(EXIT_PRECONDITION, "walls needs a path element")
    walls = elt.walls()
    sign = elt.wall_sign()
    out = {
        "walls": [[k, s] for k, s in walls],
        "count": sum(abs(s) for _, s in walls),
        "sign": sign,
    }
    if isinstance(elt, HalfPath) and elt.side == "left":
        out["domains"] = [[start, length] for start, length in elt.domains()]
    print(json.dumps(out))
    return EXIT_OK


def cmd_graph(args) -> int:
    elt = _read_element(args)
    if isinstance(elt, LevelPath):
        elt = lp_split(elt)
    graph = bfs_component(elt, args.depth)
    if args.format == "dot":
        print(graph.to_dot())
    elif args.format == "text":
        for nid in sorted(graph.nodes):
            w = graph.nodes[nid].wt()
            print(f"{nid} depth={graph.depth[nid]} wt=({w.a0},{w.a1},{w.d})")
        for src, dst, i in sorted(graph.edges):
            print(f"{src} -f{i}-> {dst}")
    else:
        print(graph.to_json())
    return EXIT_OK


def cmd_extremal(args) -> int:
    elt = _as_mod(_read_element(args))
    cert = extremal_cert(elt, args.word_bound)
    print(json.dumps({
        "extremal": cert.extremal,
        "word_bound": cert.max_len,
        "witness": cert.witness,
    }))
    return EXIT_OK if cert.extremal else EXIT_FAIL


def cmd_bmax(args) -> int:
    lam = _parse_lambda(args.lam)
    if args.contains:
        elt = _as_mod(_read_element(args))
        member = bmax_contains(lam, elt, args.word_bound)
        print(json.dumps({"contains": member}))
        return EXIT_OK if member else EXIT_FAIL
    try:
        fam = enum_bmax(lam, args.c_bound, args.depth)
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    from itertools import product as _product
    shapes = _product(range(args.c_bound + 1), repeat=max(abs(lam.a0) - 1, 0))
    seeds = [serialize.encode(bmax_seed(lam, cvec)) for cvec in shapes]
    print(json.dumps({"size": len(fam), "seeds": seeds}))
    return EXIT_OK


def cmd_pw_verify(args) -> int:
    lam = _parse_lambda(args.lam)
    c1 = verify_c1(lam, args.depth, span=2, extremal_len=args.word_bound // 2)
    c2 = verify_c2(lam, args.depth)
    c3 = verify_c3(lam, args.depth, word_bound=args.word_bound)
    rep = pw_report(lam, c_bound=1, plain_depth=min(args.depth, 3),
                    star_depth=min(args.depth, 3))
    payload = {
        "lambda": serialize.encode_weight(lam),
        "C1": c1,
        "C2": c2,
        "C3": c3,
        "bmax_size": rep.bmax_size,
        "dual_size": rep.dual_size,
        "pair_count": rep.pair_count,
        "product_ok": rep.product_ok,
        "dual_characterization_ok": rep.dual_characterization_ok,
        "decompose_total": rep.decompose_total,
        "decompose_inconclusive": rep.decompose_inconclusive,
        "violations": rep.violations,
    }
    print(json.dumps(payload, indent=2))
    if rep.decompose_inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if (c1 and c2 and c3 and rep.ok) else EXIT_FAIL


def _tensor_oracle(entries: dict[int, int], width: int):
    """Left path as EndMarker (x) letters via raw tensor rules."""
    cur = TensorElement(EndMarker("left"), LimitEntry(entries.get(-width, 0)))
    for k in range(-width + 1, 0):
        cur = TensorElement(cur, LimitEntry(entries.get(k, 0)))
    return cur


def _oracle_letters(t) -> dict[int, int]:
    letters = []
    node = t
    while isinstance(node, TensorElement):
        letters.append(node.right.n)
        node = node.left
    letters.reverse()
    return {k - len(letters): v for k, v in enumerate(letters)}


def cmd_oracle_check(args) -> int:
    seed = args.seed
    if args.seed_file:
        try:
            seed = int(open(args.seed_file).read().strip())
        except (OSError, ValueError) as exc:
            raise CliError(EXIT_PRECONDITION, f"bad seed file: {exc}")
    rng = random.Random(seed)
    width = args.support + 2
    failures = 0
    checked = 0
    for _ in range(args.samples):
        entries = {-k: rng.randint(-args.entry_bound, args.entry_bound)
                   for k in range(1, args.support + 1)}
        b = left_path(entries)
        t = _tensor_oracle(dict(b.entries), width)
        for i in (0, 1):
            checked += 1
            if b.eps(i) != t.eps(i) or b.phi(i) != t.phi(i):
                failures += 1
                continue
            for kind in ("e", "f"):
                bb = b.e(i) if kind == "e" else b.f(i)
                tt = t.e(i) if kind == "e" else t.f(i)
                if (bb is None) != (tt is None):
                    failures += 1
                elif bb is not None and dict(bb.entries) != {
                        k: v for k, v in _oracle_letters(tt).items() if v != 0}:
                    failures += 1
    print(json.dumps({"checked": checked, "failures": failures}))
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crystalpaths")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--file", help="element JSON file (default: stdin)")

    p = sub.add_parser("apply", help="apply an operator word")
    common(p)
    p.add_argument("--ops", required=True, help="e.g. 'f0 f1 E0'")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("star", help="star involution")
    common(p)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("walls", help="wall/domain structure")
    common(p)
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("graph", help="truncated component graph")
    common(p)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("extremal", help="bounded extremality check")
    common(p)
    p.add_argument("--word-bound", type=int, default=6)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("bmax", help="B^max enumeration / membership")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True, help="m,l")
    p.add_argument("--c-bound", type=int, default=1)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--word-bound", type=int, default=4)
    p.add_argument("--contains", action="store_true")
    p.set_defaults(func=cmd_bmax)

    p = sub.add_parser("pw-verify", help="Peter-Weyl slice verification")
    p.add_argument("--lambda", dest="lam", required=True, help="m,l")
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--word-bound", type=int, default=8)
    p.set_defaults(func=cmd_pw_verify)

    p = sub.add_parser("oracle-check", help="signature rule vs tensor oracle")
    p.add_argument("--support", type=int, default=4)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seed-file", help="file holding an integer RNG seed")
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
