"""Command-line front end: parse shapes and weights, dispatch to the
library, emit text, JSON or DOT.

Exit codes: 0 for a definite answer, 2 for invalid input, 3 when a block
search is inconclusive within its box, 1 for failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serial
from .characters import zhat_char
from .linkage import (
    Box,
    FingerprintMismatch,
    InconclusiveWithinBox,
    InfiniteDefectError,
    Linked,
    companion,
    defect,
    enumerate_block_classes,
    odd_neighbors,
    same_block,
)
from .roots import adjacency_chain
from .weights import Shape, parse_literal, to_literal


def _add_common(sp, with_r: bool = True):
    sp.add_argument("--shape", required=True, metavar="m,n", help="block sizes, e.g. 2,1")
    sp.add_argument("-p", type=int, required=True, help="odd prime characteristic")
    if with_r:
        sp.add_argument("-r", type=int, default=1, help="Frobenius level (default 1)")
    sp.add_argument(
        "--format",
        choices=("text", "json", "dot"),
        default="text",
        help="output format (default text)",
    )


def _shape_of(args) -> Shape:
    parts = args.shape.split(",")
    if len(parts) != 2:
        raise ValueError(f"malformed shape {args.shape!r}, expected m,n")
    m, n = (int(x) for x in parts)
    r = getattr(args, "r", 1)
    return Shape(m, n, args.p, r)


def _emit(args, text_out: str, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        print(text_out)


def cmd_defect(args) -> int:
    shape = _shape_of(args)
    d = defect(parse_literal(args.weight, shape))
    _emit(args, str(d), serial.defect_to_json(d))
    return 0


def cmd_linked(args) -> int:
    shape = _shape_of(args)
    lam = parse_literal(args.left, shape)
    mu = parse_literal(args.right, shape)
    if args.box:
        box = serial.parse_box(args.box, shape.size)
    else:
        box = Box.around([lam, mu], 2 * shape.p)
    result = same_block(lam, mu, box)
    if isinstance(result, Linked):
        _emit(
            args,
            f"linked: chain of length {len(result.chain)}\n"
            + serial.chain_to_text(result.chain),
            {"result": "linked", "chain": serial.chain_to_records(result.chain)},
        )
        return 0
    if isinstance(result, FingerprintMismatch):
        _emit(
            args,
            f"not linked: fingerprint mismatch\n  left:  {result.left}\n  right: {result.right}",
            {
                "result": "fingerprint_mismatch",
                "left": serial.fingerprint_to_json(result.left),
                "right": serial.fingerprint_to_json(result.right),
            },
        )
        return 0
    assert isinstance(result, InconclusiveWithinBox)
    _emit(
        args,
        f"inconclusive within box ({result.explored} dominant weights explored)",
        {"result": "inconclusive", "explored": result.explored},
    )
    return 3


def cmd_odd_moves(args) -> int:
    shape = _shape_of(args)
    lam = parse_literal(args.weight, shape)
    moves = odd_neighbors(lam)
    text = "\n".join(
        f"{to_literal(mu)}  via {'+' if sign > 0 else '-'}{root}" for mu, root, sign in moves
    )
    _emit(
        args,
        text if moves else "(no accepted odd moves)",
        [
            {"weight": to_literal(mu), "root": [root.i, root.j], "sign": sign}
            for mu, root, sign in moves
        ],
    )
    return 0


def cmd_companion(args) -> int:
    shape = _shape_of(args)
    lam = parse_literal(args.weight, shape)
    out = companion(lam, args.t)
    _emit(args, to_literal(out), {"weight": to_literal(out)})
    return 0


def cmd_char(args) -> int:
    shape = _shape_of(args)
    lam = parse_literal(args.weight, shape)
    w = serial.parse_permutation(args.w, shape)
    c = zhat_char(lam, w, shape.r)
    _emit(args, str(c), serial.character_to_json(c))
    return 0


def cmd_chain(args) -> int:
    shape = _shape_of(args)
    chain = adjacency_chain(shape)
    lines = [f"y_0 = {chain.permutations[0].one_line()}"]
    for t, (root, perm) in enumerate(
        zip(chain.flipped_roots, chain.permutations[1:]), start=1
    ):
        parity = "odd" if root.is_odd else "even"
        lines.append(f"step {t}: flip {root} ({parity}) -> y_{t} = {perm.one_line()}")
    _emit(
        args,
        "\n".join(lines),
        {
            "permutations": [p.one_line() for p in chain.permutations],
            "flips": [
                {"root": [r.i, r.j], "parity": "odd" if r.is_odd else "even"}
                for r in chain.flipped_roots
            ],
        },
    )
    return 0


def cmd_blocks(args) -> int:
    shape = _shape_of(args)
    box = serial.parse_box(args.box, shape.size)
    result = enumerate_block_classes(shape, box)
    lines = []
    for k, (cls, fp) in enumerate(zip(result.classes, result.fingerprints)):
        members = " ".join(to_literal(w) for w in cls)
        lines.append(f"class {k} [{fp}]: {members}")
    for group in result.unresolved:
        ids = ", ".join(str(k) for k in group)
        lines.append(f"possibly equal, unresolved within box: classes {ids}")
    _emit(
        args,
        "\n".join(lines),
        {
            "classes": [
                {
                    "fingerprint": serial.fingerprint_to_json(fp),
                    "weights": [to_literal(w) for w in cls],
                }
                for cls, fp in zip(result.classes, result.fingerprints)
            ],
            "unresolved": [list(g) for g in result.unresolved],
        },
    )
    return 0


def cmd_blocks_graph(args) -> int:
    shape = _shape_of(args)
    box = serial.parse_box(args.box, shape.size)
    print(serial.blocks_graph_dot(shape, box))
    return 0


def cmd_verify(args) -> int:
    from . import verify

    results = verify.run_all(seed=args.seed)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: {res.detail}")
        failed += 0 if res.passed else 1
    return 0 if failed == 0 else 1


def cmd_verify_chain(args) -> int:
    shape = _shape_of(args)
    if args.file == "-":
        data = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = fh.read()
    records = json.loads(data)
    problems = serial.verify_chain_records(records, shape)
    if problems:
        for problem in problems:
            print(f"invalid chain: {problem}", file=sys.stderr)
        return 1
    print(f"chain valid ({max(len(records) - 1, 0)} steps)")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superblocks",
        description=(
            "Exact block and character combinatorics for dominant weights "
            "of GL(m|n) in odd characteristic."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("defect", help="per-block defect of a weight")
    _add_common(sp)
    sp.add_argument("weight")
    sp.set_defaults(func=cmd_defect)

    sp = sub.add_parser("linked", help="certified block-membership search")
    _add_common(sp)
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--box", help="search box lo..hi (uniform) or one range per coordinate")
    sp.set_defaults(func=cmd_linked)

    sp = sub.add_parser("odd-moves", help="accepted odd moves from a dominant weight")
    _add_common(sp)
    sp.add_argument("weight")
    sp.set_defaults(func=cmd_odd_moves)

    sp = sub.add_parser("companion", help="dominant companion of a weight")
    _add_common(sp)
    sp.add_argument("weight")
    sp.add_argument("--t", type=int, default=None, help="explicit shift exponent")
    sp.set_defaults(func=cmd_companion)

    sp = sub.add_parser("char", help="formal character of the induced family")
    _add_common(sp)
    sp.add_argument("weight")
    sp.add_argument("--w", default="id", help="Borel choice: one-line permutation or 'id'")
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("chain", help="adjacent walk of Borel positive systems")
    _add_common(sp)
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("blocks", help="box-restricted block classes")
    _add_common(sp)
    sp.add_argument("--box", required=True)
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("blocks-graph", help="DOT graph of moves inside a box")
    _add_common(sp)
    sp.add_argument("--box", required=True)
    sp.set_defaults(func=cmd_blocks_graph)

    sp = sub.add_parser("verify", help="run every property suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("verify-chain", help="replay a serialized chain")
    _add_common(sp)
    sp.add_argument("file", nargs="?", default="-", help="JSON chain file, '-' for stdin")
    sp.set_defaults(func=cmd_verify_chain)

    return parser


def _absorb_dashed_values(argv: list[str]) -> list[str]:
    # "--box -5..5" would otherwise be read as two option strings
    out = []
    skip = False
    for k, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--box" and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"--box={argv[k + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_absorb_dashed_values(list(argv)))
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except (ValueError, InfiniteDefectError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
