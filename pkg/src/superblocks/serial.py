"""Serialization: weight literals, one-line permutations, chain records,
character term lists and the DOT export of box-restricted block graphs.

Chains serialize to a JSON array of {weight, move} records whose first
record has a null move.  Characters serialize to a list of
{exponent, coeff} objects in lexicographic exponent order.
"""

from __future__ import annotations

from .characters import CharacterPoly
from .linkage import (
    Box,
    Defect,
    EvenLink,
    Fingerprint,
    INFINITE,
    LinkageChain,
    Move,
    OddLink,
    dominant_weights_in,
    even_neighbors,
    odd_neighbors,
)
from .roots import Permutation, Root
from .weights import Shape, parse_literal, to_literal


def permutation_to_one_line(w: Permutation) -> str:
    return w.one_line()


def parse_permutation(text: str, shape: Shape) -> Permutation:
    s = text.strip()
    if s == "id":
        return Permutation.identity(shape)
    try:
        images = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation literal {text!r}") from None
    return Permutation(images, shape)


def move_to_json(move: Move) -> dict:
    if isinstance(move, OddLink):
        return {"type": "odd", "root": [move.root.i, move.root.j], "sign": move.sign}
    if isinstance(move, EvenLink):
        return {
            "type": "even",
            "witness": move.witness.one_line(),
            "translation": list(move.translation),
        }
    raise TypeError(f"unknown move {move!r}")


def move_from_json(data: dict, shape: Shape) -> Move:
    kind = data.get("type")
    if kind == "odd":
        i, j = data["root"]
        return OddLink(Root(int(i), int(j), shape), int(data["sign"]))
    if kind == "even":
        witness = parse_permutation(data["witness"], shape)
        return EvenLink(witness, tuple(int(x) for x in data["translation"]))
    raise ValueError(f"unknown move type {kind!r}")


def chain_to_records(chain: LinkageChain) -> list[dict]:
    records = [{"weight": to_literal(chain.start), "move": None}]
    for move, weight in zip(chain.moves, chain.weights()[1:]):
        records.append({"weight": to_literal(weight), "move": move_to_json(move)})
    return records


def chain_from_records(records: list[dict], shape: Shape) -> LinkageChain:
    if not records:
        raise ValueError("a chain needs at least the starting record")
    head = records[0]
    if head.get("move") is not None:
        raise ValueError("the first chain record must have a null move")
    start = parse_literal(head["weight"], shape)
    moves = tuple(move_from_json(rec["move"], shape) for rec in records[1:])
    return LinkageChain(start, moves)


def verify_chain_records(records: list[dict], shape: Shape) -> list[str]:
    """Replay a serialized chain; returns a list of problems (empty = valid).

    Each stored weight is compared against the replayed one, and each
    move goes through the move validator.
    """
    from .linkage import InvalidMoveError, check_move, is_dominant

    problems: list[str] = []
    try:
        chain = chain_from_records(records, shape)
    except ValueError as exc:
        return [str(exc)]
    if not is_dominant(chain.start):
        problems.append(f"start {to_literal(chain.start)} is not dominant")
    current = chain.start
    for t, (move, rec) in enumerate(zip(chain.moves, records[1:]), start=1):
        try:
            current = check_move(current, move)
        except InvalidMoveError as exc:
            problems.append(f"step {t}: {exc}")
            break
        stored = parse_literal(rec["weight"], shape)
        if stored != current:
            problems.append(
                f"step {t}: stored weight {to_literal(stored)} does not match "
                f"replayed weight {to_literal(current)}"
            )
            break
    return problems


def character_to_json(char: CharacterPoly) -> list[dict]:
    return [{"exponent": list(exp), "coeff": coeff} for exp, coeff in char.items_sorted()]


def character_from_json(data: list[dict], shape: Shape) -> CharacterPoly:
    terms = {}
    for item in data:
        exp = tuple(int(x) for x in item["exponent"])
        terms[exp] = terms.get(exp, 0) + int(item["coeff"])
    return CharacterPoly(shape, terms)


def defect_to_json(d: Defect) -> dict:
    enc = lambda v: "inf" if v == INFINITE else int(v)
    return {"d_plus": enc(d.d_plus), "d_minus": enc(d.d_minus)}


def fingerprint_to_json(fp: Fingerprint) -> dict:
    return {"total": fp.total, "residues": list(fp.residues)}


def parse_box(text: str, size: int) -> Box:
    """Parse ``lo..hi`` (uniform) or a comma list of one range per coordinate."""

    def one_range(part: str) -> tuple[int, int]:
        if ".." not in part:
            raise ValueError(f"malformed range {part!r}, expected lo..hi")
        lo_s, _, hi_s = part.partition("..")
        return int(lo_s), int(hi_s)

    parts = [p.strip() for p in text.split(",")]
    try:
        ranges = [one_range(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"malformed box {text!r}: {exc}") from None
    if len(ranges) == 1:
        lo, hi = ranges[0]
        return Box.uniform(size, lo, hi)
    if len(ranges) != size:
        raise ValueError(f"box needs 1 or {size} ranges, got {len(ranges)}")
    return Box(tuple(r[0] for r in ranges), tuple(r[1] for r in ranges))


def chain_to_text(chain: LinkageChain) -> str:
    lines = [to_literal(chain.start)]
    for move, weight in zip(chain.moves, chain.weights()[1:]):
        if isinstance(move, OddLink):
            label = f"odd({'+' if move.sign > 0 else '-'}{move.root})"
        else:
            label = f"even(w={move.witness.one_line()}, delta={list(move.translation)})"
        lines.append(f"  --{label}--> {to_literal(weight)}")
    return "\n".join(lines)


def blocks_graph_dot(shape: Shape, box: Box) -> str:
    """DOT graph of dominant weights in a box with one edge per move.

    Connected components coincide with the box-restricted block classes.
    """
    weights = dominant_weights_in(shape, box)
    inside = set(weights)
    lines = ["graph blocks {"]
    for w in weights:
        lines.append(f'  "{to_literal(w)}";')
    seen: set[tuple] = set()
    for w in weights:
        for mu, root, sign in odd_neighbors(w):
            if mu not in inside:
                continue
            key = tuple(sorted((w.coords, mu.coords)))
            if key in seen:
                continue
            seen.add(key)
            lines.append(
                f'  "{to_literal(w)}" -- "{to_literal(mu)}" [label="odd({root})"];'
            )
        for mu, move in even_neighbors(w, box):
            key = tuple(sorted((w.coords, mu.coords)))
            if key in seen:
                continue
            seen.add(key)
            lines.append(
                f'  "{to_literal(w)}" -- "{to_literal(mu)}" '
                f'[label="even({move.witness.one_line()})"];'
            )
    lines.append("}")
    return "\n".join(lines)


__all__ = [
    "blocks_graph_dot",
    "chain_from_records",
    "chain_to_records",
    "chain_to_text",
    "character_from_json",
    "character_to_json",
    "defect_to_json",
    "fingerprint_to_json",
    "move_from_json",
    "move_to_json",
    "parse_box",
    "parse_literal",
    "parse_permutation",
    "permutation_to_one_line",
    "to_literal",
    "verify_chain_records",
]
