import json
import random

import pytest

from superblocks import (
    Box,
    Linked,
    Shape,
    Weight,
    same_block,
    zhat_char,
)
from superblocks import serial

GL11 = Shape(1, 1, 3)
GL21 = Shape(2, 1, 3)


def test_permutation_parsing():
    assert serial.parse_permutation("id", GL21).is_identity
    assert serial.parse_permutation("3,1,2", GL21).images == (3, 1, 2)
    with pytest.raises(ValueError):
        serial.parse_permutation("3,1", GL21)
    with pytest.raises(ValueError):
        serial.parse_permutation("a,b,c", GL21)


def test_chain_records_round_trip():
    result = same_block(Weight((2, 1), GL11), Weight((1, 2), GL11), Box.uniform(2, -5, 5))
    assert isinstance(result, Linked)
    records = serial.chain_to_records(result.chain)
    assert records[0] == {"weight": "2|1", "move": None}
    assert records[1]["move"]["type"] == "odd"
    reloaded = serial.chain_from_records(json.loads(json.dumps(records)), GL11)
    assert reloaded == result.chain


def test_even_move_round_trip():
    lam = Weight((1, 0, 0), GL21)
    mu = Weight((2, -1, 0), GL21)
    result = same_block(lam, mu, Box.uniform(3, -6, 6))
    assert isinstance(result, Linked)
    records = serial.chain_to_records(result.chain)
    reloaded = serial.chain_from_records(records, GL21)
    assert reloaded == result.chain
    assert not serial.verify_chain_records(records, GL21)


def test_verify_chain_records_flags_problems():
    result = same_block(Weight((2, 1), GL11), Weight((1, 2), GL11), Box.uniform(2, -5, 5))
    records = serial.chain_to_records(result.chain)
    broken = json.loads(json.dumps(records))
    broken[1]["weight"] = "0|3"
    assert serial.verify_chain_records(broken, GL11)
    badmove = json.loads(json.dumps(records))
    badmove[1]["move"]["root"] = [2, 1]
    assert serial.verify_chain_records(badmove, GL11)
    assert serial.verify_chain_records([], GL11)


def test_character_json_round_trip():
    rng = random.Random(3)
    for shape in (GL11, GL21):
        lam = Weight(tuple(rng.randint(-3, 3) for _ in range(shape.size)), shape)
        char = zhat_char(lam, None, 1)
        data = serial.character_to_json(char)
        exponents = [item["exponent"] for item in data]
        assert exponents == sorted(exponents)
        assert serial.character_from_json(json.loads(json.dumps(data)), shape) == char


def test_parse_box():
    assert serial.parse_box("-5..5", 2) == Box((-5, -5), (5, 5))
    assert serial.parse_box("0..2,-1..1,3..4", 3) == Box((0, -1, 3), (2, 1, 4))
    with pytest.raises(ValueError):
        serial.parse_box("0..2,-1..1", 3)
    with pytest.raises(ValueError):
        serial.parse_box("5", 2)


def test_defect_and_fingerprint_json():
    from superblocks import defect, fingerprint

    d = defect(Weight((0, 1, 0), GL21))
    assert serial.defect_to_json(d) == {"d_plus": "inf", "d_minus": 0}
    fp = fingerprint(Weight((1, 1), GL11))
    assert serial.fingerprint_to_json(fp) == {"total": 2, "residues": [0, 1, -1]}


def test_blocks_graph_dot():
    dot = serial.blocks_graph_dot(GL11, Box.uniform(2, 0, 2))
    assert dot.startswith("graph blocks {") and dot.endswith("}")
    assert '"2|1" -- "1|2"' in dot or '"1|2" -- "2|1"' in dot
    assert "odd(e1-e2)" in dot


def test_blocks_graph_with_no_dominant_weights_is_empty():
    # the box (0,1,0)..(0,1,0) holds a single non-dominant weight
    dot = serial.blocks_graph_dot(GL21, Box((0, 1, 0), (0, 1, 0)))
    assert dot == "graph blocks {\n}"


def test_chain_to_text_mentions_moves():
    result = same_block(Weight((2, 1), GL11), Weight((1, 2), GL11), Box.uniform(2, -5, 5))
    text = serial.chain_to_text(result.chain)
    assert "2|1" in text and "1|2" in text and "odd" in text
