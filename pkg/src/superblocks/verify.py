"""Property suites: one callable per acceptance criterion.

Each check returns a CheckResult and is deterministic for a fixed seed.
The CLI `verify` command runs them all; the acceptance test module calls
them one by one.
"""

from __future__ import annotations

import io
import json
import random
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

from . import serial
from .characters import bracket_weight, shift, zhat_char
from .linkage import (
    Box,
    EvenLink,
    FingerprintMismatch,
    InvalidMoveError,
    Linked,
    OddLink,
    apply_move,
    check_move,
    companion,
    defect,
    even_coset_witness,
    even_linked,
    fingerprint,
    lower_reflection,
    minimal_companion_level,
    odd_neighbors,
    same_block,
)
from .roots import (
    adjacency_chain,
    all_permutations,
    block_permutations,
    dmn_representatives,
    even_positive_roots,
    is_minimal_coset_rep,
    longest_dmn,
    longest_element,
    simple_roots,
    verify_adjacency_chain,
)
from .weights import Shape, Weight, degree, is_dominant


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_weight(rng: random.Random, shape: Shape, lo: int, hi: int) -> Weight:
    return Weight(tuple(rng.randint(lo, hi) for _ in range(shape.size)), shape)


def _random_dominant(rng: random.Random, shape: Shape, lo: int, hi: int) -> Weight:
    coords = [rng.randint(lo, hi) for _ in range(shape.size)]
    first = sorted(coords[: shape.m], reverse=True)
    second = sorted(coords[shape.m :], reverse=True)
    return Weight(tuple(first + second), shape)


def _random_finite_defect(rng: random.Random, shape: Shape, lo: int, hi: int) -> Weight:
    while True:
        lam = _random_weight(rng, shape, lo, hi)
        if defect(lam).is_finite:
            return lam


def _subseed(seed: int, *parts: int) -> int:
    out = seed
    for part in parts:
        out = out * 1000003 + part + 12345
    return out & 0x7FFFFFFF


_CHAR_SHAPES = ((1, 1), (2, 1), (1, 2), (2, 2))


def _char_instances(seed: int):
    """The (shape, lam) sample grid shared by the character criteria."""
    for m, n in _CHAR_SHAPES:
        for p in (3, 5):
            for r in (1, 2):
                shape = Shape(m, n, p, r)
                rng = random.Random(_subseed(seed, m, n, p, r))
                for _ in range(20):
                    yield shape, _random_weight(rng, shape, -4, 4)


def check_character_identity(seed: int = 0) -> CheckResult:
    """Criterion 1: the induced character does not depend on the Borel once
    the highest weight is bracket-shifted."""
    checked = 0
    for shape, lam in _char_instances(seed):
        reference = zhat_char(lam, None, shape.r)
        for w in all_permutations(shape):
            if zhat_char(bracket_weight(lam, w, shape.r), w, shape.r) != reference:
                return CheckResult(
                    "character_identity",
                    False,
                    f"mismatch at shape {shape}, lam {lam}, w {w}",
                )
            checked += 1
    return CheckResult("character_identity", True, f"{checked} (lam, w) instances equal")


def check_dimension_identity(seed: int = 0) -> CheckResult:
    """Criterion 2: evaluation at all-ones equals p^(rN) * 2^(mn)."""
    checked = 0
    for shape, lam in _char_instances(seed):
        n_even = shape.m * (shape.m - 1) // 2 + shape.n * (shape.n - 1) // 2
        expected = shape.p ** (shape.r * n_even) * 2 ** (shape.m * shape.n)
        for w in all_permutations(shape):
            value = zhat_char(bracket_weight(lam, w, shape.r), w, shape.r).evaluate_at_ones()
            if value != expected:
                return CheckResult(
                    "dimension_identity",
                    False,
                    f"dimension {value} != {expected} at shape {shape}, w {w}",
                )
            checked += 1
    return CheckResult("dimension_identity", True, f"{checked} dimensions match")


def check_tensor_shift(seed: int = 0) -> CheckResult:
    """Criterion 3: adding p^r mu to the highest weight equals the monomial shift."""
    rng = random.Random(_subseed(seed, 3))
    combos = [(m, n, p, r) for m, n in ((1, 1), (2, 1), (2, 2)) for p in (3,) for r in (1, 2)]
    for k in range(100):
        m, n, p, r = combos[k % len(combos)]
        shape = Shape(m, n, p, r)
        lam = _random_weight(rng, shape, -3, 3)
        mu = _random_weight(rng, shape, -3, 3)
        w = rng.choice(list(all_permutations(shape)))
        direct = zhat_char(lam + (p**r) * mu, w, r)
        shifted = shift(zhat_char(lam, w, r), mu, r)
        if direct != shifted:
            return CheckResult(
                "tensor_shift", False, f"mismatch at shape {shape}, lam {lam}, mu {mu}, w {w}"
            )
    return CheckResult("tensor_shift", True, "100 random (lam, mu, w) triples agree")


def check_adjacency_chain(seed: int = 0) -> CheckResult:
    """Criterion 4: the Borel walk flips one simple root per step, reaches the
    longest coset representative after the odd phase and the longest element
    at the end, for every shape up to (3, 3)."""
    total_steps = 0
    for m in range(1, 4):
        for n in range(1, 4):
            shape = Shape(m, n, 3)
            chain = adjacency_chain(shape)
            try:
                verify_adjacency_chain(chain)
            except RuntimeError as exc:
                return CheckResult("adjacency_chain", False, f"shape {shape}: {exc}")
            mid = chain.permutations[m * n]
            # independent oracle for the longest representative: maximize
            # inversions over the full enumeration of D_{m,n}
            by_length = max(dmn_representatives(shape), key=lambda w: w.n_inversions())
            if not (
                is_minimal_coset_rep(mid)
                and mid == by_length
                and mid == longest_dmn(shape)
                and mid.n_inversions() == m * n
                and chain.permutations[-1] == longest_element(shape)
            ):
                return CheckResult(
                    "adjacency_chain", False, f"shape {shape}: endpoint identities fail"
                )
            total_steps += len(chain.flipped_roots)
    return CheckResult("adjacency_chain", True, f"9 shapes, {total_steps} verified steps")


def _random_even_move(rng: random.Random, lam: Weight, attempts: int = 40):
    """A random accepted even move from a dominant weight, or None."""
    shape = lam.shape
    d = defect(lam)
    witnesses = list(block_permutations(shape))

    def block_translation(lo: int, hi: int, q: int) -> list[int]:
        size = hi - lo + 1
        t = [0] * size
        if size >= 2 and rng.random() < 0.8:
            a, b = rng.sample(range(size), 2)
            k = rng.randint(1, 2) * q
            t[a], t[b] = k, -k
        return t

    for _ in range(attempts):
        w = rng.choice(witnesses)
        t1 = block_translation(1, shape.m, shape.p ** (int(d.d_plus) + 1))
        t2 = block_translation(shape.m + 1, shape.size, shape.p ** (int(d.d_minus) + 1))
        move = EvenLink(w, tuple(t1 + t2))
        mu = apply_move(lam, move)
        if is_dominant(mu):
            return move
    return None


def check_fingerprint_invariance(seed: int = 0) -> CheckResult:
    """Criterion 5: both move kinds preserve the fingerprint, and odd moves
    shift the block subtotals by (-sign, +sign)."""
    rng = random.Random(_subseed(seed, 5))
    n_odd = n_even = 0
    target = 1000
    combos = [(m, n, p) for m, n in ((1, 1), (2, 1), (2, 2)) for p in (3, 5)]
    while n_odd + n_even < target:
        for m, n, p in combos:
            shape = Shape(m, n, p)
            lam = _random_dominant(rng, shape, -8, 8)
            fp = fingerprint(lam)
            deg = degree(lam)
            for mu, root, sign in odd_neighbors(lam)[:2]:
                mv = OddLink(root, sign)
                check_move(lam, mv)
                if fingerprint(mu) != fp:
                    return CheckResult(
                        "fingerprint_invariance", False, f"odd move changed {lam} -> {mu}"
                    )
                deg_mu = degree(mu)
                if (deg_mu.plus - deg.plus, deg_mu.minus - deg.minus) != (sign, -sign):
                    return CheckResult(
                        "fingerprint_invariance",
                        False,
                        f"odd move subtotal shift wrong at {lam} -> {mu}",
                    )
                n_odd += 1
            move = _random_even_move(rng, lam)
            if move is not None:
                mu = check_move(lam, move)
                if fingerprint(mu) != fp or degree(mu).total != deg.total:
                    return CheckResult(
                        "fingerprint_invariance", False, f"even move changed {lam} -> {mu}"
                    )
                n_even += 1
    return CheckResult(
        "fingerprint_invariance", True, f"{n_odd} odd and {n_even} even moves preserved"
    )


def check_companion_correctness(seed: int = 0) -> CheckResult:
    """Criterion 6: companions are dominant, defect-preserving,
    coset-preserving, and even-linked to companions built at larger t."""
    rng = random.Random(_subseed(seed, 6))
    combos = [(m, n, p) for m, n in ((1, 1), (2, 1), (2, 2), (3, 2)) for p in (3, 5)]
    count = 0
    while count < 500:
        for m, n, p in combos:
            shape = Shape(m, n, p)
            lam = _random_finite_defect(rng, shape, -10, 10)
            first = companion(lam)
            if not is_dominant(first):
                return CheckResult("companion_correctness", False, f"{first} not dominant")
            if defect(first) != defect(lam):
                return CheckResult(
                    "companion_correctness", False, f"defect changed for {lam}"
                )
            if even_coset_witness(lam, first) is None:
                return CheckResult(
                    "companion_correctness", False, f"coset not preserved for {lam}"
                )
            t = minimal_companion_level(lam) + rng.randint(1, 2)
            second = companion(lam, t)
            if defect(second) != defect(lam) or not is_dominant(second):
                return CheckResult(
                    "companion_correctness", False, f"companion at t={t} broken for {lam}"
                )
            if even_linked(first, second) is None:
                return CheckResult(
                    "companion_correctness",
                    False,
                    f"companions {first} and {second} of {lam} are not even-linked",
                )
            count += 1
    return CheckResult("companion_correctness", True, f"{count} weights checked")


def check_lower_reflection_linkage(seed: int = 0) -> CheckResult:
    """Criterion 7: lowering along an even root keeps companions even-linked."""
    rng = random.Random(_subseed(seed, 7))
    count = 0
    shapes = [Shape(2, 1, 3), Shape(2, 2, 3)]
    while count < 200:
        for shape in shapes:
            lam = _random_finite_defect(rng, shape, -8, 8)
            alpha = rng.choice(even_positive_roots(shape))
            e = rng.randint(1, 2)
            lowered = lower_reflection(lam, alpha, e)
            if not defect(lowered).is_finite:
                continue
            if even_linked(companion(lam), companion(lowered)) is None:
                return CheckResult(
                    "lower_reflection_linkage",
                    False,
                    f"companions split at lam {lam}, alpha {alpha}, e {e}",
                )
            count += 1
    return CheckResult("lower_reflection_linkage", True, f"{count} (lam, alpha, e) samples")


def check_gl11_block_chain(seed: int = 0) -> CheckResult:
    """Criterion 8: the rank-one block decision in characteristic 3."""
    shape = Shape(1, 1, 3)
    box = Box.uniform(2, -5, 5)
    lam = Weight((2, 1), shape)
    result = same_block(lam, Weight((1, 2), shape), box)
    if not isinstance(result, Linked):
        return CheckResult("gl11_block_chain", False, f"(2,1)~(1,2) gave {result}")
    chain = result.chain
    if len(chain) != 1 or not isinstance(chain.moves[0], OddLink):
        return CheckResult(
            "gl11_block_chain", False, f"expected a single odd move, got {chain.moves}"
        )
    chain.validate()
    mismatch = same_block(lam, Weight((1, 1), shape), box)
    if not isinstance(mismatch, FingerprintMismatch):
        return CheckResult("gl11_block_chain", False, f"(2,1) vs (1,1) gave {mismatch}")
    return CheckResult("gl11_block_chain", True, "odd chain and fingerprint separation found")


def _random_even_linked_pair(rng: random.Random, shape: Shape):
    lam = _random_dominant(rng, shape, -6, 6)
    move = _random_even_move(rng, lam)
    if move is None:
        return None
    return lam, apply_move(lam, move)


def check_even_linkage_relation(seed: int = 0) -> CheckResult:
    """Criterion 9: reflexive, symmetric, witness-composition transitive,
    and defect-equal on positives."""
    rng = random.Random(_subseed(seed, 9))
    shapes = [Shape(2, 1, 3), Shape(2, 2, 3), Shape(2, 2, 5)]
    n_pairs = n_triples = 0
    while n_pairs < 200:
        shape = shapes[n_pairs % len(shapes)]
        lam = _random_dominant(rng, shape, -6, 6)
        if even_linked(lam, lam) is None:
            return CheckResult("even_linkage_relation", False, f"not reflexive at {lam}")
        if rng.random() < 0.5:
            pair = _random_even_linked_pair(rng, shape)
            if pair is None:
                continue
            lam, mu = pair
        else:
            mu = _random_dominant(rng, shape, -6, 6)
        forward = even_linked(lam, mu)
        backward = even_linked(mu, lam)
        if (forward is None) != (backward is None):
            return CheckResult(
                "even_linkage_relation", False, f"not symmetric at {lam}, {mu}"
            )
        if forward is not None and defect(lam) != defect(mu):
            return CheckResult(
                "even_linkage_relation", False, f"defects differ for linked {lam}, {mu}"
            )
        n_pairs += 1
    while n_triples < 100:
        shape = shapes[n_triples % len(shapes)]
        pair = _random_even_linked_pair(rng, shape)
        if pair is None:
            continue
        lam, mu = pair
        second = _random_even_move(rng, mu)
        if second is None:
            continue
        nu = apply_move(mu, second)
        w1 = even_linked(lam, mu)
        w2 = even_linked(mu, nu)
        if w1 is None or w2 is None:
            return CheckResult(
                "even_linkage_relation", False, f"constructed pair not linked: {lam}, {mu}"
            )
        composed_w = w2.witness * w1.witness
        composed_t = tuple(
            a + b for a, b in zip(w2.witness.permute(w1.translation), w2.translation)
        )
        composed = EvenLink(composed_w, composed_t)
        expected = apply_move(lam, composed)
        try:
            check_move(lam, composed)
        except InvalidMoveError as exc:
            return CheckResult(
                "even_linkage_relation", False, f"composed witness invalid: {exc}"
            )
        if expected != nu or even_linked(lam, nu) is None:
            return CheckResult(
                "even_linkage_relation", False, f"composition fails at {lam}, {mu}, {nu}"
            )
        n_triples += 1
    return CheckResult(
        "even_linkage_relation", True, f"{n_pairs} pairs and {n_triples} triples checked"
    )


def check_order_oracle(seed: int = 0) -> CheckResult:
    """Criterion 10: the prefix-sum order test agrees with brute-force
    enumeration of nonnegative simple-root combinations."""
    from .roots import leq_w

    checked = 0
    for m, n in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)):
        shape = Shape(m, n, 3)
        size = shape.size
        deltas = _l1_ball(size, 6)
        for w in all_permutations(shape):
            basis = [r.as_weight().coords for r in simple_roots(w)]
            reachable = set()
            _combinations(basis, 6, (0,) * size, 0, reachable)
            zero = Weight.zero(shape)
            for d in deltas:
                lam = Weight(d, shape)
                if leq_w(zero, lam, w) != (d in reachable):
                    return CheckResult(
                        "order_oracle", False, f"disagreement at shape {shape}, w {w}, d {d}"
                    )
                checked += 1
    return CheckResult("order_oracle", True, f"{checked} (delta, w) instances agree")


def _l1_ball(size: int, radius: int):
    def rec(k: int, budget: int):
        if k == size:
            yield ()
            return
        for v in range(-budget, budget + 1):
            for rest in rec(k + 1, budget - abs(v)):
                yield (v,) + rest

    return list(rec(0, radius))


def _combinations(basis, bound, current, idx, out):
    if idx == len(basis):
        out.add(current)
        return
    vec = basis[idx]
    point = current
    for c in range(bound + 1):
        _combinations(basis, bound, point, idx + 1, out)
        point = tuple(a + b for a, b in zip(point, vec))


def _collect_chains(seed: int) -> list[tuple[Shape, "object"]]:
    rng = random.Random(_subseed(seed, 11))
    chains = []
    gl11 = Shape(1, 1, 3)
    result = same_block(Weight((2, 1), gl11), Weight((1, 2), gl11), Box.uniform(2, -5, 5))
    assert isinstance(result, Linked)
    chains.append((gl11, result.chain))
    shapes = [Shape(2, 1, 3), Shape(2, 2, 3)]
    attempts = 0
    while len(chains) < 8 and attempts < 200:
        attempts += 1
        shape = shapes[attempts % len(shapes)]
        lam = _random_dominant(rng, shape, -3, 3)
        box = Box.around([lam], 2 * shape.p)
        targets = [mu for mu, _, _ in odd_neighbors(lam)]
        move = _random_even_move(rng, lam)
        if move is not None:
            targets.append(apply_move(lam, move))
        for mu in targets:
            if not box.contains(mu):
                continue
            found = same_block(lam, mu, box)
            if isinstance(found, Linked) and len(found.chain) >= 1:
                chains.append((shape, found.chain))
                break
    return chains


def _corrupt_records(records: list[dict], rng: random.Random) -> list[dict]:
    """Damage one step: either the stored weight or the move data."""
    out = json.loads(json.dumps(records))
    step = rng.randrange(1, len(out))
    rec = out[step]
    mode = rng.choice(["weight", "move"])
    if mode == "weight":
        parts = rec["weight"].split("|")
        nums = parts[0].split(",")
        nums[0] = str(int(nums[0]) + 1)
        parts[0] = ",".join(nums)
        rec["weight"] = "|".join(parts)
    elif rec["move"]["type"] == "even":
        rec["move"]["translation"][0] += 1
    else:
        # sign flip: either the move itself fails or the stored weight no
        # longer matches the replay
        rec["move"]["sign"] = -rec["move"]["sign"]
    return out


def check_serialization_roundtrip(seed: int = 0) -> CheckResult:
    """Criterion 11: JSON round-trips for weights, chains and characters,
    and verify-chain accepts emitted chains while rejecting corruptions."""
    from . import cli

    rng = random.Random(_subseed(seed, 110))
    for _ in range(50):
        shape = Shape(rng.randint(1, 3), rng.randint(1, 3), 3)
        lam = _random_weight(rng, shape, -9, 9)
        if serial.parse_literal(serial.to_literal(lam), shape) != lam:
            return CheckResult("serialization_roundtrip", False, f"weight {lam} round trip")
    for _ in range(20):
        shape = Shape(rng.randint(1, 2), rng.randint(1, 2), 3, rng.randint(1, 2))
        lam = _random_weight(rng, shape, -3, 3)
        char = zhat_char(lam, rng.choice(list(all_permutations(shape))), shape.r)
        data = json.loads(json.dumps(serial.character_to_json(char)))
        if serial.character_from_json(data, shape) != char:
            return CheckResult("serialization_roundtrip", False, "character round trip")
    chains = _collect_chains(seed)
    if len(chains) < 4:
        return CheckResult(
            "serialization_roundtrip", False, f"only {len(chains)} sample chains found"
        )
    n_rejected = 0
    with tempfile.TemporaryDirectory() as tmp:
        for k, (shape, chain) in enumerate(chains):
            records = serial.chain_to_records(chain)
            data = json.loads(json.dumps(records))
            if serial.chain_from_records(data, shape) != chain:
                return CheckResult("serialization_roundtrip", False, "chain round trip")
            shape_arg = f"{shape.m},{shape.n}"
            path = f"{tmp}/chain{k}.json"
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(records, fh)
            with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
                code = cli.main(
                    ["verify-chain", "--shape", shape_arg, "-p", str(shape.p), path]
                )
            if code != 0:
                return CheckResult(
                    "serialization_roundtrip", False, f"emitted chain rejected ({records})"
                )
            if len(chain) >= 1:
                corrupted = _corrupt_records(records, rng)
                bad_path = f"{tmp}/chain{k}_bad.json"
                with open(bad_path, "w", encoding="utf-8") as fh:
                    json.dump(corrupted, fh)
                with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
                    bad_code = cli.main(
                        ["verify-chain", "--shape", shape_arg, "-p", str(shape.p), bad_path]
                    )
                if bad_code == 0:
                    return CheckResult(
                        "serialization_roundtrip",
                        False,
                        f"corrupted chain accepted ({corrupted})",
                    )
                n_rejected += 1
    return CheckResult(
        "serialization_roundtrip",
        True,
        f"{len(chains)} chains re-verified, {n_rejected} corruptions rejected",
    )


ALL_CHECKS = (
    check_character_identity,
    check_dimension_identity,
    check_tensor_shift,
    check_adjacency_chain,
    check_fingerprint_invariance,
    check_companion_correctness,
    check_lower_reflection_linkage,
    check_gl11_block_chain,
    check_even_linkage_relation,
    check_order_oracle,
    check_serialization_roundtrip,
)


def run_all(seed: int = 0) -> list[CheckResult]:
    return [check(seed) for check in ALL_CHECKS]
