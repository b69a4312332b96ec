"""Block machinery for dominant weights: defect, linkage moves, companions
and certified chain search.

Two kinds of moves generate the block relation on dominant weights.  An
even move sends lam to w.lam + delta for a block-preserving w and a
lattice translation delta whose block components are divisible by
p^{d+1} (d the corresponding defect entry) and sum to zero.  An odd move
adds or subtracts an odd positive root alpha subject to p dividing the
rho-shifted pairing, tested at the higher of the two weights.

The chain search is sound but deliberately incomplete: a positive answer
carries a replayable certificate, a fingerprint mismatch is a proof of
separation, and anything else is reported as inconclusive within the
search box.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .roots import (
    Permutation,
    Root,
    block_permutations,
    dot_action,
    odd_positive_roots,
)
from .weights import (
    Shape,
    Weight,
    _same_shape,
    degree,
    is_dominant,
    odd_shifted_pairing,
)

INFINITE = float("inf")


class InfiniteDefectError(ValueError):
    """A defect entry is infinite, so the translation lattice degenerates."""


class InvalidMoveError(ValueError):
    """A linkage move fails one of its side conditions."""


def p_adic_valuation(x: int, p: int):
    """Largest e with p^e dividing x; INFINITE for x = 0."""
    if x == 0:
        return INFINITE
    v = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class Defect:
    """Per-block defect (d_+ | d_-); entries are naturals or INFINITE."""

    d_plus: int | float
    d_minus: int | float

    @property
    def is_finite(self) -> bool:
        return self.d_plus != INFINITE and self.d_minus != INFINITE

    def __str__(self) -> str:
        fmt = lambda d: "inf" if d == INFINITE else str(d)
        return f"({fmt(self.d_plus)}|{fmt(self.d_minus)})"


def defect(lam: Weight) -> Defect:
    """Largest p-power dividing every within-block coroot pairing of lam + rho0.

    The pairing over positions i < j of one block is lam_i - lam_j + j - i.
    A block of size one has no pairings and contributes 0 by convention.
    """
    shape = lam.shape
    p = shape.p

    def block_min(lo: int, hi: int):
        pairs = [
            lam.entry(i) - lam.entry(j) + j - i
            for i in range(lo, hi + 1)
            for j in range(i + 1, hi + 1)
        ]
        if not pairs:
            return 0
        return min(p_adic_valuation(x, p) for x in pairs)

    return Defect(block_min(1, shape.m), block_min(shape.m + 1, shape.size))


@dataclass(frozen=True)
class OddLink:
    """Move lam -> lam + sign*alpha for an odd positive root alpha."""

    root: Root
    sign: int


@dataclass(frozen=True)
class EvenLink:
    """Move lam -> w.lam + translation inside the shifted even-block lattice."""

    witness: Permutation
    translation: tuple[int, ...]


Move = OddLink | EvenLink


def _in_shifted_root_lattice(delta: tuple[int, ...], shape: Shape, d: Defect) -> bool:
    # Each block of the type-A root lattice is the sum-zero sublattice, so
    # membership in p^{d+1} Z Phi is: entries divisible by p^{d+1}, block sum zero.
    if not d.is_finite:
        raise InfiniteDefectError(f"defect {d} has an infinite entry")
    q_plus = shape.p ** (int(d.d_plus) + 1)
    q_minus = shape.p ** (int(d.d_minus) + 1)
    first, second = delta[: shape.m], delta[shape.m :]
    return (
        sum(first) == 0
        and sum(second) == 0
        and all(x % q_plus == 0 for x in first)
        and all(x % q_minus == 0 for x in second)
    )


def even_coset_witness(lam: Weight, mu: Weight) -> EvenLink | None:
    """Witness that mu lies in the dot orbit of lam up to a translation in
    the shifted lattice of lam.  Dominance is not required here.

    Returns the first witness in lexicographic order, or None.
    """
    _same_shape(lam, mu)
    d = defect(lam)
    if not d.is_finite:
        raise InfiniteDefectError(f"defect {d} of {lam} has an infinite entry")
    for w in block_permutations(lam.shape):
        delta = mu - dot_action(w, lam)
        if _in_shifted_root_lattice(delta.coords, lam.shape, d):
            return EvenLink(w, delta.coords)
    return None


def even_linked(lam: Weight, mu: Weight) -> EvenLink | None:
    """Even linkage between dominant weights: same Weyl-orbit coset modulo
    the shifted even-block lattice."""
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("even linkage is defined between dominant weights")
    return even_coset_witness(lam, mu)


def simply_odd_linked(lam: Weight, mu: Weight) -> OddLink | None:
    """The odd move carrying lam to mu, if there is one.

    Requires mu = lam +- alpha for an odd positive root alpha with p
    dividing the shifted pairing at the higher of the two weights.
    """
    _same_shape(lam, mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("odd linkage is defined between dominant weights")
    diff = mu - lam
    nonzero = [(k + 1, c) for k, c in enumerate(diff.coords) if c]
    if len(nonzero) != 2:
        return None
    (a, ca), (b, cb) = nonzero
    if {ca, cb} != {1, -1}:
        return None
    i, j = (a, b) if ca == 1 else (b, a)
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    root = Root(i, j, lam.shape)
    if not root.is_odd_positive:
        return None
    base = lam if sign == -1 else mu
    if odd_shifted_pairing(base, root) % lam.shape.p != 0:
        return None
    return OddLink(root, sign)


def odd_neighbors(lam: Weight) -> list[tuple[Weight, Root, int]]:
    """All dominant weights one accepted odd move away from lam."""
    if not is_dominant(lam):
        raise ValueError("odd neighbors are enumerated from a dominant weight")
    p = lam.shape.p
    out = []
    for root in odd_positive_roots(lam.shape):
        for sign in (1, -1):
            mu = lam + sign * root.as_weight()
            if not is_dominant(mu):
                continue
            base = lam if sign == -1 else mu
            if odd_shifted_pairing(base, root) % p == 0:
                out.append((mu, root, sign))
    return out


def apply_move(lam: Weight, move: Move) -> Weight:
    if isinstance(move, OddLink):
        return lam + move.sign * move.root.as_weight()
    if isinstance(move, EvenLink):
        moved = dot_action(move.witness, lam)
        return Weight(
            tuple(a + b for a, b in zip(moved.coords, move.translation)), lam.shape
        )
    raise TypeError(f"unknown move {move!r}")


def check_move(lam: Weight, move: Move) -> Weight:
    """Validate a move from lam and return the resulting weight.

    Raises InvalidMoveError on any failed side condition; this is the
    single validator chain replays go through.
    """
    if not is_dominant(lam):
        raise InvalidMoveError(f"source weight {lam} is not dominant")
    if isinstance(move, OddLink):
        _same_shape(lam, move.root)
        if move.sign not in (1, -1):
            raise InvalidMoveError(f"odd move sign must be +-1, got {move.sign}")
        if not move.root.is_odd_positive:
            raise InvalidMoveError(f"{move.root} is not an odd positive root")
        mu = apply_move(lam, move)
        base = lam if move.sign == -1 else mu
        if odd_shifted_pairing(base, move.root) % lam.shape.p != 0:
            raise InvalidMoveError(
                f"shifted pairing of {move.root} at {base} is not divisible by p"
            )
    elif isinstance(move, EvenLink):
        _same_shape(lam, move.witness)
        if not move.witness.is_block_preserving:
            raise InvalidMoveError(f"witness {move.witness} does not preserve the blocks")
        if len(move.translation) != lam.shape.size:
            raise InvalidMoveError("translation has the wrong length")
        if not _in_shifted_root_lattice(move.translation, lam.shape, defect(lam)):
            raise InvalidMoveError(
                f"translation {move.translation} is outside the shifted lattice of {lam}"
            )
        mu = apply_move(lam, move)
    else:
        raise InvalidMoveError(f"unknown move {move!r}")
    if not is_dominant(mu):
        raise InvalidMoveError(f"move lands at the non-dominant weight {mu}")
    return mu


@dataclass(frozen=True)
class LinkageChain:
    """A certified sequence of moves between dominant weights."""

    start: Weight
    moves: tuple[Move, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def weights(self) -> list[Weight]:
        """The visited weights, start included; no validation performed."""
        out = [self.start]
        for move in self.moves:
            out.append(apply_move(out[-1], move))
        return out

    @property
    def end(self) -> Weight:
        return self.weights()[-1]

    def validate(self) -> Weight:
        """Replay through the move validator; returns the end weight."""
        if not is_dominant(self.start):
            raise InvalidMoveError(f"start weight {self.start} is not dominant")
        current = self.start
        for t, move in enumerate(self.moves, start=1):
            try:
                current = check_move(current, move)
            except InvalidMoveError as exc:
                raise InvalidMoveError(f"step {t}: {exc}") from None
        return current


def minimal_companion_level(lam: Weight) -> int:
    """Smallest admissible shift exponent t: above both defect entries and
    with p^t exceeding every within-block dominance violation."""
    d = defect(lam)
    if not d.is_finite:
        raise InfiniteDefectError(f"defect {d} of {lam} has an infinite entry")
    violations = [0]
    m, size = lam.shape.m, lam.shape.size
    for i in range(1, size):
        if i == m:
            continue
        drop = lam.entry(i) - lam.entry(i + 1)
        if drop < 0:
            violations.append(-drop)
    t = int(max(d.d_plus, d.d_minus)) + 1
    biggest = max(violations)
    while lam.shape.p**t <= biggest:
        t += 1
    return t


def companion(lam: Weight, t: int | None = None) -> Weight:
    """A dominant weight with the same defect and the same shifted coset.

    With t unspecified a dominant weight is its own companion; otherwise
    the correction adds p^t times the staircase of block fundamental
    weights and rebalances the block sums on the last entry of each
    block.  An explicit t must be admissible (see
    minimal_companion_level) and forces the corrected form even for
    dominant input.
    """
    if t is None:
        if is_dominant(lam):
            return lam
        t = minimal_companion_level(lam)
    elif t < minimal_companion_level(lam):
        raise ValueError(
            f"t = {t} is below the minimal admissible level {minimal_companion_level(lam)}"
        )
    shape = lam.shape
    m, n, size = shape.m, shape.n, shape.size
    step = shape.p**t
    coords = list(lam.coords)
    for k in range(1, m):
        coords[k - 1] += step * (m - k)
    coords[m - 1] -= step * (m * (m - 1) // 2)
    for k in range(m + 1, size):
        coords[k - 1] += step * (size - k)
    coords[size - 1] -= step * (n * (n - 1) // 2)
    out = Weight(tuple(coords), shape)
    assert is_dominant(out), f"companion of {lam} came out non-dominant: {out}"
    return out


def lower_reflection(lam: Weight, alpha: Root, e: int) -> Weight:
    """Subtract s*alpha where s is the least nonnegative residue of
    (lam + rho0, alpha^vee) modulo p^e."""
    _same_shape(lam, alpha)
    if alpha.is_odd:
        raise ValueError(f"lower reflections act along even roots, got {alpha}")
    if not (alpha.is_positive and alpha.is_even):
        raise ValueError(f"{alpha} is not an even positive root")
    if e < 0:
        raise ValueError("e must be a natural number")
    pairing = lam.entry(alpha.i) - lam.entry(alpha.j) + alpha.j - alpha.i
    s = pairing % (lam.shape.p**e)
    return lam - s * alpha.as_weight()


@dataclass(frozen=True)
class Fingerprint:
    """Block invariant: the degree together with signed residue counts.

    The residue vector c has c_t = #{first-block positions with
    (lam_i + m - i) mod p = t} minus #{second-block positions with
    (j - m - 1 - lam_j) mod p = t}; both move kinds preserve it, and its
    entries always sum to m - n.
    """

    total: int
    residues: tuple[int, ...]

    def __str__(self) -> str:
        return f"|lam|={self.total}, c=({','.join(str(c) for c in self.residues)})"


def fingerprint(lam: Weight) -> Fingerprint:
    shape = lam.shape
    p = shape.p
    counts = [0] * p
    for i in range(1, shape.m + 1):
        counts[(lam.entry(i) + shape.m - i) % p] += 1
    for j in range(shape.m + 1, shape.size + 1):
        counts[(j - shape.m - 1 - lam.entry(j)) % p] -= 1
    return Fingerprint(degree(lam).total, tuple(counts))


@dataclass(frozen=True)
class Box:
    """Per-coordinate closed bounds on weight entries."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lo", tuple(int(x) for x in self.lo))
        object.__setattr__(self, "hi", tuple(int(x) for x in self.hi))
        if len(self.lo) != len(self.hi):
            raise ValueError("bound vectors differ in length")
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise ValueError("box is empty in some coordinate")

    @classmethod
    def uniform(cls, size: int, lo: int, hi: int) -> "Box":
        return cls((lo,) * size, (hi,) * size)

    @classmethod
    def around(cls, weights, margin: int) -> "Box":
        """Bounding box of the given weights, inflated by margin."""
        coords = [w.coords for w in weights]
        lo = tuple(min(c[k] for c in coords) - margin for k in range(len(coords[0])))
        hi = tuple(max(c[k] for c in coords) + margin for k in range(len(coords[0])))
        return cls(lo, hi)

    def contains(self, lam: Weight) -> bool:
        return all(l <= c <= h for c, l, h in zip(lam.coords, self.lo, self.hi))


def dominant_weights_in(shape: Shape, box: Box) -> list[Weight]:
    """All dominant weights inside the box, in lexicographic order."""
    if len(box.lo) != shape.size:
        raise ValueError(f"box dimension {len(box.lo)} does not match shape {shape}")

    def block(lo_idx: int, hi_idx: int):
        # non-increasing runs within per-coordinate bounds
        def rec(idx: int, cap: int | None):
            if idx > hi_idx:
                yield ()
                return
            top = box.hi[idx - 1] if cap is None else min(cap, box.hi[idx - 1])
            for v in range(top, box.lo[idx - 1] - 1, -1):
                for rest in rec(idx + 1, v):
                    yield (v,) + rest

        return list(rec(lo_idx, None))

    out = [
        Weight(first + second, shape)
        for first in block(1, shape.m)
        for second in block(shape.m + 1, shape.size)
    ]
    out.sort(key=lambda w: w.coords)
    return out


def _block_translations(base, lo, hi, q):
    """Zero-sum vectors with entries in q*Z keeping base + t inside [lo, hi]."""
    options = []
    for b, l, h in zip(base, lo, hi):
        c_min = -((b - l) // q)
        c_max = (h - b) // q
        if c_min > c_max:
            return []
        options.append([c * q for c in range(c_min, c_max + 1)])
    suffix_min = [0] * (len(options) + 1)
    suffix_max = [0] * (len(options) + 1)
    for k in range(len(options) - 1, -1, -1):
        suffix_min[k] = suffix_min[k + 1] + options[k][0]
        suffix_max[k] = suffix_max[k + 1] + options[k][-1]
    out = []

    def rec(k: int, partial: int, acc: tuple):
        if partial + suffix_min[k] > 0 or partial + suffix_max[k] < 0:
            return
        if k == len(options):
            out.append(acc)
            return
        for v in options[k]:
            rec(k + 1, partial + v, acc + (v,))

    rec(0, 0, ())
    return out


def even_neighbors(lam: Weight, box: Box) -> list[tuple[Weight, EvenLink]]:
    """Dominant weights inside the box reachable from lam by one even move.

    Deterministic: witnesses are scanned in lexicographic order and the
    first move to reach a weight is kept.
    """
    shape = lam.shape
    d = defect(lam)
    q_plus = shape.p ** (int(d.d_plus) + 1)
    q_minus = shape.p ** (int(d.d_minus) + 1)
    m = shape.m
    found: dict[Weight, EvenLink] = {}
    for w in block_permutations(shape):
        base = dot_action(w, lam)
        first = _block_translations(base.coords[:m], box.lo[:m], box.hi[:m], q_plus)
        if not first:
            continue
        second = _block_translations(base.coords[m:], box.lo[m:], box.hi[m:], q_minus)
        for t1 in first:
            for t2 in second:
                delta = t1 + t2
                mu = Weight(
                    tuple(a + b for a, b in zip(base.coords, delta)), shape
                )
                if mu == lam or not is_dominant(mu):
                    continue
                found.setdefault(mu, EvenLink(w, delta))
    return sorted(found.items(), key=lambda kv: kv[0].coords)


@dataclass(frozen=True)
class Linked:
    chain: LinkageChain


@dataclass(frozen=True)
class FingerprintMismatch:
    left: Fingerprint
    right: Fingerprint


@dataclass(frozen=True)
class InconclusiveWithinBox:
    explored: int


SameBlockResult = Linked | FingerprintMismatch | InconclusiveWithinBox


def _neighbors(lam: Weight, box: Box) -> list[tuple[Weight, Move]]:
    out: list[tuple[Weight, Move]] = []
    for mu, root, sign in odd_neighbors(lam):
        if box.contains(mu):
            out.append((mu, OddLink(root, sign)))
    out.extend(even_neighbors(lam, box))
    out.sort(key=lambda kv: kv[0].coords)
    return out


def same_block(lam: Weight, mu: Weight, box: Box) -> SameBlockResult:
    """Decide block membership within a box, with certificates.

    Breadth-first search over dominant weights inside the box.  A Linked
    answer carries a replayable chain; a FingerprintMismatch answer is a
    sound separation; InconclusiveWithinBox means the box was exhausted
    without connecting the weights, which decides nothing.
    """
    _same_shape(lam, mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("block search is defined between dominant weights")
    if not (box.contains(lam) and box.contains(mu)):
        raise ValueError("box too small: it must contain both input weights")
    if lam == mu:
        return Linked(LinkageChain(lam, ()))
    fp_l, fp_r = fingerprint(lam), fingerprint(mu)
    if fp_l != fp_r:
        return FingerprintMismatch(fp_l, fp_r)
    parent: dict[Weight, tuple[Weight, Move] | None] = {lam: None}
    queue = deque([lam])
    while queue:
        current = queue.popleft()
        for nxt, move in _neighbors(current, box):
            if nxt in parent:
                continue
            parent[nxt] = (current, move)
            if nxt == mu:
                moves = []
                node = nxt
                while parent[node] is not None:
                    prev, mv = parent[node]
                    moves.append(mv)
                    node = prev
                chain = LinkageChain(lam, tuple(reversed(moves)))
                assert chain.end == mu
                return Linked(chain)
            queue.append(nxt)
    return InconclusiveWithinBox(explored=len(parent))


class UnionFind:
    """Union-find with path compression, tracking component count."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1


@dataclass(frozen=True)
class BlockClasses:
    """Box-restricted block classes with fingerprint labels.

    Classes sharing a fingerprint that the box did not merge are listed
    in ``unresolved`` as groups of class indices; they may or may not be
    equal in the full lattice.
    """

    classes: tuple[tuple[Weight, ...], ...]
    fingerprints: tuple[Fingerprint, ...]
    unresolved: tuple[tuple[int, ...], ...]


def enumerate_block_classes(shape: Shape, box: Box) -> BlockClasses:
    """Union-find closure of both move kinds over the dominant weights in a box."""
    weights = dominant_weights_in(shape, box)
    index = {w: k for k, w in enumerate(weights)}
    uf = UnionFind(len(weights))
    for w, k in index.items():
        for mu, _root, _sign in odd_neighbors(w):
            if mu in index:
                uf.union(k, index[mu])
        for mu, _move in even_neighbors(w, box):
            uf.union(k, index[mu])
    groups: dict[int, list[Weight]] = {}
    for w, k in index.items():
        groups.setdefault(uf.find(k), []).append(w)
    classes = tuple(
        tuple(sorted(members, key=lambda w: w.coords))
        for _, members in sorted(groups.items())
    )
    classes = tuple(sorted(classes, key=lambda cls: cls[0].coords))
    fps = tuple(fingerprint(cls[0]) for cls in classes)
    by_fp: dict[Fingerprint, list[int]] = {}
    for k, fp in enumerate(fps):
        by_fp.setdefault(fp, []).append(k)
    unresolved = tuple(
        tuple(ks) for fp, ks in sorted(by_fp.items(), key=lambda kv: kv[1][0]) if len(ks) > 1
    )
    return BlockClasses(classes, fps, unresolved)
