"""Root system with parity, positive systems, reflections and coset combinatorics.

Roots of GL(m|n) are the differences eps_i - eps_j with i != j.  A root
is even when i and j lie in the same block and odd otherwise.  Every
permutation w of {1..m+n} selects a positive system Phi^+_w consisting
of the roots eps_{w(a)} - eps_{w(b)} over positions a < b; the standard
system is the one for w = id.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .weights import HalfWeight, Shape, Weight, _same_shape, rho0


@dataclass(frozen=True, order=True)
class Root:
    """The root eps_i - eps_j (1-based indices, i != j)."""

    i: int
    j: int
    shape: Shape

    def __post_init__(self):
        size = self.shape.size
        if not (1 <= self.i <= size and 1 <= self.j <= size):
            raise ValueError(f"root indices ({self.i},{self.j}) out of range 1..{size}")
        if self.i == self.j:
            raise ValueError("root indices must be distinct")

    @property
    def parity(self) -> int:
        return (self.shape.parity(self.i) + self.shape.parity(self.j)) % 2

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    @property
    def is_odd(self) -> bool:
        return self.parity == 1

    @property
    def is_positive(self) -> bool:
        """Positivity in the standard system: i < j."""
        return self.i < self.j

    @property
    def is_odd_positive(self) -> bool:
        return self.i <= self.shape.m < self.j

    def negated(self) -> "Root":
        return Root(self.j, self.i, self.shape)

    def as_weight(self) -> Weight:
        coords = [0] * self.shape.size
        coords[self.i - 1] = 1
        coords[self.j - 1] = -1
        return Weight(tuple(coords), self.shape)

    def __str__(self) -> str:
        return f"e{self.i}-e{self.j}"


def standard_positive_roots(shape: Shape) -> list[Root]:
    """All roots eps_i - eps_j with i < j, in lexicographic order."""
    return [
        Root(i, j, shape)
        for i in range(1, shape.size + 1)
        for j in range(i + 1, shape.size + 1)
    ]


def odd_positive_roots(shape: Shape) -> list[Root]:
    return [r for r in standard_positive_roots(shape) if r.is_odd]


def even_positive_roots(shape: Shape) -> list[Root]:
    return [r for r in standard_positive_roots(shape) if r.is_even]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..m+n} in one-line notation.

    ``images[k-1]`` is the image of k; composition is right-to-left.

    >>> sh = Shape(2, 1, 3)
    >>> w = Permutation((3, 1, 2), sh)
    >>> w(1), w.inverse()(3)
    (3, 1)
    """

    images: tuple[int, ...]
    shape: Shape

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, self.shape.size + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{self.shape.size}")

    @classmethod
    def identity(cls, shape: Shape) -> "Permutation":
        return cls(tuple(range(1, shape.size + 1)), shape)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.shape.size
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv), self.shape)

    def __mul__(self, other: "Permutation") -> "Permutation":
        _same_shape(self, other)
        return Permutation(tuple(self(other(i)) for i in range(1, self.shape.size + 1)), self.shape)

    @property
    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.shape.size + 1))

    @property
    def is_block_preserving(self) -> bool:
        m = self.shape.m
        return all((self(i) <= m) == (i <= m) for i in range(1, self.shape.size + 1))

    def n_inversions(self) -> int:
        im = self.images
        size = self.shape.size
        return sum(1 for a in range(size) for b in range(a + 1, size) if im[a] > im[b])

    def permute(self, coords) -> tuple:
        """Place the entry at old position i into new position w(i)."""
        out = [None] * self.shape.size
        for pos, val in enumerate(self.images):
            out[val - 1] = coords[pos]
        return tuple(out)

    def act(self, lam: Weight) -> Weight:
        """Plain permutation action on weights: w . eps_i = eps_{w(i)}."""
        _same_shape(self, lam)
        return Weight(self.permute(lam.coords), self.shape)

    def one_line(self) -> str:
        return ",".join(str(x) for x in self.images)

    def __str__(self) -> str:
        return self.one_line()


def value_transposition(shape: Shape, a: int, b: int) -> Permutation:
    """The transposition exchanging the values a and b."""
    images = list(range(1, shape.size + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(tuple(images), shape)


def s_alpha(alpha: Root) -> Permutation:
    """The reflection in alpha = eps_i - eps_j, as the transposition (i j)."""
    return value_transposition(alpha.shape, alpha.i, alpha.j)


def reflect(lam: Weight, alpha: Root) -> Weight:
    """Reflection lam - (lam, alpha^vee) alpha; entries i and j change places."""
    _same_shape(lam, alpha)
    c = lam.entry(alpha.i) - lam.entry(alpha.j)
    return lam - c * alpha.as_weight()


@dataclass(frozen=True)
class PositiveSystem:
    """The positive system attached to a permutation w."""

    w: Permutation
    roots: tuple[Root, ...]

    def __contains__(self, alpha: Root) -> bool:
        return alpha in set(self.roots)

    def evens(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_even)

    def odds(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_odd)


def positive_system(w: Permutation) -> PositiveSystem:
    """Phi^+_w: the roots eps_{w(a)} - eps_{w(b)} over position pairs a < b."""
    shape = w.shape
    roots = tuple(
        Root(w(a), w(b), shape)
        for a in range(1, shape.size + 1)
        for b in range(a + 1, shape.size + 1)
    )
    return PositiveSystem(w, roots)


def simple_roots(w: Permutation) -> tuple[Root, ...]:
    """The simple roots eps_{w(a)} - eps_{w(a+1)}, in position order."""
    shape = w.shape
    return tuple(Root(w(a), w(a + 1), shape) for a in range(1, shape.size))


def rho0_of(w: Permutation) -> HalfWeight:
    """Half-sum of the even roots of Phi^+_w."""
    doubled = [0] * w.shape.size
    for r in positive_system(w).evens():
        doubled[r.i - 1] += 1
        doubled[r.j - 1] -= 1
    return HalfWeight(tuple(doubled), w.shape)


def rho1_of(w: Permutation) -> HalfWeight:
    """Half-sum of the odd roots of Phi^+_w."""
    doubled = [0] * w.shape.size
    for r in positive_system(w).odds():
        doubled[r.i - 1] += 1
        doubled[r.j - 1] -= 1
    return HalfWeight(tuple(doubled), w.shape)


def dot_action(w: Permutation, lam: Weight) -> Weight:
    """The rho0-shifted action w.lam = w(lam + rho0) - rho0.

    Only block-preserving permutations act; they return integral output
    because rho0 is constant-offset within each block.
    """
    _same_shape(w, lam)
    if not w.is_block_preserving:
        raise ValueError(f"dot action needs a block-preserving permutation, got {w}")
    shifted = lam.as_half() + rho0(lam.shape)
    moved = HalfWeight(w.permute(shifted.doubled), lam.shape)
    return (moved - rho0(lam.shape)).to_weight()


def all_permutations(shape: Shape):
    """All of S_{m+n}, in lexicographic one-line order."""
    for images in itertools.permutations(range(1, shape.size + 1)):
        yield Permutation(images, shape)


def block_permutations(shape: Shape):
    """The Weyl subgroup S_m x S_n, in lexicographic order."""
    first = itertools.permutations(range(1, shape.m + 1))
    for a in first:
        for b in itertools.permutations(range(shape.m + 1, shape.size + 1)):
            yield Permutation(a + b, shape)


def is_minimal_coset_rep(w: Permutation) -> bool:
    """Whether w^{-1} is increasing on both blocks."""
    inv = w.inverse()
    m, size = w.shape.m, w.shape.size
    first = all(inv(k) < inv(k + 1) for k in range(1, m))
    second = all(inv(k) < inv(k + 1) for k in range(m + 1, size))
    return first and second


def dmn_representatives(shape: Shape) -> list[Permutation]:
    """Minimal-length coset representatives for S_m x S_n in S_{m+n}.

    There are binomial(m+n, m) of them, one for each choice of the
    positions carrying first-block values.
    """
    out = []
    size = shape.size
    for first_positions in itertools.combinations(range(1, size + 1), shape.m):
        images = [0] * size
        rest = [pos for pos in range(1, size + 1) if pos not in first_positions]
        for k, pos in enumerate(first_positions, start=1):
            images[pos - 1] = k
        for k, pos in enumerate(rest, start=shape.m + 1):
            images[pos - 1] = k
        out.append(Permutation(tuple(images), shape))
    return out


def regular_decomposition(w: Permutation) -> tuple[Permutation, Permutation]:
    """The unique factorization w = w0 * w1 with w0 block-preserving and
    w1 a minimal-length coset representative."""
    shape = w.shape
    m, size = shape.m, shape.size
    first_positions = [i for i in range(1, size + 1) if w(i) <= m]
    rest = [i for i in range(1, size + 1) if w(i) > m]
    w1_images = [0] * size
    for k, pos in enumerate(first_positions, start=1):
        w1_images[pos - 1] = k
    for k, pos in enumerate(rest, start=m + 1):
        w1_images[pos - 1] = k
    w1 = Permutation(tuple(w1_images), shape)
    w0_images = [0] * size
    for k, pos in enumerate(first_positions, start=1):
        w0_images[k - 1] = w(pos)
    for k, pos in enumerate(rest, start=m + 1):
        w0_images[k - 1] = w(pos)
    w0 = Permutation(tuple(w0_images), shape)
    return w0, w1


def longest_element(shape: Shape) -> Permutation:
    """The order-reversing permutation of S_{m+n}."""
    return Permutation(tuple(range(shape.size, 0, -1)), shape)


def longest_dmn(shape: Shape) -> Permutation:
    """The longest minimal-length coset representative: second-block values
    first, then first-block values."""
    images = tuple(range(shape.m + 1, shape.size + 1)) + tuple(range(1, shape.m + 1))
    return Permutation(images, shape)


def leq_w(mu: Weight, lam: Weight, w: Permutation) -> bool:
    """Whether lam - mu is a nonnegative integer combination of the simple
    roots of Phi^+_w.

    The coefficient on the k-th simple root is the k-th prefix sum of
    lam - mu read in w-order, so the test is: all prefix sums
    nonnegative and the total zero.
    """
    _same_shape(mu, lam)
    _same_shape(lam, w)
    diff = [a - b for a, b in zip(lam.coords, mu.coords)]
    total = 0
    for s in range(1, lam.shape.size + 1):
        total += diff[w(s) - 1]
        if total < 0:
            return False
    return total == 0


@dataclass(frozen=True)
class AdjacencyChain:
    """A walk of positive systems from the standard Borel to its opposite.

    ``permutations[t]`` is y_t and ``flipped_roots[t-1]`` is the single
    root of Phi^+_{y_{t-1}} replaced by its negative at step t.  The
    first m*n steps flip the odd positive roots, the remaining
    m(m-1)/2 + n(n-1)/2 steps flip the even ones.
    """

    shape: Shape
    permutations: tuple[Permutation, ...]
    flipped_roots: tuple[Root, ...]

    @property
    def odd_step_count(self) -> int:
        return self.shape.m * self.shape.n

    def verify(self) -> None:
        verify_adjacency_chain(self)


def _simple_position(perm: Permutation, alpha: Root) -> int | None:
    """Position k with (w(k), w(k+1)) = (alpha.i, alpha.j), if alpha is a
    simple root of Phi^+_w."""
    k = perm.images.index(alpha.i) + 1
    if k < perm.shape.size and perm(k + 1) == alpha.j:
        return k
    return None


def _flip_at(perm: Permutation, k: int) -> Permutation:
    images = list(perm.images)
    images[k - 1], images[k] = images[k], images[k - 1]
    return Permutation(tuple(images), perm.shape)


def adjacency_chain(shape: Shape) -> AdjacencyChain:
    """Build the odd-then-even walk of adjacent Borel positive systems.

    Each step must flip a root that is simple in the current system.  For
    the odd phase any order refining the root order works and the search
    takes the lexicographically first; for the even phase the realizable
    orders are the inversion orders of reduced words, so the search
    backtracks over candidates (lexicographically first as well).
    Raises RuntimeError with a diagnostic if no order succeeds.
    """
    odd = sorted(odd_positive_roots(shape))
    even = sorted(even_positive_roots(shape))

    def extend(perm, remaining_odd, remaining_even, acc_perms, acc_roots):
        pool = remaining_odd if remaining_odd else remaining_even
        if not pool:
            return acc_perms, acc_roots
        for alpha in pool:
            k = _simple_position(perm, alpha)
            if k is None:
                continue
            nxt = _flip_at(perm, k)
            rest = [r for r in pool if r != alpha]
            result = extend(
                nxt,
                rest if remaining_odd else [],
                remaining_even if remaining_odd else rest,
                acc_perms + [nxt],
                acc_roots + [alpha],
            )
            if result is not None:
                return result
        return None

    start = Permutation.identity(shape)
    found = extend(start, odd, even, [start], [])
    if found is None:
        raise RuntimeError(
            f"no admissible root ordering yields an adjacent Borel walk for {shape}"
        )
    chain = AdjacencyChain(shape, tuple(found[0]), tuple(found[1]))
    verify_adjacency_chain(chain)
    return chain


def verify_adjacency_chain(chain: AdjacencyChain) -> None:
    """Check every step of the walk and the two endpoint identities."""
    shape = chain.shape
    mn = shape.m * shape.n
    n_even = (shape.m * (shape.m - 1)) // 2 + (shape.n * (shape.n - 1)) // 2
    if len(chain.flipped_roots) != mn + n_even:
        raise RuntimeError(
            f"walk has {len(chain.flipped_roots)} steps, expected {mn + n_even}"
        )
    if not chain.permutations[0].is_identity:
        raise RuntimeError("walk must start at the identity")
    for t, alpha in enumerate(chain.flipped_roots, start=1):
        if (alpha.parity == 0) != (t > mn):
            raise RuntimeError(f"step {t} flips {alpha}, wrong parity phase")
        before = set(positive_system(chain.permutations[t - 1]).roots)
        after = set(positive_system(chain.permutations[t]).roots)
        expected = (before - {alpha}) | {alpha.negated()}
        if alpha not in before or after != expected:
            raise RuntimeError(f"step {t} is not an adjacency flip of {alpha}")
    mid = chain.permutations[mn]
    if mid != longest_dmn(shape) or not is_minimal_coset_rep(mid):
        raise RuntimeError(
            f"after the odd phase the walk sits at {mid}, not the longest coset representative"
        )
    if chain.permutations[-1] != longest_element(shape):
        raise RuntimeError("walk does not end at the longest element")
