"""Weight-lattice primitives for the general linear supergroup GL(m|n).

A weight of the diagonal torus is an integer vector of length m+n.  The
first m positions form the even block, the last n positions the odd
block, and the basis vector at position i carries the parity of its
block.  The standard bilinear form is (eps_i, eps_j) =
(-1)^{parity(i)} delta_ij, so pairings of half-integral vectors can have
denominator 2.  To keep all arithmetic exact, half-integral vectors (the
rho shifts) are stored doubled; see :class:`HalfWeight`.

Indices in formulas are 1-based throughout, matching the usual type-A
conventions.  Weight literals are written ``a,b,...|c,d,...`` with a
single ``|`` separating the two blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


class ShapeMismatchError(ValueError):
    """Operands live over different ambient shapes (m, n, p, r)."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class Shape:
    """Ambient parameters: block sizes m and n, odd prime p, Frobenius level r."""

    m: int
    n: int
    p: int
    r: int = 1

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("block sizes m and n must be >= 1")
        if self.p == 2:
            raise ValueError("characteristic 2 unsupported (odd characteristic required)")
        if not _is_odd_prime(self.p):
            raise ValueError(f"p = {self.p} is not an odd prime")
        if self.r < 1:
            raise ValueError("Frobenius level r must be >= 1")

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        """Parity of eps_i: 0 in the even block, 1 in the odd block (1-based)."""
        if not 1 <= i <= self.size:
            raise ValueError(f"index {i} out of range 1..{self.size}")
        return 0 if i <= self.m else 1


def _same_shape(a, b) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")


@dataclass(frozen=True)
class Weight:
    """An integral weight: a vector of m+n integers.

    >>> lam = Weight((3, 1, 0), Shape(2, 1, 3))
    >>> lam.entry(1), lam.entry(3)
    (3, 0)
    """

    coords: tuple[int, ...]
    shape: Shape

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.shape.size:
            raise ValueError(
                f"expected {self.shape.size} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def zero(cls, shape: Shape) -> "Weight":
        return cls((0,) * shape.size, shape)

    def entry(self, i: int) -> int:
        """Coordinate lambda_i, 1-based."""
        return self.coords[i - 1]

    def doubled(self) -> tuple[int, ...]:
        return tuple(2 * c for c in self.coords)

    def as_half(self) -> "HalfWeight":
        return HalfWeight(self.doubled(), self.shape)

    def __add__(self, other):
        if isinstance(other, Weight):
            _same_shape(self, other)
            return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.shape)
        if isinstance(other, HalfWeight):
            return other + self
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Weight):
            _same_shape(self, other)
            return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.shape)
        if isinstance(other, HalfWeight):
            return self.as_half() - other
        return NotImplemented

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords), self.shape)

    def __mul__(self, k):
        if isinstance(k, int):
            return Weight(tuple(k * c for c in self.coords), self.shape)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        return to_literal(self)


@dataclass(frozen=True)
class HalfWeight:
    """A half-integral vector, stored doubled so arithmetic stays in Z.

    A HalfWeight is an actual Weight exactly when every doubled entry is
    even.
    """

    doubled: tuple[int, ...]
    shape: Shape

    def __post_init__(self):
        object.__setattr__(self, "doubled", tuple(int(c) for c in self.doubled))
        if len(self.doubled) != self.shape.size:
            raise ValueError(
                f"expected {self.shape.size} coordinates, got {len(self.doubled)}"
            )

    def entry_doubled(self, i: int) -> int:
        return self.doubled[i - 1]

    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self.doubled)

    def to_weight(self) -> Weight:
        if not self.is_integral():
            raise ValueError(f"half-weight {self.doubled} (doubled) is not integral")
        return Weight(tuple(c // 2 for c in self.doubled), self.shape)

    def _combine(self, other, op):
        if isinstance(other, HalfWeight):
            _same_shape(self, other)
            return HalfWeight(
                tuple(op(a, b) for a, b in zip(self.doubled, other.doubled)), self.shape
            )
        if isinstance(other, Weight):
            return self._combine(other.as_half(), op)
        return NotImplemented

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other):
        if isinstance(other, Weight):
            return other.as_half() - self
        return NotImplemented

    def __neg__(self) -> "HalfWeight":
        return HalfWeight(tuple(-c for c in self.doubled), self.shape)

    def __mul__(self, k):
        if isinstance(k, int):
            return HalfWeight(tuple(k * c for c in self.doubled), self.shape)
        return NotImplemented

    __rmul__ = __mul__


def _doubled_of(v) -> tuple[int, ...]:
    if isinstance(v, Weight):
        return v.doubled()
    if isinstance(v, HalfWeight):
        return v.doubled
    raise TypeError(f"expected Weight or HalfWeight, got {type(v).__name__}")


def _halved(doubled_value: int):
    """Exact value of doubled_value/2: an int when even, else a Fraction."""
    if doubled_value % 2 == 0:
        return doubled_value // 2
    return Fraction(doubled_value, 2)


def pairing_coroot(v, alpha):
    """Pairing (v, alpha^vee) for the root alpha = eps_i - eps_j.

    The coroot of eps_i - eps_j is eps'_i - eps'_j, so the pairing is
    v_i - v_j regardless of parities.  Integer for a Weight, possibly a
    half-integer (returned as a Fraction) for a HalfWeight.
    """
    _same_shape(v, alpha)
    d = _doubled_of(v)
    return _halved(d[alpha.i - 1] - d[alpha.j - 1])


def pairing_form(v, alpha):
    """Pairing (v, alpha) under the parity-signed bilinear form.

    For alpha = eps_i - eps_j this is (-1)^{|i|} v_i - (-1)^{|j|} v_j; in
    particular v_i + v_j when alpha is an odd positive root.
    """
    _same_shape(v, alpha)
    d = _doubled_of(v)
    si = -1 if v.shape.parity(alpha.i) else 1
    sj = -1 if v.shape.parity(alpha.j) else 1
    return _halved(si * d[alpha.i - 1] - sj * d[alpha.j - 1])


def rho0(shape: Shape) -> HalfWeight:
    """Half-sum of the even positive roots of the standard system.

    Closed form: entry (m-2i+1)/2 at position i of the first block and
    (n-2k+1)/2 at the k-th position of the second block.
    """
    first = [shape.m - 2 * i + 1 for i in range(1, shape.m + 1)]
    second = [shape.n - 2 * k + 1 for k in range(1, shape.n + 1)]
    return HalfWeight(tuple(first + second), shape)


def rho1(shape: Shape) -> HalfWeight:
    """Half-sum of the odd positive roots: n/2 on the first block, -m/2 on the second."""
    return HalfWeight((shape.n,) * shape.m + (-shape.m,) * shape.n, shape)


def rho(shape: Shape) -> HalfWeight:
    """The difference rho0 - rho1."""
    return rho0(shape) - rho1(shape)


def odd_shifted_pairing(lam: Weight, alpha) -> int:
    """The rho-shifted pairing (lam + rho, alpha) for an odd positive root.

    For alpha = eps_i - eps_j with i <= m < j this evaluates to the
    integer lam_i + lam_j + 2m + 1 - i - j.
    """
    _same_shape(lam, alpha)
    if not alpha.is_odd_positive:
        raise ValueError(f"{alpha} is not an odd positive root")
    m = lam.shape.m
    return lam.entry(alpha.i) + lam.entry(alpha.j) + 2 * m + 1 - alpha.i - alpha.j


def is_dominant(lam: Weight) -> bool:
    """Non-increasing within each block; no condition across the block seam.

    >>> sh = Shape(2, 1, 3)
    >>> is_dominant(Weight((3, -1, 0), sh))
    True
    >>> is_dominant(Weight((0, 1, 0), sh))
    False
    """
    m = lam.shape.m
    c = lam.coords
    within_first = all(c[i] >= c[i + 1] for i in range(m - 1))
    within_second = all(c[j] >= c[j + 1] for j in range(m, lam.shape.size - 1))
    return within_first and within_second


class Degree(NamedTuple):
    total: int
    plus: int
    minus: int


def degree(lam: Weight) -> Degree:
    """Coordinate sum |lam| together with the two block subtotals."""
    plus = sum(lam.coords[: lam.shape.m])
    minus = sum(lam.coords[lam.shape.m :])
    return Degree(plus + minus, plus, minus)


def in_restricted_region(lam: Weight, r: int | None = None) -> bool:
    """Membership in the restricted region: 0 <= lam_i - lam_{i+1} <= p^r - 1
    for every index i except the block seam i = m."""
    if r is None:
        r = lam.shape.r
    bound = lam.shape.p**r - 1
    m = lam.shape.m
    c = lam.coords
    for i in range(lam.shape.size - 1):
        if i + 1 == m:
            continue
        if not 0 <= c[i] - c[i + 1] <= bound:
            return False
    return True


def to_literal(lam: Weight) -> str:
    """Canonical literal form, e.g. ``2,0|1,0``."""
    m = lam.shape.m
    first = ",".join(str(c) for c in lam.coords[:m])
    second = ",".join(str(c) for c in lam.coords[m:])
    return f"{first}|{second}"


def parse_literal(text: str, shape: Shape) -> Weight:
    """Parse a weight literal.

    The canonical form separates the blocks with ``|``; a plain
    comma-separated list of m+n integers is also accepted.

    >>> parse_literal("2,0|1,0", Shape(2, 2, 3)).coords
    (2, 0, 1, 0)
    """
    s = text.strip()
    try:
        if "|" in s:
            first, _, second = s.partition("|")
            if "|" in second:
                raise ValueError("more than one '|'")
            a = [int(x) for x in first.split(",")]
            b = [int(x) for x in second.split(",")]
            if len(a) != shape.m or len(b) != shape.n:
                raise ValueError(
                    f"block sizes {len(a)}|{len(b)} do not match shape {shape.m}|{shape.n}"
                )
            coords = a + b
        else:
            coords = [int(x) for x in s.split(",")]
            if len(coords) != shape.size:
                raise ValueError(f"expected {shape.size} entries, got {len(coords)}")
    except ValueError as exc:
        raise ValueError(f"malformed weight literal {text!r}: {exc}") from None
    return Weight(tuple(coords), shape)
