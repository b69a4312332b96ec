"""Exact formal characters as sparse integer Laurent polynomials.

A character lives in the group ring Z[X(T)]: a finite map from exponent
vectors (weights) to nonzero integer coefficients.  The character of the
induced family attached to the Borel of w is the product of one factor
per positive root: a truncated geometric sum for each even root and a
two-term factor for each odd root.  Products stay small at desk scale
and all coefficients are exact Python integers.
"""

from __future__ import annotations

from functools import lru_cache

from .roots import Permutation, Root, positive_system, rho0_of, rho1_of
from .weights import Shape, Weight, _same_shape, rho0, rho1, to_literal


class CharacterPoly:
    """Sparse Laurent polynomial in m+n variables with integer coefficients.

    Terms are keyed by exponent tuples; zero coefficients are never
    stored.  Instances are immutable by convention: every operation
    returns a fresh polynomial.

    >>> sh = Shape(1, 1, 3)
    >>> x = CharacterPoly.monomial(Weight((1, 0), sh))
    >>> print(x + x)
    2·e^(1|0)
    """

    __slots__ = ("shape", "_terms")

    def __init__(self, shape: Shape, terms=None):
        self.shape = shape
        clean = {}
        for exp, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != shape.size:
                raise ValueError(f"exponent {exp} has wrong length for {shape}")
            clean[exp] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls, shape: Shape) -> "CharacterPoly":
        return cls(shape)

    @classmethod
    def one(cls, shape: Shape) -> "CharacterPoly":
        return cls(shape, {(0,) * shape.size: 1})

    @classmethod
    def monomial(cls, lam: Weight, coeff: int = 1) -> "CharacterPoly":
        return cls(lam.shape, {lam.coords: coeff})

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def coeff(self, exponent) -> int:
        if isinstance(exponent, Weight):
            exponent = exponent.coords
        return self._terms.get(tuple(exponent), 0)

    def items_sorted(self):
        """Terms in lexicographic exponent order."""
        return sorted(self._terms.items())

    def exponents(self):
        return set(self._terms)

    def evaluate_at_ones(self) -> int:
        """Value at every variable equal to 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        return self.shape == other.shape and self._terms == other._terms

    def __add__(self, other):
        if isinstance(other, int):
            other = CharacterPoly(self.shape, {(0,) * self.shape.size: other})
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        _same_shape(self, other)
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            new = terms.get(exp, 0) + coeff
            if new:
                terms[exp] = new
            else:
                terms.pop(exp, None)
        out = CharacterPoly.zero(self.shape)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        return CharacterPoly(self.shape, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = CharacterPoly(self.shape, {(0,) * self.shape.size: other})
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CharacterPoly(self.shape, {e: other * c for e, c in self._terms.items()})
        if not isinstance(other, CharacterPoly):
            return NotImplemented
        _same_shape(self, other)
        terms: dict[tuple, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        out = CharacterPoly.zero(self.shape)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self.items_sorted():
            base = f"e^({to_literal(Weight(exp, self.shape))})"
            if coeff == 1:
                parts.append(base)
            elif coeff == -1:
                parts.append(f"-{base}")
            else:
                parts.append(f"{coeff}·{base}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CharacterPoly({self.shape}, {self.n_terms} terms)"


def even_factor(alpha: Root, r: int | None = None) -> CharacterPoly:
    """The truncated geometric sum 1 + e^{-alpha} + ... + e^{-(p^r - 1) alpha}.

    Multiplying by (1 - e^{-alpha}) telescopes to 1 - e^{-p^r alpha}; the
    expansion keeps the ring purely polynomial.
    """
    if alpha.is_odd:
        raise ValueError(f"even_factor needs an even root, got {alpha}")
    shape = alpha.shape
    if r is None:
        r = shape.r
    vec = alpha.as_weight().coords
    terms = {tuple(-k * v for v in vec): 1 for k in range(shape.p**r)}
    return CharacterPoly(shape, terms)


def odd_factor(alpha: Root) -> CharacterPoly:
    """The two-term factor 1 + e^{-alpha} of an odd root."""
    if alpha.is_even:
        raise ValueError(f"odd_factor needs an odd root, got {alpha}")
    shape = alpha.shape
    vec = alpha.as_weight().coords
    return CharacterPoly(shape, {(0,) * shape.size: 1, tuple(-v for v in vec): 1})


@lru_cache(maxsize=64)
def _borel_product(shape: Shape, images: tuple[int, ...], r: int) -> CharacterPoly:
    w = Permutation(images, shape)
    out = CharacterPoly.one(shape)
    for root in positive_system(w).roots:
        factor = odd_factor(root) if root.is_odd else even_factor(root, r)
        out = out * factor
    return out


def zhat_char(lam: Weight, w: Permutation | None = None, r: int | None = None) -> CharacterPoly:
    """Formal character of the induced supermodule family at highest weight
    lam over the Borel selected by w.

    The product formula: e^lam times one geometric factor per even root
    of Phi^+_w and one two-term factor per odd root.
    """
    shape = lam.shape
    if w is None:
        w = Permutation.identity(shape)
    _same_shape(lam, w)
    if r is None:
        r = shape.r
    return CharacterPoly.monomial(lam) * _borel_product(shape, w.images, r)


def bracket_weight(lam: Weight, w: Permutation, r: int | None = None) -> Weight:
    """The shifted highest weight lam + (p^r - 1)(rho0(w) - rho0) + (rho1(w) - rho1).

    This is the shift that makes the induced character independent of the
    chosen Borel; it is integral because rho differences are sums of
    roots, and it equals lam when w is the identity.
    """
    shape = lam.shape
    _same_shape(lam, w)
    if r is None:
        r = shape.r
    d0 = rho0_of(w) - rho0(shape)
    d1 = rho1_of(w) - rho1(shape)
    total = lam.as_half() + (shape.p**r - 1) * d0 + d1
    return total.to_weight()


def shift(char: CharacterPoly, mu: Weight, r: int | None = None) -> CharacterPoly:
    """Multiply by e^{p^r mu}: twisting the family by a Frobenius-scaled weight."""
    _same_shape(char, mu)
    if r is None:
        r = char.shape.r
    return char * CharacterPoly.monomial((char.shape.p**r) * mu)


def integral_char_chi(w: Permutation, r: int | None = None, sign: int = 1) -> Weight:
    """The torus character +-2((p^r - 1) rho0(w) + rho1(w)) carried by the
    one-dimensional space of integrals on the Borel's Frobenius kernel."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    shape = w.shape
    if r is None:
        r = shape.r
    half = (shape.p**r - 1) * rho0_of(w) + rho1_of(w)
    return sign * Weight(half.doubled, shape)
