import random

import pytest

from superblocks import (
    CharacterPoly,
    Permutation,
    Root,
    Shape,
    Weight,
    all_permutations,
    bracket_weight,
    even_factor,
    integral_char_chi,
    leq_w,
    odd_factor,
    positive_system,
    shift,
    zhat_char,
)

GL11 = Shape(1, 1, 3)
GL21 = Shape(2, 1, 3)
GL22 = Shape(2, 2, 3)


def test_ring_basics():
    one = CharacterPoly.one(GL11)
    x = CharacterPoly.monomial(Weight((1, 0), GL11))
    y = CharacterPoly.monomial(Weight((0, 1), GL11))
    assert one * x == x
    assert x * y == CharacterPoly.monomial(Weight((1, 1), GL11))
    assert x + (-x) == CharacterPoly.zero(GL11)
    assert (x + y) * (x - y) == x * x - y * y
    assert 3 * x - x == 2 * x
    # (1 + e^-alpha)(1 - e^-alpha) = 1 - e^-2alpha
    e_neg = CharacterPoly.monomial(-Root(1, 2, GL11).as_weight())
    assert (one + e_neg) * (one - e_neg) == one - e_neg * e_neg


def test_product_of_monomials_adds_exponents():
    rng = random.Random(13)
    for _ in range(30):
        a = Weight(tuple(rng.randint(-4, 4) for _ in range(3)), GL21)
        b = Weight(tuple(rng.randint(-4, 4) for _ in range(3)), GL21)
        assert CharacterPoly.monomial(a) * CharacterPoly.monomial(b) == CharacterPoly.monomial(a + b)


def test_mul_term_count_bound():
    a = even_factor(Root(1, 2, GL21), 1)
    b = odd_factor(Root(1, 3, GL21))
    assert (a * b).n_terms <= a.n_terms * b.n_terms


def test_even_factor():
    alpha = Root(1, 2, GL21)
    geom = even_factor(alpha, 1)
    assert geom.n_terms == 3
    assert geom.coeff((0, 0, 0)) == 1 and geom.coeff((-2, 2, 0)) == 1
    assert geom.evaluate_at_ones() == 3
    one = CharacterPoly.one(GL21)
    e_neg = CharacterPoly.monomial(-alpha.as_weight())
    e_neg_p = CharacterPoly.monomial(-3 * alpha.as_weight())
    assert (one - e_neg) * geom == one - e_neg_p
    with pytest.raises(ValueError):
        even_factor(Root(1, 3, GL21), 1)


def test_odd_factor():
    alpha = Root(1, 2, GL11)
    factor = odd_factor(alpha)
    assert factor.n_terms == 2
    assert (factor * factor).n_terms == 3  # 1 + 2x + x^2
    assert factor.evaluate_at_ones() == 2
    with pytest.raises(ValueError):
        odd_factor(Root(1, 2, GL21))


def test_zhat_char_gl11():
    c = zhat_char(Weight.zero(GL11), None, 1)
    assert c.exponents() == {(0, 0), (-1, 1)}
    assert all(coeff == 1 for _, coeff in c.items_sorted())


def test_zhat_char_gl21_dimension():
    c = zhat_char(Weight.zero(GL21), None, 1)
    assert c.evaluate_at_ones() == 12  # 3 * 2 * 2 factor dimensions


@pytest.mark.parametrize("m,n,p,r", [(1, 1, 3, 1), (2, 1, 3, 2), (2, 2, 5, 1)])
def test_zhat_dimension_formula(m, n, p, r):
    shape = Shape(m, n, p, r)
    n_even = m * (m - 1) // 2 + n * (n - 1) // 2
    rng = random.Random(m * 10 + n)
    lam = Weight(tuple(rng.randint(-3, 3) for _ in range(shape.size)), shape)
    for w in all_permutations(shape):
        assert zhat_char(lam, w, r).evaluate_at_ones() == p ** (r * n_even) * 2 ** (m * n)


def test_bracket_weight_examples():
    lam = Weight((4, 7), GL11)
    assert bracket_weight(lam, Permutation.identity(GL11), 1) == lam
    flip = Permutation((2, 1), GL11)
    assert bracket_weight(lam, flip, 1) == lam - Root(1, 2, GL11).as_weight()


def test_character_identity_gl11_by_hand():
    lam = Weight((4, 7), GL11)
    flip = Permutation((2, 1), GL11)
    lhs = zhat_char(bracket_weight(lam, flip, 1), flip, 1)
    rhs = zhat_char(lam, None, 1)
    assert lhs == rhs
    assert rhs.exponents() == {(4, 7), (3, 8)}


def test_character_identity_small_sweep():
    rng = random.Random(19)
    for shape in (GL11, GL21, Shape(1, 2, 5, 2)):
        for _ in range(5):
            lam = Weight(tuple(rng.randint(-3, 3) for _ in range(shape.size)), shape)
            reference = zhat_char(lam, None, shape.r)
            for w in all_permutations(shape):
                assert zhat_char(bracket_weight(lam, w, shape.r), w, shape.r) == reference


def test_shift_examples():
    lam = Weight.zero(GL11)
    mu = Weight((1, 0), GL11)
    shifted = shift(zhat_char(lam, None, 1), mu, 1)
    assert shifted.exponents() == {(3, 0), (2, 1)}
    assert shifted == zhat_char(lam + 3 * mu, None, 1)
    c = zhat_char(Weight((1, -1), GL11), None, 1)
    assert shift(c, Weight.zero(GL11), 1) == c


def test_shift_commutes_with_add():
    a = zhat_char(Weight((1, 0), GL11), None, 1)
    b = zhat_char(Weight((0, 2), GL11), None, 1)
    mu = Weight((1, -1), GL11)
    assert shift(a + b, mu, 1) == shift(a, mu, 1) + shift(b, mu, 1)


def test_integral_char_chi():
    assert integral_char_chi(Permutation.identity(GL11), 1, 1) == Weight((1, -1), GL11)
    assert integral_char_chi(Permutation.identity(GL11), 1, -1) == Weight((-1, 1), GL11)
    assert integral_char_chi(Permutation.identity(GL21), 1, 1) == Weight((3, -1, -2), GL21)
    with pytest.raises(ValueError):
        integral_char_chi(Permutation.identity(GL11), 1, 2)


def test_highest_term_extremality():
    rng = random.Random(29)
    for shape in (GL11, GL21):
        for _ in range(10):
            lam = Weight(tuple(rng.randint(-3, 3) for _ in range(shape.size)), shape)
            for w in all_permutations(shape):
                c = zhat_char(lam, w, 1)
                assert c.coeff(lam) != 0
                for exp in c.exponents():
                    assert leq_w(Weight(exp, shape), lam, w)


def test_str_form():
    c = zhat_char(Weight.zero(GL11), None, 1)
    assert str(c) == "e^(-1|1) + e^(0|0)"
    assert str(CharacterPoly.zero(GL11)) == "0"
    assert str(CharacterPoly.monomial(Weight((1, 0), GL11), -1)) == "-e^(1|0)"


def test_product_order_independence():
    factors = [odd_factor(r) if r.is_odd else even_factor(r, 1) for r in positive_system(Permutation.identity(GL22)).roots]
    forward = CharacterPoly.one(GL22)
    for f in factors:
        forward = forward * f
    backward = CharacterPoly.one(GL22)
    for f in reversed(factors):
        backward = backward * f
    assert forward == backward
