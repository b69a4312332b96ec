import random
from fractions import Fraction

import pytest

from superblocks import (
    HalfWeight,
    Root,
    Shape,
    ShapeMismatchError,
    Weight,
    degree,
    in_restricted_region,
    is_dominant,
    odd_shifted_pairing,
    pairing_coroot,
    pairing_form,
    parse_literal,
    rho,
    rho0,
    rho1,
    standard_positive_roots,
    to_literal,
)

GL11 = Shape(1, 1, 3)
GL21 = Shape(2, 1, 3)
GL22 = Shape(2, 2, 3)


def brute_force_half_sum(shape, parity):
    # oracle: sum the root vectors directly, keep the doubled representation
    doubled = [0] * shape.size
    for i in range(1, shape.size + 1):
        for j in range(i + 1, shape.size + 1):
            if (shape.parity(i) + shape.parity(j)) % 2 != parity:
                continue
            doubled[i - 1] += 1
            doubled[j - 1] -= 1
    return tuple(doubled)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (3, 3)])
def test_rho_matches_brute_force_half_sums(m, n):
    shape = Shape(m, n, 3)
    assert rho0(shape).doubled == brute_force_half_sum(shape, 0)
    assert rho1(shape).doubled == brute_force_half_sum(shape, 1)
    assert rho(shape).doubled == tuple(
        a - b for a, b in zip(rho0(shape).doubled, rho1(shape).doubled)
    )


def test_rho_known_values():
    assert rho0(GL11).doubled == (0, 0)
    assert rho1(GL11).doubled == (1, -1)
    assert rho(GL11).doubled == (-1, 1)
    assert rho0(GL21).doubled == (1, -1, 0)
    assert rho1(GL21).doubled == (1, 1, -2)
    assert rho(GL21).doubled == (0, -2, 2)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_sum_of_all_positive_roots_is_twice_rho0_plus_rho1(m, n):
    shape = Shape(m, n, 3)
    total = Weight.zero(shape)
    for alpha in standard_positive_roots(shape):
        total = total + alpha.as_weight()
    both = rho0(shape) + rho1(shape)
    assert total.doubled() == tuple(2 * d for d in both.doubled)


def test_pairing_coroot_examples():
    assert pairing_coroot(Weight((3, 1, 0), GL21), Root(1, 2, GL21)) == 2
    for alpha in standard_positive_roots(GL21):
        assert pairing_coroot(Weight.zero(GL21), alpha) == 0
    assert pairing_coroot(rho0(GL21), Root(1, 2, GL21)) == 1


def test_pairing_coroot_can_be_half_integral():
    # rho0 of GL(2|1) is (1/2, -1/2 | 0)
    assert pairing_coroot(rho0(GL21), Root(1, 3, GL21)) == Fraction(1, 2)
    assert pairing_coroot(rho1(GL11), Root(1, 2, GL11)) == 1


def test_pairing_form_examples():
    assert pairing_form(Weight((2, 1), GL11), Root(1, 2, GL11)) == 3
    assert pairing_form(Weight((3, 1, 0), GL21), Root(1, 2, GL21)) == 2
    assert pairing_form(Weight.zero(GL21), Root(2, 3, GL21)) == 0
    assert pairing_form(rho(GL11), Root(1, 2, GL11)) == 0


def test_pairing_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        pairing_coroot(Weight((1, 0), GL11), Root(1, 2, GL21))


def test_odd_shifted_pairing_examples():
    assert odd_shifted_pairing(Weight((2, 1), GL11), Root(1, 2, GL11)) == 3
    assert odd_shifted_pairing(Weight.zero(GL21), Root(1, 3, GL21)) == 1
    assert odd_shifted_pairing(Weight.zero(GL21), Root(2, 3, GL21)) == 0


def test_odd_shifted_pairing_rejects_non_odd_roots():
    with pytest.raises(ValueError):
        odd_shifted_pairing(Weight.zero(GL21), Root(1, 2, GL21))
    with pytest.raises(ValueError):
        odd_shifted_pairing(Weight.zero(GL21), Root(3, 1, GL21))


@pytest.mark.parametrize("m,n,p", [(1, 1, 3), (2, 1, 3), (2, 2, 5), (3, 2, 3)])
def test_odd_shifted_pairing_agrees_with_rho_shift(m, n, p):
    # the closed form must equal (lam, alpha) + (rho, alpha) in doubled arithmetic
    shape = Shape(m, n, p)
    rng = random.Random(7 * m + n)
    odd_roots = [r for r in standard_positive_roots(shape) if r.is_odd]
    for _ in range(100):
        lam = Weight(tuple(rng.randint(-9, 9) for _ in range(shape.size)), shape)
        for alpha in odd_roots:
            via_rho = pairing_form(lam, alpha) + pairing_form(rho(shape), alpha)
            assert odd_shifted_pairing(lam, alpha) == via_rho


def test_is_dominant():
    assert is_dominant(Weight((3, -1, 0), GL21))
    assert not is_dominant(Weight((0, 1, 0), GL21))
    assert is_dominant(Weight.zero(GL21))
    # no condition across the seam
    assert is_dominant(Weight((0, 0, 5), GL21))
    # within GL(1|1) every weight is dominant
    assert is_dominant(Weight((-4, 9), GL11))


def test_degree():
    assert degree(Weight((2, 1), GL11)) == (3, 2, 1)
    assert degree(Weight.zero(GL11)) == (0, 0, 0)
    assert degree(Weight((2, 0, 1, 0), GL22)) == (3, 2, 1)


def test_in_restricted_region():
    assert in_restricted_region(Weight((17, -4), GL11), 1)
    assert in_restricted_region(Weight((2, 0, 0), GL21), 1)
    assert not in_restricted_region(Weight((3, 0, 0), GL21), 1)
    assert in_restricted_region(Weight((3, 0, 0), GL21), 2)


def test_half_weight_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        h = HalfWeight(tuple(rng.randint(-9, 9) for _ in range(3)), GL21)
        w = Weight(tuple(rng.randint(-9, 9) for _ in range(3)), GL21)
        assert (h + w) - w == h


def test_half_weight_integrality():
    h = HalfWeight((2, -4, 6), GL21)
    assert h.is_integral() and h.to_weight().coords == (1, -2, 3)
    odd = HalfWeight((1, 0, -1), GL21)
    assert not odd.is_integral()
    with pytest.raises(ValueError):
        odd.to_weight()


def test_shape_validation():
    with pytest.raises(ValueError, match="characteristic 2"):
        Shape(1, 1, 2)
    with pytest.raises(ValueError):
        Shape(1, 1, 9)
    with pytest.raises(ValueError):
        Shape(0, 1, 3)
    with pytest.raises(ValueError):
        Shape(1, 1, 3, 0)


def test_literal_round_trip():
    lam = Weight((2, 0, 1, 0), GL22)
    assert to_literal(lam) == "2,0|1,0"
    assert parse_literal("2,0|1,0", GL22) == lam
    assert parse_literal("2,0,1,0", GL22) == lam
    assert parse_literal("-1,2|5", GL21).coords == (-1, 2, 5)
    with pytest.raises(ValueError):
        parse_literal("2,0|1", GL22)
    with pytest.raises(ValueError):
        parse_literal("2,x|1,0", GL22)
