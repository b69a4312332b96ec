import itertools
import math
import random

import pytest

from superblocks import (
    Permutation,
    Root,
    Shape,
    Weight,
    adjacency_chain,
    all_permutations,
    block_permutations,
    dmn_representatives,
    dot_action,
    is_minimal_coset_rep,
    leq_w,
    longest_dmn,
    longest_element,
    positive_system,
    reflect,
    regular_decomposition,
    rho0,
    rho0_of,
    rho1,
    rho1_of,
    s_alpha,
    simple_roots,
    standard_positive_roots,
    verify_adjacency_chain,
)

GL11 = Shape(1, 1, 3)
GL21 = Shape(2, 1, 3)
GL22 = Shape(2, 2, 3)


def test_root_parity():
    assert Root(1, 2, GL21).is_even
    assert Root(1, 3, GL21).is_odd
    assert Root(3, 1, GL21).is_odd
    assert Root(3, 4, GL22).is_even
    assert Root(1, 3, GL21).is_odd_positive
    assert not Root(3, 1, GL21).is_odd_positive


def test_positive_system_examples():
    assert set(positive_system(Permutation.identity(GL11)).roots) == {Root(1, 2, GL11)}
    assert set(positive_system(Permutation((2, 1), GL11)).roots) == {Root(2, 1, GL11)}
    assert set(positive_system(Permutation.identity(GL21)).roots) == {
        Root(1, 2, GL21),
        Root(1, 3, GL21),
        Root(2, 3, GL21),
    }


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2)])
def test_positive_system_partitions_all_roots(m, n):
    shape = Shape(m, n, 3)
    all_roots = {
        Root(i, j, shape)
        for i in range(1, shape.size + 1)
        for j in range(1, shape.size + 1)
        if i != j
    }
    for w in all_permutations(shape):
        pos = set(positive_system(w).roots)
        neg = {r.negated() for r in pos}
        assert pos | neg == all_roots and not pos & neg


def test_simple_roots_examples():
    assert simple_roots(Permutation.identity(GL21)) == (Root(1, 2, GL21), Root(2, 3, GL21))
    assert simple_roots(Permutation.identity(GL11)) == (Root(1, 2, GL11),)
    assert simple_roots(Permutation((2, 1), GL11)) == (Root(2, 1, GL11),)


def test_reflect_examples_and_involution():
    assert reflect(Weight((3, 1, 0), GL21), Root(1, 2, GL21)).coords == (1, 3, 0)
    assert reflect(Weight.zero(GL21), Root(1, 3, GL21)) == Weight.zero(GL21)
    assert reflect(Weight((2, 1), GL11), Root(1, 2, GL11)).coords == (1, 2)
    rng = random.Random(3)
    for _ in range(50):
        lam = Weight(tuple(rng.randint(-9, 9) for _ in range(4)), GL22)
        alpha = rng.choice(standard_positive_roots(GL22))
        assert reflect(reflect(lam, alpha), alpha) == lam


def test_dot_action_examples():
    swap = Permutation((2, 1, 3), GL21)
    assert dot_action(swap, Weight((1, 0, 5), GL21)).coords == (-1, 2, 5)
    assert dot_action(Permutation.identity(GL21), Weight((1, 0, 5), GL21)).coords == (1, 0, 5)
    # lam + rho0 symmetric in the first block: fixed point
    assert dot_action(swap, Weight((4, 5, 7), GL21)).coords == (4, 5, 7)


def test_dot_action_rejects_block_mixing():
    with pytest.raises(ValueError):
        dot_action(Permutation((3, 2, 1), GL21), Weight.zero(GL21))


def test_dot_action_is_an_action():
    rng = random.Random(11)
    ws = list(block_permutations(GL22))
    for _ in range(60):
        v, w = rng.choice(ws), rng.choice(ws)
        lam = Weight(tuple(rng.randint(-6, 6) for _ in range(4)), GL22)
        assert dot_action(v * w, lam) == dot_action(v, dot_action(w, lam))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_dmn_representatives(m, n):
    shape = Shape(m, n, 3)
    reps = dmn_representatives(shape)
    assert len(reps) == math.comb(m + n, m)
    assert Permutation.identity(shape) in reps
    for w in reps:
        assert is_minimal_coset_rep(w)


def test_dmn_gl11_is_all_of_s2():
    assert {w.images for w in dmn_representatives(GL11)} == {(1, 2), (2, 1)}


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2), (2, 3), (4, 1)])
def test_regular_decomposition_exhaustive(m, n):
    shape = Shape(m, n, 3)
    reps = set(dmn_representatives(shape))
    blocks = set(block_permutations(shape))
    for w in all_permutations(shape):
        w0, w1 = regular_decomposition(w)
        assert w0 in blocks and w1 in reps
        assert w0 * w1 == w
    # uniqueness: the (w0, w1) products are pairwise distinct and exhaust S_{m+n}
    products = {(w0 * w1).images for w0 in blocks for w1 in reps}
    assert len(products) == math.factorial(m + n)


def test_regular_decomposition_examples():
    w = Permutation((2, 1), GL11)
    w0, w1 = regular_decomposition(w)
    assert w0.is_identity and w1 == w
    v = Permutation((2, 1, 3), GL21)
    v0, v1 = regular_decomposition(v)
    assert v0 == v and v1.is_identity


def test_adjacency_chain_gl11():
    chain = adjacency_chain(GL11)
    assert [p.images for p in chain.permutations] == [(1, 2), (2, 1)]
    assert chain.flipped_roots == (Root(1, 2, GL11),)


def test_adjacency_chain_gl21_step_counts():
    chain = adjacency_chain(GL21)
    assert len(chain.permutations) == 4  # 1 + mn + N = 1 + 2 + 1
    assert sum(1 for r in chain.flipped_roots if r.is_odd) == 2
    assert sum(1 for r in chain.flipped_roots if r.is_even) == 1


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (3, 3)])
def test_adjacency_chain_flips_one_root_per_step(m, n):
    shape = Shape(m, n, 3)
    chain = adjacency_chain(shape)
    verify_adjacency_chain(chain)
    mn = m * n
    for t in range(1, len(chain.permutations)):
        before = set(positive_system(chain.permutations[t - 1]).roots)
        after = set(positive_system(chain.permutations[t]).roots)
        assert len(before.symmetric_difference(after)) == 2
        flipped_so_far = before - set(positive_system(chain.permutations[0]).roots)
        # odd flips happen first, one per step
        n_odd = sum(1 for r in flipped_so_far if r.is_odd)
        assert n_odd == min(t - 1, mn)
    assert chain.permutations[mn] == longest_dmn(shape)
    assert chain.permutations[mn].n_inversions() == mn
    assert chain.permutations[-1] == longest_element(shape)


def test_longest_dmn_maximizes_length():
    for shape in (GL21, GL22, Shape(3, 2, 3)):
        reps = dmn_representatives(shape)
        best = max(reps, key=lambda w: w.n_inversions())
        assert best == longest_dmn(shape)


def test_leq_w_examples():
    wid = Permutation.identity(GL21)
    assert leq_w(Weight((0, 1, 0), GL21), Weight((1, 0, 0), GL21), wid)
    assert not leq_w(Weight((1, 0, 0), GL21), Weight((0, 1, 0), GL21), wid)
    lam = Weight((4, -1, 2), GL21)
    assert leq_w(lam, lam, wid)


def brute_force_leq(mu, lam, w, bound=6):
    diff = tuple(a - b for a, b in zip(lam.coords, mu.coords))
    basis = [r.as_weight().coords for r in simple_roots(w)]
    for coeffs in itertools.product(range(bound + 1), repeat=len(basis)):
        vec = [0] * len(diff)
        for c, b in zip(coeffs, basis):
            for k in range(len(diff)):
                vec[k] += c * b[k]
        if tuple(vec) == diff:
            return True
    return False


def test_leq_w_against_brute_force_sample():
    rng = random.Random(2)
    for shape in (GL11, GL21):
        perms = list(all_permutations(shape))
        for _ in range(150):
            w = rng.choice(perms)
            lam = Weight(tuple(rng.randint(-3, 3) for _ in range(shape.size)), shape)
            mu = Weight(tuple(rng.randint(-3, 3) for _ in range(shape.size)), shape)
            assert leq_w(mu, lam, w) == brute_force_leq(mu, lam, w)


def test_rho_of_w_specializes_at_identity():
    for shape in (GL11, GL21, GL22):
        assert rho0_of(Permutation.identity(shape)) == rho0(shape)
        assert rho1_of(Permutation.identity(shape)) == rho1(shape)
    # at the longest element both half-sums negate
    for shape in (GL11, GL21, GL22):
        w = longest_element(shape)
        assert rho0_of(w).doubled == tuple(-d for d in rho0(shape).doubled)
        assert rho1_of(w).doubled == tuple(-d for d in rho1(shape).doubled)


def test_permutation_basics():
    w = Permutation((3, 1, 2), GL21)
    assert w(1) == 3 and w.inverse()(3) == 1
    assert (w * w.inverse()).is_identity
    assert w.permute((10, 20, 30)) == (20, 30, 10)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2), GL21)


def test_s_alpha_is_value_transposition():
    t = s_alpha(Root(1, 3, GL21))
    assert t.images == (3, 2, 1)
    lam = Weight((5, 7, -2), GL21)
    assert t.act(lam).coords == (-2, 7, 5)
