"""Weights, parities and pairings: a tour of GL(2|1) at p = 3.

Run with:  python3 demos/01_weights_and_roots.py
"""

from superblocks import (
    Root,
    Shape,
    Weight,
    degree,
    in_restricted_region,
    is_dominant,
    odd_shifted_pairing,
    pairing_coroot,
    pairing_form,
    rho,
    rho0,
    rho1,
    standard_positive_roots,
)

shape = Shape(m=2, n=1, p=3)
print(f"ambient shape: {shape}")

# A weight is an integer vector split into an even and an odd block.
lam = Weight((3, 1, 0), shape)
print(f"\nweight lam = {lam}  (literal form: first block | second block)")
print(f"dominant: {is_dominant(lam)}   degree: {degree(lam)}")
print(f"restricted region at r=1: {in_restricted_region(lam, 1)}")

# Roots carry a parity: even within a block, odd across the blocks.
print("\nstandard positive roots and their parities:")
for alpha in standard_positive_roots(shape):
    kind = "odd" if alpha.is_odd else "even"
    print(f"  {alpha}: {kind}")

# The two bilinear pairings differ on the odd block.
alpha_even = Root(1, 2, shape)
alpha_odd = Root(1, 3, shape)
print(f"\n(lam, {alpha_even}^vee) = {pairing_coroot(lam, alpha_even)}")
print(f"(lam, {alpha_odd}) under the signed form = {pairing_form(lam, alpha_odd)}")

# The rho vectors are half-integral; they are stored doubled.
print(f"\nrho0 doubled: {rho0(shape).doubled}")
print(f"rho1 doubled: {rho1(shape).doubled}")
print(f"rho  doubled: {rho(shape).doubled}")

# The shifted odd pairing evaluates to lam_i + lam_j + 2m + 1 - i - j and
# drives the odd linkage condition.
for alpha in (Root(1, 3, shape), Root(2, 3, shape)):
    print(f"(lam + rho, {alpha}) = {odd_shifted_pairing(lam, alpha)}")
