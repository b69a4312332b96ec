"""Formal characters of the induced families and their identities.

The character is an exact product: one truncated geometric series per
even positive root and one two-term factor per odd positive root, times
the highest-weight monomial.  Changing the Borel changes nothing once
the highest weight is bracket-shifted.

Run with:  python3 demos/03_characters.py
"""

from superblocks import (
    Permutation,
    Shape,
    Weight,
    all_permutations,
    bracket_weight,
    integral_char_chi,
    shift,
    zhat_char,
)

shape = Shape(m=1, n=1, p=3, r=1)
lam = Weight((2, 0), shape)

c = zhat_char(lam)
print(f"ch at highest weight {lam}: {c}")
print(f"dimension (value at all ones): {c.evaluate_at_ones()}")

# Independence of the Borel: shift the highest weight, get the same character.
print("\nsame character from every Borel:")
for w in all_permutations(shape):
    shifted = bracket_weight(lam, w)
    print(f"  w = {w}: lam<w> = {shifted},  equal: {zhat_char(shifted, w) == c}")

# The tensor-shift identity: adding p^r * mu multiplies by one monomial.
mu = Weight((1, -1), shape)
lhs = zhat_char(lam + 3 * mu)
rhs = shift(zhat_char(lam), mu)
print(f"\ntensor shift by p*mu with mu = {mu}: {lhs == rhs}")

# A bigger example: GL(2|1) at the zero weight has dimension p^N * 2^(mn) = 12.
big = Shape(2, 1, 3)
big_char = zhat_char(Weight.zero(big))
print(f"\nGL(2|1) character of the zero weight ({big_char.n_terms} monomials):")
print(f"  {big_char}")
print(f"  dimension: {big_char.evaluate_at_ones()}")

# The integral character of the Borel's Frobenius kernel.
chi = integral_char_chi(Permutation.identity(big), sign=+1)
print(f"\nintegral character chi^+ for GL(2|1): {chi}")
