"""Positive systems and the walk from the standard Borel to its opposite.

Every permutation w picks a positive system Phi^+_w.  Flipping one simple
root at a time walks through adjacent systems: the odd roots first (ending
at the longest minimal coset representative), then the even ones (ending
at the longest element of the symmetric group).

Run with:  python3 demos/02_borel_walk.py
"""

from superblocks import (
    Permutation,
    Shape,
    adjacency_chain,
    dmn_representatives,
    positive_system,
    regular_decomposition,
    simple_roots,
)

shape = Shape(m=2, n=2, p=3)

w = Permutation((3, 1, 4, 2), shape)
print(f"positive system of w = {w}:")
print("  roots:", ", ".join(str(r) for r in positive_system(w).roots))
print("  simple:", ", ".join(str(r) for r in simple_roots(w)))

w0, w1 = regular_decomposition(w)
print(f"\nregular decomposition: w0 = {w0} (block-preserving), w1 = {w1} (minimal rep)")

reps = dmn_representatives(shape)
print(f"\nthe {len(reps)} minimal coset representatives of S_2 x S_2 in S_4:")
print("  " + "  ".join(p.one_line() for p in reps))

chain = adjacency_chain(shape)
chain.verify()
print("\nadjacent Borel walk (odd flips first, then even):")
for t, (root, perm) in enumerate(zip(chain.flipped_roots, chain.permutations[1:]), 1):
    kind = "odd " if root.is_odd else "even"
    print(f"  step {t}: flip {root} ({kind}) -> y_{t} = {perm}")
mid = chain.permutations[shape.m * shape.n]
print(f"\nafter the odd phase: y_mn = {mid} (the longest minimal representative)")
print(f"final permutation:   {chain.permutations[-1]} (the longest element)")
