"""Block membership with certificates: defects, moves, companions, classes.

Run with:  python3 demos/04_blocks.py
"""

import json

from superblocks import (
    Box,
    Linked,
    Root,
    Shape,
    Weight,
    companion,
    defect,
    enumerate_block_classes,
    even_linked,
    fingerprint,
    lower_reflection,
    odd_neighbors,
    same_block,
    serial,
)

shape = Shape(m=1, n=1, p=3)
lam = Weight((2, 1), shape)

print(f"fingerprint of {lam}: {fingerprint(lam)}")
print("accepted odd moves from", lam, ":")
for mu, root, sign in odd_neighbors(lam):
    print(f"  {'+' if sign > 0 else '-'}{root} -> {mu}")

# A certified chain between two dominant weights.
result = same_block(lam, Weight((1, 2), shape), Box.uniform(2, -5, 5))
assert isinstance(result, Linked)
print(f"\nchain found ({len(result.chain)} step):")
print(serial.chain_to_text(result.chain))
print("replay through the validator:", result.chain.validate())
print("as JSON:", json.dumps(serial.chain_to_records(result.chain)))

# A sound negative: different fingerprints can never be linked.
verdict = same_block(lam, Weight((1, 1), shape), Box.uniform(2, -5, 5))
print(f"\n(2|1) vs (1|1): {type(verdict).__name__}")

# Defects and companions over GL(2|1).
big = Shape(2, 1, 3)
skew = Weight((0, 2, 0), big)
print(f"\ndefect of {skew}: {defect(skew)}")
comp = companion(skew)
print(f"companion (dominant, same defect, same coset): {comp}")

# Lowering along an even root keeps companions even-linked.
lowered = lower_reflection(Weight((4, 0, 0), big), Root(1, 2, big), 1)
print(f"lower reflection of 4,0|0 along e1-e2 at e=1: {lowered}")
witness = even_linked(companion(Weight((4, 0, 0), big)), companion(lowered))
print(f"companions stay even-linked, witness: w = {witness.witness}, "
      f"delta = {witness.translation}")

# All block classes inside a small box, labeled by fingerprints.
classes = enumerate_block_classes(shape, Box.uniform(2, 0, 2))
print(f"\nblock classes of GL(1|1) weights in [0,2]^2 ({len(classes.classes)} classes):")
for cls, fp in zip(classes.classes, classes.fingerprints):
    members = " ".join(str(w) for w in cls)
    print(f"  [{fp}] {members}")
