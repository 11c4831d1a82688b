"""
The interval norm and block sequences
=====================================

On an ordered line of indices the norm takes the largest absolute sum over an
interval, which is the spread of the prefix sums.
"""

from treespace.espace import EVector, enorm, extract_blocks, project

v = EVector.from_list([1, -2, 3, -1])
print("norm", enorm(v), "projections", [enorm(project(v, k)) for k in range(5)])

# from any sequence we can carve a normalized block sequence out of
# consecutive runs, each block starting after the previous one ends
xs = [EVector.from_list(r) for r in ([1], [1, 1], [1, 1, 1], [0, 2, 0, 1], [0, 2, 0, 0, 1])]
res = extract_blocks(xs)
for y, (a, b) in zip(res.blocks, res.ranges):
    print(f"inputs {a}..{b - 1}: block {dict(y.entries)}  norm {enorm(y)}")
