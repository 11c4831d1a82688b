"""
Picking an l1 sequence of branch functionals
============================================

A branch functional adds up a vector along one branch.  From any finite set of
branches we can pick a subsequence and exit nodes that separate it; a signed
sum of the exit-node unit vectors then certifies an l1 lower bound.
"""

import numpy as np

from treespace import BranchCombo, TreeVector, norm
from treespace.branches import extract_rosenthal
from treespace.functionals import dual_norm_bounds

branches = ["111", "000", "001", "011"]
ext = extract_rosenthal(branches)
print("picked", ext.picked_indices, "exit nodes", ext.exit_children)

# the witness has one entry per exit node, signed like the coefficient
a = [2.0, -0.5]
x = TreeVector(4, {t: np.sign(c) for t, c in zip(ext.exit_children, a)})
f = BranchCombo.of([branches[i - 1] for i in ext.picked_indices], a)
print("witness norm", norm(x).value)
print("f(x)/|x| =", abs(f(x)) / norm(x).value, " l1/sqrt2 =", sum(map(abs, a)) / np.sqrt(2))

# a search over more witnesses can only do better
b = dual_norm_bounds(f)
print(f"dual norm in [{b.lower:.4f}, {b.upper:.4f}]")
