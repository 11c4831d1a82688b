"""
Unit vectors that behave like c0
================================

Pairwise incomparable nodes spread over many levels, chosen so that no
admissible family meets three of them.  Sums of their unit vectors never get
longer than sqrt 2 times the largest coefficient.
"""

import numpy as np

from treespace import TreeVector, norm
from treespace.tree import build_strongly_incomparable, check_strongly_incomparable

chain = ["", "0", "00", "000", "0000"]
ts = build_strongly_incomparable(chain)
print("exit nodes", ts, check_strongly_incomparable(ts))

# equal coefficients reach the top constant
x = TreeVector(6, {t: 1 for t in ts})
print("all ones:", norm(x).value)

# random coefficients stay between max|a| and sqrt2 max|a|
rng = np.random.default_rng(0)
for _ in range(5):
    a = rng.normal(size=len(ts))
    v = norm(TreeVector(6, dict(zip(ts, a.tolist())))).value
    print(f"max|a| = {np.max(np.abs(a)):.4f}   norm = {v:.4f}   ratio = {v / np.max(np.abs(a)):.4f}")

# an ordinary antichain on one level is not c0-like: it is l2-like
level = ["000", "001", "010", "011"]
print("one level:", norm(TreeVector(6, {t: 1 for t in level})).value)
