"""
Norms of vectors on the dyadic tree
===================================

A vector lives on the nodes of a finite binary tree.  Its norm is the largest
Euclidean length of the sums over disjoint segments that start on one level.
"""

from fractions import Fraction

from treespace import TreeVector, norm
from treespace.oracle import norm_oracle

# unit vectors have norm one, wherever they sit
for node in ["", "0", "101"]:
    print(repr(node), norm(TreeVector.unit(4, node)).value)

# two incomparable nodes on different levels: one segment each, sqrt 2
x = TreeVector(4, {"1": 1, "01": 1})
nb = norm(x)
print("norm", nb.value, "at level", nb.witness_level)
for seg in nb.witness_family.segments:
    print("  segment", seg)

# a node and its descendant collapse into one segment
print("chain", norm(TreeVector(4, {"0": 1, "01": 1})).value)

# the dynamic program agrees with brute-force enumeration
y = TreeVector(3, {"": Fraction(1, 2), "0": -1, "11": 2, "10": 1})
print("dp", norm(y).squared, "oracle", norm_oracle(y) ** 2)
