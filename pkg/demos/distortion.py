"""
How far from l1 can branch functionals be pushed
================================================

Build the splitting trie of a branch set, run the tournament that selects 2n
branches agreeing in pairs low down and disjoint high up, and bound the
functional that adds the first n and subtracts the last n.
"""

from treespace.branches import build_splitting_tree, select_separated
from treespace.experiments import complete_branches, distortion_table

tree = build_splitting_tree(complete_branches(3, 5))
for e in tree:
    print(e.index, repr(e.t_node), "->", e.split_node, e.branch_count)

sep = select_separated(tree, 3)
print("psi", sep.psi, "eta1", sep.eta1, "eta2", sep.eta2)
print(sep.properties())

# the ratio upper/(2n) falls like 1/sqrt n, while the coefficients have l1 norm 2n
print(f"{'n':>2} {'upper':>9} {'lower':>9} {'delta':>9}")
for row in distortion_table(8, 10, "random", seed=1, effort=40):
    print(f"{row.n:>2} {row.upper_bound:9.4f} {row.lower_estimate:9.4f} {row.delta_bound:9.4f}")
