"""Combinatorics of finite branch sets.

* :func:`extract_rosenthal` picks an l1-subsequence of branch functionals by
  repeatedly splitting the active branches and keeping the majority side.
* :func:`build_splitting_tree` condenses a branch set into its splitting trie,
  numbered in heap order (entry ``m`` has children ``2m`` and ``2m + 1``).
* :func:`select_separated` runs the tournament on one trie level and returns
  ``2n`` branches with the disjointness pattern used by
  :func:`separation_upper_bound`.

Branch positions in :class:`ExtractionResult` are 1-based, matching the line
numbers of a branch file.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    DuplicateBranchesError,
    EmptyInputError,
    LengthMismatchError,
    NeedTwoBranchesError,
    TrieIncompleteError,
)
from .tree import check_bits, meet

SQRT2 = math.sqrt(2.0)


def _common_prefix(branches) -> str:
    branches = list(branches)
    return meet(min(branches), max(branches))


def check_branches(branches: Sequence[str]) -> int:
    """Validate a branch list and return its depth."""
    if not branches:
        raise EmptyInputError("no branches given")
    for b in branches:
        check_bits(b, "branch")
    depth = len(branches[0])
    if any(len(b) != depth for b in branches):
        raise LengthMismatchError("branches have different lengths")
    if len(set(branches)) != len(branches):
        raise DuplicateBranchesError("branch list contains duplicates")
    return depth


# -- subsequence extraction ---------------------------------------------------


@dataclass(frozen=True)
class ExtractionResult:
    picked_indices: list[int]
    split_nodes: list[str]
    continue_children: list[str]
    exit_children: list[str]

    def __len__(self):
        return len(self.picked_indices)


def extract_rosenthal(branches: Sequence[str]) -> ExtractionResult:
    if len(branches) < 2:
        raise NeedTwoBranchesError("extraction needs at least two branches")
    check_branches(branches)
    active = list(range(1, len(branches) + 1))
    picked, splits, conts, exits = [], [], [], []
    while len(active) >= 2:
        s = _common_prefix(branches[i - 1] for i in active)
        if len(s) == len(branches[0]):
            break
        sides = {"0": [], "1": []}
        for i in active:
            sides[branches[i - 1][len(s)]].append(i)
        bit = "0" if len(sides["0"]) >= len(sides["1"]) else "1"
        other = "1" if bit == "0" else "0"
        pick = sides[other][0]
        picked.append(pick)
        splits.append(s)
        conts.append(s + bit)
        exits.append(s + other)
        active = [i for i in sides[bit] if i > pick]
    return ExtractionResult(picked, splits, conts, exits)


# -- splitting trie ----------------------------------------------------------


@dataclass(frozen=True)
class TrieEntry:
    index: int
    t_node: str
    split_node: str | None  # None on leaves
    branch_count: int
    branches: tuple[str, ...] = field(repr=False)

    @property
    def is_leaf(self) -> bool:
        return self.split_node is None

    @property
    def trie_level(self) -> int:
        return self.index.bit_length() - 1


@dataclass(frozen=True)
class SplittingTree:
    entries: dict[int, TrieEntry]
    depth: int

    def __getitem__(self, m: int) -> TrieEntry:
        return self.entries[m]

    def __contains__(self, m: int) -> bool:
        return m in self.entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries[m] for m in sorted(self.entries))

    def leaves(self) -> list[TrieEntry]:
        return [e for e in self if e.is_leaf]

    def complete_through(self) -> int:
        """Largest ``n`` such that trie level ``n`` has all ``2**n`` entries."""
        n = 0
        while all(m in self.entries for m in range(2 ** (n + 1), 2 ** (n + 2))):
            n += 1
        return n


def _find_split(t: str, branches: list[str], min_count: int, max_split_level: int | None):
    """Walk down from ``t`` to the first node whose two children each carry at
    least ``min_count`` branches."""
    s = t
    depth = len(branches[0])
    while len(s) < depth and (max_split_level is None or len(s) < max_split_level):
        n0 = sum(1 for b in branches if b[len(s)] == "0")
        n1 = len(branches) - n0
        if n0 >= min_count and n1 >= min_count:
            return s
        s += "0" if n0 >= n1 else "1"
        branches = [b for b in branches if b.startswith(s)]
        if len(branches) < 2 * min_count:
            return None
    return None


def build_splitting_tree(
    branches, min_count: int = 1, max_split_level: int | None = None
) -> SplittingTree:
    """Condensation trie of ``branches``.

    With the defaults every entry splits at the longest common prefix of its
    branches and leaves hold single branches.  ``min_count`` asks both sides of
    a split to carry that many branches (walking towards the larger side until
    they do); ``max_split_level`` forbids splits at or below that tree level.
    """
    branches = sorted(branches)
    depth = check_branches(branches)
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    entries: dict[int, TrieEntry] = {}
    stack = [(1, "", branches)]
    while stack:
        m, t, bs = stack.pop()
        s = _find_split(t, bs, min_count, max_split_level) if len(bs) > 1 else None
        entries[m] = TrieEntry(m, t, s, len(bs), tuple(bs))
        if s is not None:
            for k, bit in enumerate("01"):
                c = s + bit
                stack.append((2 * m + k, c, [b for b in bs if b.startswith(c)]))
    return SplittingTree(entries, depth)


# -- tournament selection ----------------------------------------------------


@dataclass(frozen=True)
class SeparationData:
    branches: list[str]  # B_1 .. B_2n
    psi: list[str]  # psi_1 .. psi_n
    eta1: int
    eta2: int

    @property
    def n(self) -> int:
        return len(self.psi)

    def properties(self) -> dict[str, bool]:
        """Check the three disjointness properties on explicit node sets."""
        n, bs = self.n, self.branches

        def nodes(b, lo, hi):
            return {b[:k] for k in range(lo, min(hi, len(b)) + 1)}

        d = len(bs[0])
        tails = [nodes(b, self.eta2 + 1, d) for b in bs]
        mids = [nodes(b, self.eta1 + 1, self.eta2) for b in bs]

        def pairwise_disjoint(sets):
            return all(not (a & b) for i, a in enumerate(sets) for b in sets[i + 1 :])

        return {
            "tails_disjoint": pairwise_disjoint(tails),
            "middles_disjoint": pairwise_disjoint(mids[:n]) and pairwise_disjoint(mids[n:]),
            "heads_agree": all(
                nodes(bs[i], 0, self.eta1) == nodes(bs[n + i], 0, self.eta1) for i in range(n)
            ),
            "psi_monotone": all(len(a) >= len(b) for a, b in zip(self.psi, self.psi[1:])),
        }


def select_separated(tree: SplittingTree, n: int) -> SeparationData:
    if n < 1:
        raise ValueError("n must be >= 1")
    level = range(2**n, 2 ** (n + 1))
    if not all(m in tree for m in level):
        raise TrieIncompleteError(f"trie level {n} is incomplete (complete through {tree.complete_through()})")
    left, right, psi = [], [], []
    root = 1
    for k in range(n):
        # pair (2p, 2p+1) at level n has parent p; p ranges over level n-1 below root
        span = n - 1 - k
        parents = range(root << span, (root + 1) << span)
        p = max(parents, key=lambda p: (len(tree[p].split_node), -p))
        psi.append(tree[p].split_node)
        left.append(tree[2 * p].branches[0])
        right.append(tree[2 * p + 1].branches[0])
        if span:
            # drop the child of root containing p, keep working in the other one
            towards = p >> (span - 1)
            root = towards ^ 1
    return SeparationData(left + right, psi, len(psi[-1]), len(psi[0]))


def separation_upper_bound(sep: SeparationData, a: Sequence[float]) -> float:
    """``(sqrt2 + 1) * |a|_2 + sum_i |a_i + a_{n+i}|``, which bounds the dual norm
    of ``sum a_i B_i*`` over the separated branches."""
    n = sep.n
    if len(a) != 2 * n:
        raise LengthMismatchError(f"expected {2 * n} coefficients, got {len(a)}")
    l2 = math.sqrt(sum(v * v for v in a))
    return (SQRT2 + 1) * l2 + sum(abs(a[i] + a[n + i]) for i in range(n))
