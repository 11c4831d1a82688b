"""Brute-force references for the tree norm and for strong incomparability.

Nothing here shares code with the dynamic program in :mod:`vectors`: families
of segments are enumerated one by one and disjointness is checked on explicit
node sets.  Only use on small instances.
"""
from __future__ import annotations

import math
from itertools import product
from numbers import Real

from .errors import TooLargeError
from .tree import EXTENDED, MODES, all_nodes, ancestor_closure, comparable, is_ancestor
from .vectors import TreeVector

DEFAULT_CAP = 40


def _path(top: str, bottom: str) -> list[str]:
    return [bottom[:k] for k in range(len(top), len(bottom) + 1)]


def _extended_paths(top: str, closure: set[str]) -> list[list[str]]:
    # leaving the closure only adds zeros, so bottoms inside it suffice
    return [_path(top, b) for b in sorted(closure) if is_ancestor(top, b)]


def _strict_paths(top: str, eta2: int, closure: set[str]) -> list[list[str]]:
    """Paths from ``top`` to level ``eta2``, one per distinct closure part."""
    out = []

    def walk(s: str, trail: list[str]):
        if len(s) == eta2:
            out.append(trail)
            return
        kids = [c for c in (s + "0", s + "1") if c in closure]
        for c in kids:
            walk(c, trail + [c])
        if len(kids) < 2:
            # the rest of the way to eta2 can run through zero entries
            out.append(trail)

    walk(top, [top])
    return out


def _best_family(x: TreeVector, options: list[list[list[str]]]) -> Real:
    best = 0
    for choice in product(*[[None] + opts for opts in options]):
        paths = [p for p in choice if p is not None]
        seen: set[str] = set()
        ok = True
        for p in paths:
            if seen.intersection(p):
                ok = False
                break
            seen.update(p)
        if not ok:
            continue
        total = sum((sum((x[s] for s in p), 0) ** 2 for p in paths), 0)
        if total > best:
            best = total
    return best


def norm_oracle_squared(x: TreeVector, mode: str = EXTENDED, cap: int = DEFAULT_CAP) -> Real:
    """Squared norm by exhaustive enumeration of admissible families.

    Exact for ``int``/``Fraction`` entries.  ``mode="strict"`` keeps the literal
    definition inside the truncated tree: one common span ``eta1 < eta2`` with
    ``eta2 <= depth - 1``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    closure = ancestor_closure(x.entries)
    if len(closure) > cap:
        raise TooLargeError(f"support closure has {len(closure)} nodes, cap is {cap}")
    if not x:
        return 0
    deepest = max(map(len, closure))
    best = 0
    for eta1 in range(deepest + 1):
        tops = sorted(s for s in closure if len(s) == eta1)
        if mode == EXTENDED:
            best = max(best, _best_family(x, [_extended_paths(t, closure) for t in tops]))
        else:
            for eta2 in range(eta1 + 1, x.depth):
                opts = [_strict_paths(t, eta2, closure) for t in tops]
                best = max(best, _best_family(x, opts))
    return best


def norm_oracle(x: TreeVector, mode: str = EXTENDED, cap: int = DEFAULT_CAP) -> float:
    return math.sqrt(norm_oracle_squared(x, mode, cap))


def admissible_families(depth: int) -> list[frozenset[str]]:
    """Node sets covered by every extended-mode admissible family of the
    depth-``depth`` tree (one entry per family)."""
    nodes = list(all_nodes(depth))
    out = []
    for eta1 in range(depth):
        tops = [s for s in nodes if len(s) == eta1]
        per_top = [[None] + [_path(t, b) for b in nodes if is_ancestor(t, b)] for t in tops]
        for choice in product(*per_top):
            paths = [p for p in choice if p is not None]
            if not paths:
                continue
            covered: set[str] = set()
            for p in paths:
                assert not covered.intersection(p)
                covered.update(p)
            out.append(frozenset(covered))
    return out


def strongly_incomparable_brute(nodes, families: list[frozenset[str]]) -> bool:
    """Definition check: pairwise incomparable and no family covers three."""
    nodes = list(nodes)
    for i, a in enumerate(nodes):
        for b in nodes[i + 1 :]:
            if comparable(a, b):
                return False
    target = set(nodes)
    return all(len(target & fam) <= 2 for fam in families)
