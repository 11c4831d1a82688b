"""Finitely supported vectors on the tree and the exact tree norm.

The norm of ``x`` is the supremum, over admissible families of segments, of
the Euclidean length of the vector of segment sums.  Here families are taken
in extended mode: all segments start on a common level, bottoms are free.

Why the level dynamic program is exact
--------------------------------------
Segments starting on the same level are disjoint exactly when their top nodes
differ, so a family with top level ``l`` is nothing but a choice of at most
one downward path per node of level ``l``.  Those choices do not interact, and
the supremum splits into a sum over top nodes of the best squared path sum
below each.  The best path sum from ``s`` is a maximum-path-sum recursion

    up(s)   = x(s) + max(0, up(s0), up(s1))
    down(s) = x(s) + min(0, down(s0), down(s1))

(the ``0`` is the option of stopping at ``s``) and the best absolute value is
``max(up(s), -down(s))``.  Only the ancestor closure of the support matters:
outside it every path sum is zero.

Only ``+``, ``-``, comparisons and squaring are used, so the squared norm is
exact when entries are ``int`` or ``fractions.Fraction``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real
from typing import Mapping

from .errors import DepthExceededError
from .tree import (
    EXTENDED,
    AdmissibleFamily,
    Segment,
    ancestor_closure,
    check_admissible,
    check_bits,
)


@dataclass(frozen=True, eq=False)
class TreeVector:
    """An element of c00 on the depth-``depth`` tree (node levels < depth)."""

    depth: int
    entries: Mapping[str, Real] = field(default_factory=dict)

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"depth must be >= 1, got {self.depth}")
        clean = {}
        for s, v in self.entries.items():
            check_bits(s)
            if len(s) >= self.depth:
                raise DepthExceededError(f"node {s!r} does not fit depth {self.depth}")
            if v != 0:
                clean[s] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def unit(cls, depth: int, node: str, value: Real = 1) -> "TreeVector":
        return cls(depth, {node: value})

    @classmethod
    def zero(cls, depth: int) -> "TreeVector":
        return cls(depth, {})

    def __getitem__(self, s: str) -> Real:
        return self.entries.get(s, 0)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, TreeVector):
            return NotImplemented
        return self.depth == other.depth and self.entries == other.entries

    def __repr__(self):
        return f"TreeVector(depth={self.depth}, entries={self.entries!r})"

    @property
    def support(self) -> list[str]:
        return sorted(self.entries, key=lambda s: (len(s), s))

    def _combine(self, other: "TreeVector", sign: int) -> "TreeVector":
        out = dict(self.entries)
        for s, v in other.entries.items():
            out[s] = out.get(s, 0) + sign * v
        return TreeVector(max(self.depth, other.depth), out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, c: Real):
        return TreeVector(self.depth, {s: c * v for s, v in self.entries.items()})

    __rmul__ = __mul__

    def band(self, lo: int, hi: int | None = None) -> "TreeVector":
        """Restriction to levels ``lo <= lev <= hi``."""
        hi = self.depth if hi is None else hi
        return TreeVector(self.depth, {s: v for s, v in self.entries.items() if lo <= len(s) <= hi})

    def with_depth(self, depth: int) -> "TreeVector":
        return TreeVector(depth, self.entries)


def segment_sum(x: TreeVector, seg: Segment) -> Real:
    if seg.eta2 >= x.depth:
        raise DepthExceededError(f"segment {seg} leaves the depth-{x.depth} tree")
    return sum((x[s] for s in seg.nodes), 0)


@dataclass(frozen=True)
class NormBreakdown:
    value: float
    squared: Real
    witness_level: int | None
    witness_family: AdmissibleFamily | None

    def __float__(self):
        return self.value


def best_path_sums(x: TreeVector) -> tuple[dict, dict]:
    """``up`` and ``down`` best path sums for every node of the support closure."""
    up: dict[str, Real] = {}
    down: dict[str, Real] = {}
    for s in sorted(ancestor_closure(x.entries), key=len, reverse=True):
        kids = [c for c in (s + "0", s + "1") if c in up]
        v = x[s]
        up[s] = v + max([0] + [up[c] for c in kids])
        down[s] = v + min([0] + [down[c] for c in kids])
    return up, down


def _trace(s: str, best: dict, pick) -> str:
    """Follow the optimal continuation from ``s``; stop on ties with zero."""
    while True:
        kids = [c for c in (s + "0", s + "1") if c in best]
        if not kids:
            return s
        # max/min return the first optimum, so child 0 wins ties
        c = pick(kids, key=best.__getitem__)
        if pick(best[c], 0) == 0:
            return s
        s = c


def norm(x: TreeVector) -> NormBreakdown:
    """Exact (extended-mode) norm with a witness family attaining it."""
    if not x:
        return NormBreakdown(0.0, 0, None, None)
    up, down = best_path_sums(x)
    per_level: dict[int, Real] = {}
    for s in up:
        m = max(up[s], -down[s])
        per_level[len(s)] = per_level.get(len(s), 0) + m * m
    best = max(per_level.values())
    lev = min(k for k, v in per_level.items() if v == best)

    segments = []
    for s in sorted(t for t in up if len(t) == lev):
        if up[s] >= -down[s]:
            if up[s] == 0:
                continue
            bottom = _trace(s, up, max)
        else:
            bottom = _trace(s, down, min)
        segments.append(Segment(s, bottom))
    family = check_admissible(segments, EXTENDED)
    return NormBreakdown(math.sqrt(best), best, lev, family)


def norm_value(x: TreeVector) -> float:
    return norm(x).value
