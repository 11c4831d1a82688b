"""The dyadic tree truncated to finite depth.

Nodes and branches are plain ``str`` objects over the alphabet ``{"0", "1"}``.
The root is the empty string and the level of a node is its length, so the
initial-segment order is just the prefix relation.

A tree of depth ``d`` carries the nodes of levels ``0 .. d-1``.  A branch of
depth ``d`` is a bit string of length ``d``; it passes through its ``d + 1``
prefixes.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegenerateSpanError,
    DepthExceededError,
    DuplicateNodesError,
    MixedSpanError,
    NotAChainError,
    OverlapError,
)

ROOT = ""
STRICT = "strict"
EXTENDED = "extended"
MODES = (STRICT, EXTENDED)


def check_bits(s: str, what: str = "node") -> str:
    if not isinstance(s, str) or s.strip("01"):
        raise ValueError(f"{what} must be a string over '0'/'1', got {s!r}")
    return s


def level(s: str) -> int:
    return len(s)


def children(s: str) -> tuple[str, str]:
    return s + "0", s + "1"


def sibling(s: str) -> str:
    if not s:
        raise ValueError("the root has no sibling")
    return s[:-1] + ("1" if s[-1] == "0" else "0")


def prefixes(s: str, start: int = 0) -> Iterator[str]:
    """Yield the ancestors-or-self of ``s`` from level ``start`` downwards."""
    for k in range(start, len(s) + 1):
        yield s[:k]


def is_ancestor(a: str, b: str) -> bool:
    """``a <= b`` in the initial-segment order (reflexive)."""
    return b.startswith(a)


def comparable(a: str, b: str) -> bool:
    return a.startswith(b) or b.startswith(a)


def meet(a: str, b: str) -> str:
    """Deepest common ancestor of two nodes."""
    return os.path.commonprefix([a, b])


def nodes_at_level(lev: int) -> Iterator[str]:
    for k in range(2**lev):
        yield format(k, f"0{lev}b") if lev else ROOT


def all_nodes(depth: int) -> Iterator[str]:
    """All nodes of the depth-``depth`` tree, level by level."""
    for lev in range(depth):
        yield from nodes_at_level(lev)


def ancestor_closure(nodes: Iterable[str]) -> set[str]:
    out: set[str] = set()
    for s in nodes:
        # walk up until we hit something already present
        k = len(s)
        while k >= 0 and s[:k] not in out:
            out.add(s[:k])
            k -= 1
    return out


@dataclass(frozen=True)
class Segment:
    """The chain of nodes from ``top`` down to ``bottom`` (inclusive)."""

    top: str
    bottom: str

    def __post_init__(self):
        check_bits(self.top)
        check_bits(self.bottom)
        if not is_ancestor(self.top, self.bottom):
            raise ValueError(f"{self.top!r} is not an ancestor of {self.bottom!r}")

    @property
    def eta1(self) -> int:
        return len(self.top)

    @property
    def eta2(self) -> int:
        return len(self.bottom)

    @property
    def nodes(self) -> tuple[str, ...]:
        return tuple(prefixes(self.bottom, len(self.top)))

    def __contains__(self, s: str) -> bool:
        return len(self.top) <= len(s) and is_ancestor(s, self.bottom)

    def __str__(self):
        return f"{self.top or '-'}>{self.bottom or '-'}"


@dataclass(frozen=True)
class AdmissibleFamily:
    """A validated admissible family; build it with :func:`check_admissible`.

    In extended mode the segments share their top level ``eta1`` but each may
    stop at its own bottom level; ``eta2`` is then the deepest bottom.
    """

    segments: tuple[Segment, ...]
    eta1: int
    eta2: int
    mode: str = EXTENDED

    def __iter__(self):
        return iter(self.segments)

    def __len__(self):
        return len(self.segments)

    def covered(self) -> set[str]:
        return {s for seg in self.segments for s in seg.nodes}


def check_admissible(segments: Sequence[Segment], mode: str = EXTENDED) -> AdmissibleFamily:
    """Validate ``segments`` as an admissible family.

    Strict mode is the literal definition: one common span ``eta1 < eta2``.
    Extended mode regards every segment as prolonged below the truncation, so
    single-node segments are fine and bottoms need not line up; only the top
    level must be shared.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    segments = tuple(segments)
    if not segments:
        raise ValueError("an admissible family needs at least one segment")
    eta1 = segments[0].eta1
    if any(seg.eta1 != eta1 for seg in segments):
        raise MixedSpanError("segments start on different levels")
    eta2 = max(seg.eta2 for seg in segments)
    if mode == STRICT:
        if any(seg.eta2 != eta2 for seg in segments):
            raise MixedSpanError("segments end on different levels")
        if eta1 == eta2:
            raise DegenerateSpanError(f"strict admissibility needs eta1 < eta2, got {eta1} = {eta2}")
    # same top level: two chains intersect iff they start at the same node
    tops = [seg.top for seg in segments]
    if len(set(tops)) != len(tops):
        dup = next(t for t in tops if tops.count(t) > 1)
        raise OverlapError(f"two segments start at node {dup or '-'!s}")
    return AdmissibleFamily(segments, eta1, eta2, mode)


def build_strongly_incomparable(chain: Sequence[str], depth: int | None = None) -> list[str]:
    """Exit nodes of a strictly ascending chain.

    For each chain element the child pointing away from the next element is
    returned; the last element contributes its ``0`` child.
    """
    chain = [check_bits(s) for s in chain]
    for a, b in zip(chain, chain[1:]):
        if len(b) <= len(a) or not is_ancestor(a, b):
            raise NotAChainError(f"{a or '-'} does not strictly precede {b or '-'}")
    out = []
    for i, s in enumerate(chain):
        if i + 1 < len(chain):
            toward = chain[i + 1][len(s)]
            out.append(s + ("1" if toward == "0" else "0"))
        else:
            out.append(s + "0")
    if depth is not None and out and max(map(len, out)) >= depth:
        raise DepthExceededError(f"exit nodes reach level {max(map(len, out))}, tree depth is {depth}")
    return out


def triple_coverable(a: str, b: str, c: str) -> bool:
    """Can one admissible family cover all three (pairwise incomparable) nodes?

    They must sit in three different segments, so the common top level has to
    lie strictly below every pairwise meet and at or above every node.
    """
    lo = max(len(meet(a, b)), len(meet(a, c)), len(meet(b, c))) + 1
    return lo <= min(len(a), len(b), len(c))


def check_strongly_incomparable(nodes: Sequence[str]) -> bool:
    nodes = [check_bits(s) for s in nodes]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodesError("node list contains duplicates")
    if any(comparable(a, b) for a, b in combinations(nodes, 2)):
        return False
    return not any(triple_coverable(*t) for t in combinations(nodes, 3))
