"""Seeded random instances for property checks and experiments."""
from __future__ import annotations

import numpy as np

from .espace import EVector
from .tree import all_nodes, sibling
from .vectors import TreeVector


def bits(rng: np.random.Generator, k: int) -> str:
    return "".join("01"[b] for b in rng.integers(0, 2, size=k))


def tree_vector(
    rng: np.random.Generator, depth: int, max_support: int = 6, integer: bool = False
) -> TreeVector:
    nodes = list(all_nodes(depth))
    k = int(rng.integers(1, min(max_support, len(nodes)) + 1))
    picks = rng.choice(len(nodes), size=k, replace=False)
    if integer:
        vals = rng.integers(-2, 3, size=k).tolist()
    else:
        vals = rng.normal(size=k).tolist()
    return TreeVector(depth, {nodes[i]: v for i, v in zip(picks, vals)})


def vector_near(rng: np.random.Generator, depth: int, nodes, scale: float = 1.0, density: float = 0.5) -> TreeVector:
    """Random vector supported on ``nodes`` and their siblings."""
    pool = set()
    for s in nodes:
        if len(s) < depth:
            pool.add(s)
            if s:
                pool.add(sibling(s))
    pool = sorted(pool)
    keep = [s for s in pool if rng.random() < density] or [pool[int(rng.integers(len(pool)))]]
    return TreeVector(depth, {s: float(rng.normal(scale=scale)) for s in keep})


def chain(rng: np.random.Generator, depth: int) -> list[str]:
    """Strictly ascending chain whose exit nodes fit the depth-``depth`` tree."""
    path = bits(rng, depth - 2)
    levels = sorted(rng.choice(depth - 1, size=int(rng.integers(1, depth)), replace=False).tolist())
    return [path[:k] for k in levels]


def branch_family(rng: np.random.Generator, depth: int, count: int) -> list[str]:
    """Distinct branches with shared prefixes, in random order."""
    count = min(count, 2**depth)
    out = {bits(rng, depth)}
    while len(out) < count:
        base = sorted(out)[int(rng.integers(len(out)))]
        cut = int(rng.integers(0, depth))
        out.add(base[:cut] + bits(rng, depth - cut))
    fam = sorted(out)
    rng.shuffle(fam)
    return fam


def evector(rng: np.random.Generator, max_len: int = 8, integer: bool = False) -> EVector:
    n = int(rng.integers(1, max_len + 1))
    if integer:
        vals = rng.integers(-2, 3, size=n).tolist()
    else:
        vals = rng.normal(size=n).tolist()
    v = EVector.from_list(vals)
    return v if v else EVector.unit(int(rng.integers(n)))
