"""Branch-set generators and the distortion experiment."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .branches import SQRT2, SeparationData, build_splitting_tree, select_separated, separation_upper_bound
from .errors import TrieIncompleteError
from .functionals import BranchCombo, dual_norm_bounds

GENERATORS = ("complete", "random")


def delta_bound(n: int) -> float:
    return (SQRT2 + 1) / math.sqrt(2 * n)


def complete_branches(n: int, depth: int) -> list[str]:
    """The ``2**n`` branches of the complete subtree of height ``n`` at the
    root, padded with zeros to ``depth``."""
    if depth < n:
        raise TrieIncompleteError(f"depth {depth} cannot host a complete trie of level {n}")
    return [format(k, f"0{n}b").ljust(depth, "0") if n else "0" * depth for k in range(2**n)]


def random_complete_branches(n: int, depth: int, rng: np.random.Generator, max_gap: int = 3) -> list[str]:
    """``2**n`` branches whose splitting trie is complete through level ``n``.

    Every split sits a random number (at most ``max_gap``) of levels below the
    previous one, and leaves are padded with random bits.
    """
    if depth < n:
        raise TrieIncompleteError(f"depth {depth} cannot host a complete trie of level {n}")

    def bits(k):
        return "".join("01"[b] for b in rng.integers(0, 2, size=k))

    out = []

    def grow(t: str, k: int):
        if k == 0:
            out.append(t + bits(depth - len(t)))
            return
        slack = depth - len(t) - k
        s = t + bits(int(rng.integers(0, min(slack, max_gap) + 1)))
        grow(s + "0", k - 1)
        grow(s + "1", k - 1)

    grow("", n)
    return out


@dataclass(frozen=True)
class DistortionRow:
    n: int
    num_branches: int
    eta1: int
    eta2: int
    upper_bound: float
    lower_estimate: float
    delta_bound: float
    separation: SeparationData = field(repr=False, compare=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        del d["separation"]
        return d


COLUMNS = ("n", "num_branches", "eta1", "eta2", "upper_bound", "lower_estimate", "delta_bound")


def distortion_experiment(
    n: int,
    depth: int,
    generator: str = "complete",
    rng: np.random.Generator | None = None,
    effort: int = 200,
) -> DistortionRow:
    """Separate ``2n`` branches and bound ``sum_{i<=n} B_i* - sum_{i>n} B_i*``.

    ``upper_bound`` is the separation estimate, ``lower_estimate`` the best
    witness lower bound on the same dual norm, and ``delta_bound`` the upper
    bound divided by the l1 norm ``2n`` of the coefficients.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if generator == "complete":
        branches = complete_branches(n, depth)
    elif generator == "random":
        branches = random_complete_branches(n, depth, rng if rng is not None else np.random.default_rng(0))
    else:
        raise ValueError(f"unknown generator {generator!r}")
    sep = select_separated(build_splitting_tree(branches), n)
    a = [1.0] * n + [-1.0] * n
    upper = separation_upper_bound(sep, a)
    f = BranchCombo.of(sep.branches, a)
    lower = dual_norm_bounds(f, effort=effort, separation=sep).lower
    return DistortionRow(n, len(branches), sep.eta1, sep.eta2, upper, lower, upper / (2 * n), sep)


def distortion_table(
    n_max: int, depth: int, generator: str = "complete", seed: int = 0, effort: int = 200
) -> list[DistortionRow]:
    # one child stream per n keeps every row independent of the others
    streams = np.random.SeedSequence(seed).spawn(n_max)
    return [
        distortion_experiment(n, depth, generator, np.random.default_rng(streams[n - 1]), effort)
        for n in range(1, n_max + 1)
    ]
