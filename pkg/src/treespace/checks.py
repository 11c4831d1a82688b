"""Randomized property suites, shared by the test-suite and ``treespace check``.

Each suite returns a :class:`SuiteResult` with the number of checked cases and
the first failure message, if any.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from . import sampling
from .branches import (
    SQRT2,
    build_splitting_tree,
    extract_rosenthal,
    select_separated,
    separation_upper_bound,
)
from .espace import EVector, enorm, extract_blocks, project
from .experiments import random_complete_branches
from .functionals import BranchCombo, eval_branch
from .oracle import norm_oracle_squared
from .tree import all_nodes, build_strongly_incomparable, check_strongly_incomparable, is_ancestor
from .vectors import TreeVector, norm

SUITES = ("norm-oracle", "prop21", "rosenthal", "separation", "espace")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, msg: str):
        self.checked += 1
        if not ok:
            self.failures.append(msg)


# -- invariant checkers -------------------------------------------------------


def extraction_violations(branches: list[str], ext) -> list[str]:
    """Everything that is wrong with an extraction result (empty if valid)."""
    out = []
    s, phi, t, picks = ext.split_nodes, ext.continue_children, ext.exit_children, ext.picked_indices
    if picks != sorted(picks) or len(set(picks)) != len(picks):
        out.append(f"picks not increasing: {picks}")
    for i in range(len(s)):
        if {phi[i], t[i]} != {s[i] + "0", s[i] + "1"}:
            out.append(f"{phi[i]}, {t[i]} are not the children of {s[i]!r}")
        if i + 1 < len(s) and not (is_ancestor(phi[i], s[i + 1])):
            out.append(f"continuation {phi[i]} does not precede next split {s[i + 1]}")
    if len(t) > 1 and not check_strongly_incomparable(t):
        out.append(f"exit nodes {t} are not strongly incomparable")
    d = len(branches[0])
    for j, lj in enumerate(picks):
        f = BranchCombo.of([branches[lj - 1]])
        for i, ti in enumerate(t):
            got = eval_branch(f, TreeVector.unit(d + 1, ti))
            if got != (i == j):
                out.append(f"B_{lj}(e_{ti}) = {got}, expected {int(i == j)}")
    return out


def interval_oracle(v: EVector) -> float:
    vals = v.dense()
    best = 0
    for i in range(len(vals)):
        for j in range(i + 1, len(vals) + 1):
            best = max(best, abs(sum(vals[i:j])))
    return best


def block_violations(xs: list[EVector], res, tol: float = 1e-9) -> list[str]:
    out = []
    for m, y in enumerate(res.blocks):
        if abs(float(enorm(y)) - 1) > tol:
            out.append(f"block {m} has norm {float(enorm(y))}")
    for m in range(len(res.blocks) - 1):
        a, b = res.blocks[m], res.blocks[m + 1]
        if not max(a.support) < min(b.support):
            out.append(f"blocks {m} and {m + 1} overlap or are out of order")
    prev = 0
    for m, (start, stop) in enumerate(res.ranges):
        if start != prev or stop <= start:
            out.append(f"block {m} uses inputs {start}..{stop}, not contiguous after {prev}")
        prev = stop
        run = xs[start:stop]
        n = max([res.blocks[m].length] + [x.length for x in run])
        a = np.array([[float(x[i]) for x in run] for i in range(n)])
        y = np.array([float(v) for v in res.blocks[m].dense(n)])
        c, *_ = np.linalg.lstsq(a, y, rcond=None)
        resid = float(np.max(np.abs(a @ c - y))) if n else 0.0
        if resid > tol:
            out.append(f"block {m} is {resid:.2e} away from the span of its inputs")
    return out


# -- suites ------------------------------------------------------------------


def check_norm_oracle(rng: np.random.Generator, tol: float = 1e-9, samples: int = 300) -> SuiteResult:
    res = SuiteResult("norm-oracle")
    nodes = list(all_nodes(3))
    for k in range(3):
        for supp in combinations(nodes, k):
            for vals in product((-2, -1, 1, 2), repeat=k):
                x = TreeVector(3, dict(zip(supp, vals)))
                got, want = norm(x).squared, norm_oracle_squared(x)
                res.expect(got == want, f"{x}: dp {got} != oracle {want}")
    for _ in range(samples):
        x = sampling.tree_vector(rng, 4, max_support=5)
        got, want = norm(x).value, math.sqrt(norm_oracle_squared(x))
        res.expect(abs(got - want) <= tol, f"{x}: dp {got} != oracle {want}")
    return res


def check_prop21(rng: np.random.Generator, tol: float = 1e-9, samples: int = 200) -> SuiteResult:
    res = SuiteResult("prop21")
    for _ in range(samples):
        depth = int(rng.integers(2, 9))
        ts = build_strongly_incomparable(sampling.chain(rng, depth), depth)
        res.expect(check_strongly_incomparable(ts), f"{ts} not strongly incomparable")
        a = rng.normal(size=len(ts))
        x = TreeVector(depth, dict(zip(ts, a.tolist())))
        m = float(np.max(np.abs(a)))
        v = norm(x).value
        res.expect(m - tol <= v <= SQRT2 * m + tol, f"{x}: norm {v} outside [{m}, sqrt2*{m}]")
    return res


def check_rosenthal(rng: np.random.Generator, tol: float = 1e-9, samples: int = 200) -> SuiteResult:
    res = SuiteResult("rosenthal")
    for _ in range(samples):
        depth = int(rng.integers(2, 13))
        fam = sampling.branch_family(rng, depth, int(rng.integers(2, 65)))
        ext = extract_rosenthal(fam)
        bad = extraction_violations(fam, ext)
        res.expect(not bad, f"{fam}: {bad[:1]}")
        a = rng.normal(size=len(ext)).tolist()
        x = TreeVector(depth + 1, {t: float(np.sign(c)) for t, c in zip(ext.exit_children, a)})
        f = BranchCombo.of([fam[i - 1] for i in ext.picked_indices], a)
        xn = norm(x).value
        want_xn = SQRT2 if len(ext) > 1 else 1.0
        res.expect(abs(xn - want_xn) <= tol, f"{fam}: witness norm {xn}")
        lower = abs(float(eval_branch(f, x))) / xn
        l1 = sum(abs(c) for c in a)
        res.expect(l1 / SQRT2 - tol <= lower <= l1 + tol, f"{fam}: lower {lower} vs l1 {l1}")
    return res


def check_separation(rng: np.random.Generator, tol: float = 1e-9, n_max: int = 6, vectors: int = 100) -> SuiteResult:
    res = SuiteResult("separation")
    for n in range(1, n_max + 1):
        depth = n + int(rng.integers(0, 6))
        branches = random_complete_branches(n, depth, rng)
        sep = select_separated(build_splitting_tree(branches), n)
        props = sep.properties()
        res.expect(all(props.values()), f"n={n}: {props}")
        nodes = {b[:k] for b in sep.branches for k in range(depth + 1)}
        for _ in range(vectors):
            a = rng.normal(size=2 * n).tolist()
            f = BranchCombo.of(sep.branches, a)
            x = sampling.vector_near(rng, depth + 1, nodes)
            v = norm(x).value
            got = abs(float(eval_branch(f, x))) / v
            bound = separation_upper_bound(sep, a)
            res.expect(got <= bound + tol, f"n={n}: |f(x)|/|x| = {got} > {bound}")
    return res


def check_espace(rng: np.random.Generator, tol: float = 1e-9, samples: int = 500) -> SuiteResult:
    res = SuiteResult("espace")
    for _ in range(samples):
        v = sampling.evector(rng)
        res.expect(abs(enorm(v) - interval_oracle(v)) <= tol, f"{v}: enorm != interval oracle")
        eta = int(rng.integers(0, v.length + 2))
        res.expect(enorm(project(v, eta)) <= enorm(v) + tol, f"{v}: projection at {eta} expands")
    for _ in range(samples // 10):
        xs = [sampling.evector(rng, 6, integer=bool(rng.integers(2))) for _ in range(int(rng.integers(1, 12)))]
        if not all(xs):
            continue
        out = extract_blocks(xs)
        bad = block_violations(xs, out, tol)
        res.expect(not bad, f"{xs}: {bad[:1]}")
    return res


RUNNERS = {
    "norm-oracle": check_norm_oracle,
    "prop21": check_prop21,
    "rosenthal": check_rosenthal,
    "separation": check_separation,
    "espace": check_espace,
}


def run_suites(names, seed: int = 0, tol: float = 1e-9) -> list[SuiteResult]:
    streams = np.random.SeedSequence(seed).spawn(len(SUITES))
    rngs = {name: np.random.default_rng(s) for name, s in zip(SUITES, streams)}
    return [RUNNERS[name](rngs[name], tol) for name in names]

