"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the report.
"""
import math
import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations, product

import numpy as np
import pytest

from treespace import sampling
from treespace.branches import build_splitting_tree, extract_rosenthal, select_separated, separation_upper_bound
from treespace.checks import block_violations, extraction_violations, interval_oracle
from treespace.cli import main
from treespace.espace import EVector, enorm, extract_blocks, project
from treespace.experiments import complete_branches, delta_bound, random_complete_branches
from treespace.functionals import BranchCombo, eval_branch
from treespace.oracle import norm_oracle, norm_oracle_squared
from treespace.tree import all_nodes, build_strongly_incomparable, check_strongly_incomparable
from treespace.vectors import TreeVector, norm

pytestmark = pytest.mark.acceptance

SQRT2 = math.sqrt(2)
SEED = 20240611


def report(num: int, title: str, failures: list, elapsed: float, limit: float | None = None, extra: str = ""):
    over = limit is not None and elapsed >= limit
    ok = not failures and not over
    detail = f"{elapsed:.1f}s" + (f" (limit {limit:.0f}s)" if limit else "") + (f"; {extra}" if extra else "")
    if failures:
        detail += f"; {len(failures)} failure(s), first: {failures[0]}"
    print(f"\n[criterion {num}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
    assert not failures, failures[:3]
    assert not over, f"took {elapsed:.1f}s, limit {limit}s"


def test_criterion_1_unit_vectors():
    t0 = time.perf_counter()
    bad = []
    nodes = list(all_nodes(6))
    for s in nodes:
        x = TreeVector(6, {s: Fraction(1)})
        if norm_oracle_squared(x) != 1 or norm(x).squared != 1:
            bad.append(s)
    report(1, f"|e_s| = 1 exactly for all {len(nodes)} nodes of depth 6", bad, time.perf_counter() - t0, 10)


def test_criterion_2_oracle_equivalence():
    t0 = time.perf_counter()
    bad, exhaustive = [], 0
    nodes = list(all_nodes(3))
    for k in range(4):
        for supp in combinations(nodes, k):
            for vals in product((-2, -1, 1, 2), repeat=k):
                x = TreeVector(3, dict(zip(supp, vals)))
                exhaustive += 1
                if norm(x).squared != norm_oracle_squared(x):
                    bad.append(x)
    rng = np.random.default_rng(SEED)
    for _ in range(10_000):
        x = sampling.tree_vector(rng, 5, max_support=10)
        if abs(norm(x).value - norm_oracle(x)) > 1e-12:
            bad.append(x)
    extra = f"{exhaustive} exhaustive depth-3 vectors (exact), 10000 random depth-5 vectors (1e-12)"
    report(2, "DP norm equals brute-force enumeration", bad, time.perf_counter() - t0, 120, extra)


def test_criterion_3_strongly_incomparable_constants():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 3)
    bad = []
    for _ in range(500):
        depth = int(rng.integers(2, 11))
        ts = build_strongly_incomparable(sampling.chain(rng, depth), depth)
        if not check_strongly_incomparable(ts):
            bad.append(f"{ts} not strongly incomparable")
        a = rng.normal(size=len(ts))
        m = float(np.max(np.abs(a)))
        v = norm(TreeVector(depth, dict(zip(ts, a.tolist())))).value
        if not (m <= v + 1e-12 and v <= SQRT2 * m + 1e-9):
            bad.append(f"{ts}, {a}: norm {v}")
    for size in range(2, 7):
        ts = build_strongly_incomparable(["0" * k for k in range(size)], size + 1)
        for c in (1, -3, Fraction(5, 7)):
            x = TreeVector(size + 1, {t: c for t in ts})
            want = 2 * c * c
            if norm(x).squared != want or norm_oracle_squared(x) != want:
                bad.append(f"size {size}, c={c}: not sqrt2*|c|")
    report(3, "max|a| <= |sum a e_t| <= sqrt2 max|a|; equality at sizes 2..6", bad, time.perf_counter() - t0)


def test_criterion_4_l1_extraction():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 4)
    bad, single = [], 0
    for _ in range(500):
        depth = int(rng.integers(1, 13))
        fam = sampling.branch_family(rng, depth, int(rng.integers(2, 65)))
        ext = extract_rosenthal(fam)
        bad += extraction_violations(fam, ext)
        a = rng.normal(size=len(ext))
        x = TreeVector(depth + 1, {t: int(np.sign(c)) for t, c in zip(ext.exit_children, a)})
        xn = norm(x).value
        # a single exit node has witness e_t, whose norm is 1
        want = SQRT2 if len(ext) > 1 else 1.0
        single += len(ext) == 1
        if abs(xn - want) > 1e-12:
            bad.append(f"{fam}: witness norm {xn}")
        f = BranchCombo.of([fam[i - 1] for i in ext.picked_indices], a.tolist())
        lower = abs(float(eval_branch(f, x))) / xn
        l1 = float(np.sum(np.abs(a)))
        if not (l1 / SQRT2 - 1e-12 <= lower <= l1 + 1e-12):
            bad.append(f"{fam}: lower {lower} outside [{l1 / SQRT2}, {l1}]")
    extra = f"{500 - single} multi-pick cases at sqrt2, {single} single-pick cases at 1"
    report(4, "extraction witness norm and l1 bounds", bad, time.perf_counter() - t0, 60, extra)


def test_criterion_5_separation(capsys):
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 5)
    bad, checked = [], 0
    for n in range(1, 9):
        for gen in ("complete", "random"):
            depth = n + int(rng.integers(0, 5))
            fam = complete_branches(n, depth) if gen == "complete" else random_complete_branches(n, depth, rng)
            sep = select_separated(build_splitting_tree(fam), n)
            props = sep.properties()
            if not all(props.values()):
                bad.append(f"n={n} {gen}: {props}")
            nodes = {b[:k] for b in sep.branches for k in range(depth + 1)}
            for _ in range(1000):
                a = rng.normal(size=2 * n).tolist() if rng.random() < 0.5 else [1.0] * n + [-1.0] * n
                x = sampling.vector_near(rng, depth + 1, nodes)
                x = x * (1 / norm(x).value)
                got = abs(float(eval_branch(BranchCombo.of(sep.branches, a), x)))
                checked += 1
                if got > separation_upper_bound(sep, a) + 1e-9:
                    bad.append(f"n={n} {gen}: {got} exceeds bound")
    capsys.readouterr()
    assert main(["distortion", "--n-max", "8", "--effort", "20"]) == 0
    lines = capsys.readouterr().out.splitlines()
    column = [line.split(",")[-1] for line in lines[1:]]
    want = [format(delta_bound(n), ".10g") for n in range(1, 9)]
    if column != want:
        bad.append(f"delta column {column} != {want}")
    with capsys.disabled():
        report(5, "separation properties, bound on unit vectors, delta column",
               bad, time.perf_counter() - t0, 300, f"{checked} unit vectors; delta {column[0]} .. {column[-1]}")


def test_criterion_6_espace():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 6)
    bad = []
    for vals in product(range(-2, 3), repeat=6):
        v = EVector.from_list(vals)
        if enorm(v) != interval_oracle(v):
            bad.append(v)
    for _ in range(10_000):
        v = sampling.evector(rng, 10)
        eta = int(rng.integers(0, 12))
        if enorm(project(v, eta)) > enorm(v) + 1e-12:
            bad.append(f"{v} at {eta}")
    for k in range(200):
        xs = [sampling.evector(rng, 6, integer=k % 2 == 0) for _ in range(int(rng.integers(1, 12)))]
        bad += block_violations(xs, extract_blocks(xs), 1e-9)
    report(6, "interval norm oracle, contractive projections, block invariants", bad, time.perf_counter() - t0)


def test_criterion_7_determinism():
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "treespace", "distortion", "--n-max", "6", "--seed", "7", "--effort", "40"]
    outs = []
    for gen in ("complete", "random"):
        a = subprocess.run(cmd + ["--generator", gen], capture_output=True, check=True).stdout
        b = subprocess.run(cmd + ["--generator", gen], capture_output=True, check=True).stdout
        outs.append((a, b))
    bad = [f"{gen} runs differ" for gen, (a, b) in zip(("complete", "random"), outs) if a != b or not a]
    report(7, "distortion --n-max 6 is byte-identical across runs", bad, time.perf_counter() - t0)
