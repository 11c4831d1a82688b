import math

import pytest

from treespace import sampling
from treespace.branches import build_splitting_tree, select_separated
from treespace.errors import DepthMismatchError, ZeroFunctionalError
from treespace.experiments import random_complete_branches
from treespace.functionals import BranchCombo, dual_norm_bounds, eval_branch
from treespace.oracle import norm_oracle
from treespace.vectors import TreeVector, norm

SQRT2 = math.sqrt(2)


def test_eval_examples():
    assert eval_branch(BranchCombo.of(["00"]), TreeVector.unit(2, "")) == 1
    f = BranchCombo.of(["00", "10"], [1, -1])
    assert eval_branch(f, TreeVector(2, {"0": 1, "1": -1})) == 2
    assert eval_branch(BranchCombo.of(["00"]), TreeVector.unit(2, "1")) == 0


def test_eval_sees_last_level():
    f = BranchCombo.of(["01"])
    assert f(TreeVector.unit(3, "01")) == 1
    assert f(TreeVector.unit(3, "00")) == 0
    with pytest.raises(DepthMismatchError):
        f(TreeVector.unit(4, ""))


def test_combo_validation():
    with pytest.raises(DepthMismatchError):
        BranchCombo(2, {"000": 1})
    assert BranchCombo(2, {"00": 0}).terms == {}


def test_branch_functional_has_norm_one(rng):
    for _ in range(300):
        d = int(rng.integers(1, 7))
        f = BranchCombo.of([sampling.bits(rng, d)])
        x = sampling.tree_vector(rng, d + 1, max_support=8)
        assert abs(f(x)) <= norm(x).value + 1e-12


def test_dual_single_branch():
    b = dual_norm_bounds(BranchCombo.of(["0110"]))
    assert (b.lower, b.upper) == (1.0, 1.0)
    assert b.witness == TreeVector.unit(5, "")


def test_dual_difference_of_two():
    f = BranchCombo.of(["00", "10"], [1, -1])
    b = dual_norm_bounds(f)
    x = TreeVector(3, {"0": 1, "1": -1})
    assert f(x) == 2 and norm_oracle(x) == pytest.approx(SQRT2, abs=1e-15)
    assert b.lower >= 2 / SQRT2 - 1e-12
    assert b.upper == 2


@pytest.mark.parametrize("c", [3.0, -0.5, 7.25])
def test_dual_homogeneity(c):
    f = BranchCombo.of(["0010", "0111", "1100"], [1.0, -2.0, 0.5])
    b, bc = dual_norm_bounds(f), dual_norm_bounds(f * c)
    assert bc.lower == pytest.approx(abs(c) * b.lower, rel=1e-12)
    assert bc.upper == pytest.approx(abs(c) * b.upper, rel=1e-12)


def test_dual_zero():
    with pytest.raises(ZeroFunctionalError):
        dual_norm_bounds(BranchCombo(3, {}))


def test_dual_invariants(rng):
    for _ in range(100):
        d = int(rng.integers(1, 8))
        fam = sampling.branch_family(rng, d, int(rng.integers(1, 10)))
        f = BranchCombo.of(fam, rng.normal(size=len(fam)).tolist())
        b = dual_norm_bounds(f, effort=60)
        assert b.lower <= b.upper + 1e-12
        assert abs(f(b.witness)) / norm(b.witness).value == pytest.approx(b.lower, abs=1e-9)


def test_dual_uses_separation_bound(rng):
    n = 6
    sep = select_separated(build_splitting_tree(random_complete_branches(n, 9, rng)), n)
    a = [1.0] * n + [-1.0] * n
    f = BranchCombo.of(sep.branches, a)
    plain, sharp = dual_norm_bounds(f, effort=20), dual_norm_bounds(f, effort=20, separation=sep)
    assert plain.upper == 2 * n
    assert sharp.upper == pytest.approx((SQRT2 + 1) * math.sqrt(2 * n))
    assert sharp.lower <= sharp.upper
