"""Branch functionals ``B*(x) = sum of x along B`` and bounds on their dual norm.

A branch of length ``d`` passes through nodes of levels ``0 .. d``, so it acts
on vectors of depth up to ``d + 1``.  Functionals built from depth-``d``
branches are evaluated on depth ``d + 1`` vectors by default; that way the
last bit of a branch is visible to the functional.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Mapping, Sequence

from .branches import SeparationData, check_branches, extract_rosenthal, separation_upper_bound
from .errors import DepthMismatchError, ZeroFunctionalError
from .tree import check_bits
from .vectors import TreeVector, norm


@dataclass(frozen=True, eq=False)
class BranchCombo:
    """Finite linear combination ``sum a_B B*`` of branch functionals."""

    depth: int
    terms: Mapping[str, Real] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for b, a in self.terms.items():
            check_bits(b, "branch")
            if len(b) != self.depth:
                raise DepthMismatchError(f"branch {b!r} does not have length {self.depth}")
            if a != 0:
                clean[b] = a
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, branches: Sequence[str], coeffs: Sequence[Real] | None = None) -> "BranchCombo":
        depth = check_branches(list(branches))
        coeffs = [1] * len(branches) if coeffs is None else coeffs
        if len(coeffs) != len(branches):
            raise ValueError("one coefficient per branch expected")
        return cls(depth, dict(zip(branches, coeffs)))

    def __eq__(self, other):
        if not isinstance(other, BranchCombo):
            return NotImplemented
        return self.depth == other.depth and self.terms == other.terms

    def __repr__(self):
        return f"BranchCombo(depth={self.depth}, terms={self.terms!r})"

    def __mul__(self, c: Real):
        return BranchCombo(self.depth, {b: c * a for b, a in self.terms.items()})

    __rmul__ = __mul__

    def __call__(self, x: TreeVector) -> Real:
        return eval_branch(self, x)

    @property
    def l1(self) -> float:
        return float(sum(abs(a) for a in self.terms.values()))

    def node_weights(self) -> dict[str, Real]:
        """``f(e_s)`` for every node ``s`` lying on some branch of the combo."""
        w: dict[str, Real] = {}
        for b, a in self.terms.items():
            for k in range(len(b) + 1):
                w[b[:k]] = w.get(b[:k], 0) + a
        return w


def eval_branch(f: BranchCombo, x: TreeVector) -> Real:
    if x.depth > f.depth + 1:
        raise DepthMismatchError(
            f"vector of depth {x.depth} reaches below branches of length {f.depth}"
        )
    total = 0
    for b, a in f.terms.items():
        total += a * sum((x[b[:k]] for k in range(x.depth)), 0)
    return total


@dataclass(frozen=True)
class DualBounds:
    lower: float
    upper: float
    witness: TreeVector

    @property
    def ratio(self) -> float:
        return self.lower / self.upper


def _sign(v) -> int:
    return (v > 0) - (v < 0)


class _Search:
    """Keeps the best ``|f(x)| / |x|`` seen so far within an evaluation budget."""

    def __init__(self, f: BranchCombo, budget: int):
        self.f = f
        self.budget = budget
        self.best = -1.0
        self.witness: TreeVector | None = None

    def ratio(self, x: TreeVector) -> float:
        self.budget -= 1
        return abs(float(eval_branch(self.f, x))) / norm(x).value

    def offer(self, x: TreeVector) -> bool:
        if not x:
            return False
        r = self.ratio(x)
        if r > self.best:
            self.best, self.witness = r, x
            return True
        return False


def dual_norm_bounds(
    f: BranchCombo,
    effort: int = 200,
    separation: SeparationData | None = None,
) -> DualBounds:
    """Certified bounds ``lower <= ||f|| <= upper`` for a branch combination.

    The lower bound is ``|f(x)| / ||x||`` for the best witness ``x`` found among
    the root unit vector, single nodes, signed level indicators, the exit nodes
    of :func:`extract_rosenthal`, and a coordinate-ascent refinement using at
    most ``effort`` extra norm evaluations.  The upper bound is the l1 norm of
    the coefficients, tightened by :func:`separation_upper_bound` when
    ``separation`` is given and covers every branch of ``f``.
    """
    if not f.terms:
        raise ZeroFunctionalError("the zero functional has no witnesses")
    d = f.depth + 1
    search = _Search(f, effort)
    search.offer(TreeVector.unit(d, ""))

    weights = f.node_weights()
    for s in sorted(weights, key=lambda s: (len(s), s)):
        if weights[s] != 0:
            search.offer(TreeVector.unit(d, s, _sign(weights[s])))
    by_level: dict[int, dict[str, int]] = {}
    for s, w in weights.items():
        if w != 0:
            by_level.setdefault(len(s), {})[s] = _sign(w)
    for lev in sorted(by_level):
        search.offer(TreeVector(d, by_level[lev]))

    branches = sorted(f.terms)
    if len(branches) >= 2:
        ext = extract_rosenthal(branches)
        x = {t: _sign(f.terms[branches[i - 1]]) for t, i in zip(ext.exit_children, ext.picked_indices)}
        search.offer(TreeVector(d, x))

    search.budget = effort
    _coordinate_ascent(search, sorted(weights, key=lambda s: (len(s), s)))

    upper = f.l1
    if separation is not None and set(f.terms) <= set(separation.branches):
        a = [float(f.terms.get(b, 0)) for b in separation.branches]
        upper = min(upper, separation_upper_bound(separation, a))
    return DualBounds(search.best, upper, search.witness)


def _coordinate_ascent(search: _Search, nodes: list[str]):
    x = dict(search.witness.entries)
    step = 0.5 * max(abs(float(v)) for v in x.values())
    while search.budget > 0 and step > 1e-3:
        improved = False
        for s in nodes:
            for delta in (step, -step):
                if search.budget <= 0:
                    return
                trial = dict(x)
                trial[s] = float(trial.get(s, 0)) + delta
                if search.offer(TreeVector(search.witness.depth, trial)):
                    x = dict(search.witness.entries)
                    improved = True
                    break
        if not improved:
            step /= 2
