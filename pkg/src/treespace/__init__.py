"""Finite-depth models of a non-separable tree-like Banach space.

Exact norms on the dyadic tree, branch functionals and their dual-norm
bounds, splitting tries and separated branch selections, and the interval
norm on an ordered index line.
"""
from .branches import (
    ExtractionResult,
    SeparationData,
    SplittingTree,
    build_splitting_tree,
    extract_rosenthal,
    select_separated,
    separation_upper_bound,
)
from .errors import TreeSpaceError
from .espace import EVector, enorm, extract_blocks, project
from .experiments import delta_bound, distortion_experiment, distortion_table
from .functionals import BranchCombo, DualBounds, dual_norm_bounds, eval_branch
from .oracle import norm_oracle, norm_oracle_squared
from .tree import (
    AdmissibleFamily,
    Segment,
    build_strongly_incomparable,
    check_admissible,
    check_strongly_incomparable,
    is_ancestor,
    meet,
)
from .vectors import NormBreakdown, TreeVector, norm, segment_sum

__version__ = "0.1.0"
