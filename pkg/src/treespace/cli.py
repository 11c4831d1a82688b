"""Command-line front end.

Exit codes: 0 success, 1 property failure, 2 invalid input, 3 infeasible
request.  Tables are written as CSV (default) or JSON; numbers carry 10
significant digits.  On the command line the root node is spelled ``-``.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import io
from .branches import build_splitting_tree, extract_rosenthal, select_separated
from .checks import SUITES, run_suites
from .errors import TreeSpaceError, TrieIncompleteError
from .espace import enorm, extract_blocks, project
from .experiments import COLUMNS, GENERATORS, distortion_table
from .functionals import BranchCombo, dual_norm_bounds, eval_branch
from .oracle import norm_oracle
from .tree import EXTENDED, MODES, STRICT
from .vectors import TreeVector, norm

EXIT_FAIL, EXIT_INPUT, EXIT_INFEASIBLE = 1, 2, 3


class Infeasible(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    depth: int = 10
    seed: int = 0
    tolerance: float = 1e-9
    mode: str = EXTENDED
    output: str = "csv"

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(args.depth, args.seed, args.tol, args.mode, args.output)


def _emit(rows, cfg: RunConfig, columns=None, out=None):
    out = out or sys.stdout
    if isinstance(rows, dict):
        rows = [rows]
    if cfg.output == "json":
        text = io.rows_to_json(rows)
    else:
        flat = [{k: ";".join(map(io.fmt, v)) if isinstance(v, (list, tuple)) else v for k, v in r.items()} for r in rows]
        text = io.rows_to_csv(flat, columns)
    out.write(text)


def _node_out(s: str, cfg: RunConfig) -> str:
    return s if cfg.output == "json" else (s or "-")


# -- commands ----------------------------------------------------------------


def cmd_norm(args, cfg: RunConfig):
    if args.unit is not None:
        x = TreeVector.unit(cfg.depth, io.cli_node(args.unit))
    elif args.file:
        x = io.tree_vector_from_json(io.load_json(args.file))
    else:
        raise ValueError("give a vector file or --unit NODE")
    if cfg.mode == STRICT:
        rec = {"value": norm_oracle(x, STRICT), "witness_level": "", "witness_family": []}
    else:
        nb = norm(x)
        fam = nb.witness_family.segments if nb.witness_family else ()
        if cfg.output == "json":
            family = [{"top": s.top, "bottom": s.bottom} for s in fam]
        else:
            family = [str(s) for s in fam]
        level = "" if nb.witness_level is None else nb.witness_level
        rec = {"value": nb.value, "witness_level": level, "witness_family": family}
    _emit(rec, cfg)
    return 0


def cmd_dualnorm(args, cfg: RunConfig):
    f = io.branch_combo_from_json(io.load_json(args.file))
    b = dual_norm_bounds(f, effort=args.effort)
    if cfg.output == "json":
        witness = io.tree_vector_to_json(b.witness)
    else:
        witness = [f"{_node_out(s, cfg)}:{io.fmt(b.witness[s])}" for s in b.witness.support]
    _emit({"lower": b.lower, "upper": b.upper, "witness": witness}, cfg)
    return 0


def cmd_rosenthal(args, cfg: RunConfig):
    branches = io.read_branches(args.file)
    ext = extract_rosenthal(branches)
    if args.coeffs:
        coeffs = [float(c) for c in args.coeffs.split(",")]
    else:
        coeffs = [1.0] * len(ext)
    if len(coeffs) != len(ext):
        raise ValueError(f"{len(ext)} branches were picked but {len(coeffs)} coefficients given")
    d = len(branches[0])
    x = TreeVector(d + 1, {t: (c > 0) - (c < 0) for t, c in zip(ext.exit_children, coeffs)})
    f = BranchCombo.of([branches[i - 1] for i in ext.picked_indices], coeffs)
    xn = norm(x).value
    lower = abs(float(eval_branch(f, x))) / xn if x else 0.0
    _emit(
        {
            "picked": ext.picked_indices,
            "t_nodes": [_node_out(t, cfg) for t in ext.exit_children],
            "witness_norm": xn,
            "lower_bound": lower,
            "upper_bound": sum(abs(c) for c in coeffs),
        },
        cfg,
    )
    return 0


def cmd_split(args, cfg: RunConfig):
    tree = build_splitting_tree(io.read_branches(args.file), args.min_count, args.max_split_level)
    rows = [
        {
            "index": e.index,
            "trie_level": e.trie_level,
            "t_node": _node_out(e.t_node, cfg),
            "split_node": "" if e.split_node is None else _node_out(e.split_node, cfg),
            "branch_count": e.branch_count,
        }
        for e in tree
    ]
    _emit(rows, cfg, ["index", "trie_level", "t_node", "split_node", "branch_count"])
    return 0


def cmd_separate(args, cfg: RunConfig):
    tree = build_splitting_tree(io.read_branches(args.file))
    sep = select_separated(tree, args.n)
    props = sep.properties()
    _emit(
        {
            "n": sep.n,
            "eta1": sep.eta1,
            "eta2": sep.eta2,
            "psi": [_node_out(p, cfg) for p in sep.psi],
            "branches": sep.branches,
            **props,
        },
        cfg,
    )
    return 0 if all(props.values()) else EXIT_FAIL


def cmd_distortion(args, cfg: RunConfig):
    if args.n_max < 1:
        raise ValueError("--n-max must be >= 1")
    if cfg.depth < args.n_max:
        raise Infeasible(f"depth {cfg.depth} cannot host a complete trie of level {args.n_max}")
    rows = distortion_table(args.n_max, cfg.depth, args.generator, cfg.seed, args.effort)
    _emit([r.as_dict() for r in rows], cfg, COLUMNS)
    return 0


def cmd_espace(args, cfg: RunConfig):
    obj = io.load_json(args.file)
    if isinstance(obj, list):
        xs = [io.evector_from_json(o) for o in obj]
        res = extract_blocks(xs, args.max_blocks)
        rows = [
            {
                "block": m,
                "inputs": f"{a}:{b}",
                "support": list(y.support),
                "values": [float(v) for v in y.entries.values()],
                "norm": float(enorm(y)),
                "exhausted": res.exhausted,
            }
            for m, (y, (a, b)) in enumerate(zip(res.blocks, res.ranges))
        ]
        _emit(rows, cfg, ["block", "inputs", "support", "values", "norm", "exhausted"])
    else:
        v = io.evector_from_json(obj)
        rec = {"norm": float(enorm(v))}
        if args.project is not None:
            rec["projected_norm"] = float(enorm(project(v, args.project)))
        _emit(rec, cfg)
    return 0


def cmd_check(args, cfg: RunConfig):
    names = SUITES if args.suite == "all" else (args.suite,)
    results = run_suites(names, cfg.seed, cfg.tolerance)
    rows = [
        {
            "suite": r.name,
            "checked": r.checked,
            "failed": len(r.failures),
            "status": "pass" if r.passed else "FAIL",
            "first_failure": r.failures[0] if r.failures else "",
        }
        for r in results
    ]
    _emit(rows, cfg, ["suite", "checked", "failed", "status", "first_failure"])
    return 0 if all(r.passed for r in results) else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, default=RunConfig.depth, help="tree depth (default %(default)s)")
    common.add_argument("--seed", type=int, default=RunConfig.seed)
    common.add_argument("--tol", type=float, default=RunConfig.tolerance)
    common.add_argument("--mode", choices=MODES, default=EXTENDED)
    common.add_argument("--output", choices=("csv", "json"), default="csv")

    p = argparse.ArgumentParser(prog="treespace", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("norm", parents=[common], help="norm of a tree vector with a witness family")
    s.add_argument("file", nargs="?")
    s.add_argument("--unit", metavar="NODE", help="use the unit vector at NODE ('-' is the root)")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("dualnorm", parents=[common], help="bounds on the dual norm of a branch combination")
    s.add_argument("file")
    s.add_argument("--effort", type=int, default=200)
    s.set_defaults(func=cmd_dualnorm)

    s = sub.add_parser("rosenthal", parents=[common], help="l1-subsequence extraction from a branch file")
    s.add_argument("file")
    s.add_argument("--coeffs", help="comma-separated coefficients, one per picked branch")
    s.set_defaults(func=cmd_rosenthal)

    s = sub.add_parser("split", parents=[common], help="splitting trie of a branch file")
    s.add_argument("file")
    s.add_argument("--min-count", type=int, default=1)
    s.add_argument("--max-split-level", type=int)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("separate", parents=[common], help="tournament selection on trie level N")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("distortion", parents=[common], help="distortion bound table for n = 1..N")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--generator", choices=GENERATORS, default="complete")
    s.add_argument("--effort", type=int, default=200)
    s.set_defaults(func=cmd_distortion)

    s = sub.add_parser("espace", parents=[common], help="interval norm, projections and block sequences")
    s.add_argument("file", help="one EVector object, or a JSON array of them for block extraction")
    s.add_argument("--project", type=int, metavar="ETA")
    s.add_argument("--max-blocks", type=int)
    s.set_defaults(func=cmd_espace)

    s = sub.add_parser("check", parents=[common], help="run property suites")
    s.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(args, cfg)
    except (Infeasible, TrieIncompleteError) as e:
        print(f"treespace: infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (TreeSpaceError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as e:
        print(f"treespace: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
