"""JSON and text file formats.

TreeVector  ``{"depth": d, "entries": [{"node": "01", "value": 1.5}, ...]}``
BranchCombo ``{"depth": d, "terms": [{"branch": "0110", "coeff": -1}, ...]}``
EVector     ``{"entries": [{"index": 3, "value": 2}, ...]}``

The root node is ``""`` in JSON.  Branch list files hold one bit string per
line; blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

import csv
import io
import json
import math
from numbers import Real
from pathlib import Path
from typing import Iterable

from .espace import EVector
from .functionals import BranchCombo
from .vectors import TreeVector


def _number(v) -> Real:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"expected a number, got {v!r}")
    if isinstance(v, float) and not math.isfinite(v):
        raise ValueError(f"non-finite value {v!r}")
    return v


def tree_vector_from_json(obj: dict) -> TreeVector:
    entries: dict[str, Real] = {}
    for e in obj["entries"]:
        node = e["node"]
        if node in entries:
            raise ValueError(f"node {node!r} listed twice")
        entries[node] = _number(e["value"])
    return TreeVector(int(obj["depth"]), entries)


def tree_vector_to_json(x: TreeVector) -> dict:
    return {"depth": x.depth, "entries": [{"node": s, "value": x[s]} for s in x.support]}


def branch_combo_from_json(obj: dict) -> BranchCombo:
    terms: dict[str, Real] = {}
    for t in obj["terms"]:
        if t["branch"] in terms:
            raise ValueError(f"branch {t['branch']!r} listed twice")
        terms[t["branch"]] = _number(t["coeff"])
    return BranchCombo(int(obj["depth"]), terms)


def branch_combo_to_json(f: BranchCombo) -> dict:
    return {"depth": f.depth, "terms": [{"branch": b, "coeff": a} for b, a in sorted(f.terms.items())]}


def evector_from_json(obj: dict) -> EVector:
    entries: dict[int, Real] = {}
    for e in obj["entries"]:
        i = e["index"]
        if isinstance(i, bool) or not isinstance(i, int):
            raise ValueError(f"index must be an integer, got {i!r}")
        entries[i] = _number(e["value"])
    return EVector(entries)


def evector_to_json(v: EVector) -> dict:
    return {"entries": [{"index": i, "value": x} for i, x in v.entries.items()]}


def load_json(path) -> object:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def parse_branches(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def read_branches(path) -> list[str]:
    return parse_branches(Path(path).read_text(encoding="utf-8"))


def cli_node(arg: str) -> str:
    """Command-line spelling of a node: ``-`` is the root."""
    return "" if arg == "-" else arg


def fmt(v) -> str:
    """Numbers with 10 significant digits; everything else via ``str``."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, Real) and not isinstance(v, int):
        return format(float(v), ".10g")
    return str(v)


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Real):
        return float(fmt(v))
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def rows_to_csv(rows: Iterable[dict], columns: Iterable[str] | None = None) -> str:
    rows = list(rows)
    columns = list(columns) if columns is not None else list(rows[0]) if rows else []
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r[c]) for c in columns])
    return buf.getvalue()


def rows_to_json(rows: Iterable[dict]) -> str:
    return json.dumps([_jsonable(r) for r in rows], indent=2) + "\n"
