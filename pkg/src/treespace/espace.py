"""Finitely supported vectors on an ordered index line with the interval norm.

``enorm(v)`` is the largest absolute sum of ``v`` over an interval of
consecutive indices.  With prefix sums ``S_0 = 0, S_k = v(0) + ... + v(k-1)``
every interval sum is a difference ``S_j - S_i``, so the norm is the diameter
``max S - min S`` of the prefix-sum sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from numbers import Rational, Real
from typing import Mapping, Sequence

import numpy as np

SVD_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class EVector:
    entries: Mapping[int, Real] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for i, v in self.entries.items():
            if not isinstance(i, (int, np.integer)) or i < 0:
                raise ValueError(f"index must be a nonnegative integer, got {i!r}")
            if v != 0:
                clean[int(i)] = v
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def from_list(cls, values: Sequence[Real]) -> "EVector":
        return cls(dict(enumerate(values)))

    @classmethod
    def unit(cls, i: int) -> "EVector":
        return cls({i: 1})

    def __getitem__(self, i: int) -> Real:
        return self.entries.get(i, 0)

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, EVector):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"EVector({self.entries!r})"

    def __add__(self, other: "EVector") -> "EVector":
        out = dict(self.entries)
        for i, v in other.entries.items():
            out[i] = out.get(i, 0) + v
        return EVector(out)

    def __sub__(self, other: "EVector") -> "EVector":
        return self + other * -1

    def __mul__(self, c: Real) -> "EVector":
        return EVector({i: c * v for i, v in self.entries.items()})

    __rmul__ = __mul__

    @property
    def support(self) -> list[int]:
        return list(self.entries)

    @property
    def length(self) -> int:
        """One past the largest index in the support."""
        return max(self.entries) + 1 if self.entries else 0

    def dense(self, n: int | None = None) -> list[Real]:
        n = self.length if n is None else n
        return [self[i] for i in range(n)]


def enorm(v: EVector) -> Real:
    prefix = [0, *accumulate(v.dense())]
    return max(prefix) - min(prefix)


def project(v: EVector, eta: int) -> EVector:
    """Keep the coordinates with index below ``eta``."""
    if eta < 0:
        raise ValueError("eta must be >= 0")
    return EVector({i: x for i, x in v.entries.items() if i < eta})


# -- block sequences ---------------------------------------------------------


def _is_exact(xs: Sequence[EVector]) -> bool:
    return all(isinstance(v, Rational) for x in xs for v in x.entries.values())


def _nullspace_exact(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the kernel of a rational matrix by Gauss-Jordan elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, c in zip(m, pivots):
            vec[c] = -row[free]
        basis.append(vec)
    return basis


def _nullspace_float(rows: list[list[float]], ncols: int) -> list[np.ndarray]:
    a = np.asarray(rows, dtype=float).reshape(len(rows), ncols)
    if a.size == 0:
        return list(np.eye(ncols))
    _, s, vt = np.linalg.svd(a)
    rank = int(np.sum(s > SVD_TOL))
    return list(vt[rank:])


@dataclass(frozen=True)
class BlockExtraction:
    blocks: list[EVector]
    ranges: list[tuple[int, int]]  # input positions [start, stop) spanning each block
    coefficients: list[list[Real]]
    exhausted: bool


def _combine(xs: Sequence[EVector], coeffs) -> EVector:
    out = EVector()
    for x, c in zip(xs, coeffs):
        out = out + x * c
    return out


def _normalize(y: EVector, exact: bool, positive_lead: bool = True) -> tuple[EVector, Real]:
    """Scale to unit norm; optionally flip so the first coordinate is positive."""
    scale = enorm(y) if exact else float(enorm(y))
    if positive_lead and y.entries[min(y.entries)] < 0:
        scale = -scale
    return y * (Fraction(1) / scale if exact else 1 / scale), scale


def extract_blocks(xs: Sequence[EVector], max_blocks: int | None = None) -> BlockExtraction:
    """Normalized block sequence carved out of consecutive runs of ``xs``.

    Each new block is the shortest run of unused inputs whose span holds a
    nonzero vector vanishing below one past the end of the previous block.
    Rational inputs are handled exactly; otherwise the kernel comes from an SVD
    with singular-value threshold ``SVD_TOL``.  ``exhausted`` is false only if
    ``max_blocks`` stopped the construction.
    """
    if not xs:
        return BlockExtraction([], [], [], True)
    if any(not x for x in xs):
        raise ValueError("all input vectors must be nonzero")
    exact = _is_exact(xs)
    y0, s0 = _normalize(xs[0], exact, positive_lead=False)
    blocks, ranges, coeffs = [y0], [(0, 1)], [[Fraction(1) / s0 if exact else 1 / s0]]
    pos = 1
    while max_blocks is None or len(blocks) < max_blocks:
        xi = blocks[-1].length
        found = None
        for stop in range(pos + 1, len(xs) + 1):
            run = xs[pos:stop]
            rows = [[x[i] for x in run] for i in range(xi)]
            if exact:
                basis = _nullspace_exact(rows, len(run))
            else:
                basis = _nullspace_float([[float(v) for v in r] for r in rows], len(run))
            for c in basis:
                y = _combine(run, c)
                # the part below xi vanishes in exact arithmetic
                y = EVector({i: v for i, v in y.entries.items() if i >= xi})
                if not exact:
                    big = max((abs(v) for v in y.entries.values()), default=0.0)
                    y = EVector({i: v for i, v in y.entries.items() if abs(v) > SVD_TOL * max(big, 1.0)})
                if y:
                    found = (stop, y, c)
                    break
            if found:
                break
        if found is None:
            return BlockExtraction(blocks, ranges, coeffs, True)
        stop, y, c = found
        y, scale = _normalize(y, exact)
        blocks.append(y)
        ranges.append((pos, stop))
        coeffs.append([v / scale if exact else float(v) / scale for v in c])
        pos = stop
    return BlockExtraction(blocks, ranges, coeffs, False)
