"""Exact rank of sparse matrices over QQ or GF(p).

Over QQ rows are cleared to integers and eliminated fraction-free, dividing
each new row by its content so entries stay small. Over GF(p) the matrix is
densified and reduced with vectorised int64 row operations (``p < 2**31``
keeps every product below 2**63).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .fields import QQ


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    rows: list[dict[int, object]] = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]

    def add(self, r: int, c: int, v) -> None:
        row = self.rows[r]
        row[c] = row.get(c, 0) + v

    def nnz(self) -> int:
        return sum(1 for row in self.rows for v in row.values() if v)

    def to_dense(self, p: int) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                out[r, c] = int(v) % p
        return out


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_rational(m: SparseMatrix) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for raw in m.rows:
        vals = {c: Fraction(v) for c, v in raw.items() if v}
        if not vals:
            continue
        den = lcm(*(v.denominator for v in vals.values()))
        row = _primitive({c: int(v * den) for c, v in vals.items()})
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = row
                break
            a, b = prow[lead], row[lead]
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                x = new.get(c, 0) - b * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new)
    return len(pivots)


def rank_mod_p(m: SparseMatrix | np.ndarray, p: int) -> int:
    a = m.to_dense(p) if isinstance(m, SparseMatrix) else np.asarray(m, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r, c:] = a[r, c:] * pow(int(a[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            a[below, c:] = (
                a[below, c:] - np.outer(a[below, c], a[r, c:])
            ) % p
        r += 1
    return r


def rank(m: SparseMatrix, field=QQ) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if field.characteristic:
        return rank_mod_p(m, field.characteristic)
    return rank_rational(m)
