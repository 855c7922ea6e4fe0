"""Hilbert functions of artinian complete intersections in four variables."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


@dataclass(frozen=True)
class HilbertFunction:
    degrees: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def socle(self) -> int:
        return sum(self.degrees) - len(self.degrees)

    def __getitem__(self, p: int) -> int:
        return self.s[p] if 0 <= p < len(self.s) else 0

    def total(self) -> int:
        return sum(self.s)


def ci_hilbert(degrees: Sequence[int]) -> HilbertFunction:
    """Coefficients of ``prod (1 - t^d) / (1 - t)^4 = prod (1 + t + ... + t^(d-1))``."""
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) != 4 or any(d < 1 for d in degrees):
        raise ValueError(f"need four positive degrees, got {degrees}")
    s = [1]
    for d in degrees:
        new = [0] * (len(s) + d - 1)
        for i, c in enumerate(s):
            for j in range(d):
                new[i + j] += c
        s = new
    return HilbertFunction(degrees, tuple(s))


def dim_graded_piece(p: int) -> int:
    """Number of degree-p monomials in a, b, c, d."""
    return comb(p + 3, 3) if p >= 0 else 0


def chi_O(t: int) -> int:
    """Euler characteristic of O(t) on P^3, valid for every integer t."""
    return (t + 1) * (t + 2) * (t + 3) // 6


def chi_rank2(t: int, c1: int, c2: int) -> int:
    """Riemann-Roch for ``E(t)``, E of rank 2 on P^3 with Chern classes c1, c2."""
    if c1 not in (0, -1):
        raise ValueError(f"c1 must be 0 or -1, got {c1}")
    a = c1 + 2 * t
    b = c2 + c1 * t + t * t
    # 6 * (ch . td) in degree 3, td(P^3) = 1 + 2H + 11/6 H^2 + H^3
    six_chi = 12 + 11 * a + 6 * (a * a - 2 * b) + (a ** 3 - 3 * a * b)
    if six_chi % 6:
        raise ValueError(f"no rank-2 bundle with c1={c1}, c2={c2} (c1*c2 must be even)")
    return six_chi // 6


def chi_end(t: int, c1: int, c2: int) -> int:
    """Euler characteristic of ``End E (t)`` for rank 2."""
    return 4 * chi_O(t) + (c1 * c1 - 4 * c2) * (t + 2)
