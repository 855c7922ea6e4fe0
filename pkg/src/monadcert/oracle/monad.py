"""The literal monad matrices and their section matrices.

As printed, ``A`` is 2 x 6 and ``B = M N`` is 6 x 2 with a Hankel-windowed
``N``; the monad maps are ``A^T : C^2(src) -> mid`` and ``B^T : mid -> C^2(tgt)``
so that ``A B = 0`` is the complex condition.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ..engine import PullbackParams
from .fields import QQ
from .linalg import SparseMatrix, rank
from .poly import Polynomial, monomial_index, monomials, variables

PolyMatrix = list[list[Polynomial]]


@dataclass
class MonadMatrices:
    A: PolyMatrix  # 2 x 6
    B: PolyMatrix  # 6 x 2
    src: tuple[int, ...]
    mid: tuple[int, ...]
    tgt: tuple[int, ...]
    variant: str
    field: object
    forms: tuple[Polynomial, ...] = ()
    alpha: tuple = ()

    @property
    def d_left(self) -> PolyMatrix:
        """``A^T`` as a map (rows = middle summands)."""
        return transpose(self.A)

    @property
    def d_right(self) -> PolyMatrix:
        return transpose(self.B)

    def terms(self) -> list[tuple[int, ...]]:
        return [self.src, self.mid, self.tgt]

    def maps(self) -> list[PolyMatrix]:
        return [self.d_left, self.d_right]


def transpose(m: PolyMatrix) -> PolyMatrix:
    return [list(col) for col in zip(*m)]


def matmul(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    field = x[0][0].field
    out = []
    for row in x:
        out.append([
            sum((row[k] * y[k][j] for k in range(len(y))), Polynomial({}, field))
            for j in range(len(y[0]))
        ])
    return out


def base_A(a, b, c, d) -> PolyMatrix:
    z = a * 0
    return [[a, b, z, c, d, z],
            [z, a, b, z, c, d]]


def base_M(a, b, c, d) -> PolyMatrix:
    z = a * 0
    return [[z, z, -d, -c],
            [z, -d, -c, z],
            [-d, -c, z, z],
            [z, z, b, a],
            [z, b, a, z],
            [b, a, z, z]]


def hankel_N(alpha: Sequence, field) -> PolyMatrix:
    a0, a1, a2, a3, a4 = (Polynomial.const(x, field) for x in alpha)
    return [[a3, a4], [a2, a3], [a1, a2], [a0, a1]]


def monad_twists(params: PullbackParams) -> tuple[tuple, tuple, tuple]:
    b, g = params.beta, params.gamma
    if params.c1 == 0:
        return (-g, -g), (-b,) * 3 + (b,) * 3, (g, g)
    return ((-(g + 1) // 2,) * 2,
            (-(b + 1) // 2,) * 3 + ((b - 1) // 2,) * 3,
            ((g - 1) // 2,) * 2)


def monad_from_forms(forms: Sequence[Polynomial], alpha: Sequence, field=QQ,
                     src=(-1, -1), mid=(0,) * 6, tgt=(1, 1),
                     variant: str = "base") -> MonadMatrices:
    """Substitute ``forms`` for a, b, c, d in A and B; alpha is not validated."""
    forms = [f.to_field(field) for f in forms]
    A = base_A(*forms)
    B = matmul(base_M(*forms), hankel_N(alpha, field))
    m = MonadMatrices(A, B, tuple(src), tuple(mid), tuple(tgt), variant, field,
                      tuple(forms), tuple(alpha))
    check_degrees(m)
    return m


def build_monad(params: PullbackParams, forms: Sequence[Polynomial], alpha,
                field=QQ) -> MonadMatrices:
    """Monad of ``E_{b,g}`` (c1 = 0) or ``E_{b/2,g/2}`` (c1 = -1).

    ``alpha`` is an AlphaParams (already validated) or five raw values.
    """
    values = getattr(alpha, "alpha", alpha)
    src, mid, tgt = monad_twists(params)
    variant = "c1=0 pullback" if params.c1 == 0 else "c1=-1 half pullback"
    if params.c1 == 0 and (params.beta, params.gamma) == (0, 1):
        variant = "base"
    return monad_from_forms(forms, values, field, src, mid, tgt, variant)


def _check_map(m: PolyMatrix, src: Sequence[int], tgt: Sequence[int], what: str):
    for i, row in enumerate(m):
        for j, p in enumerate(row):
            if not p.is_zero() and p.degree != tgt[i] - src[j]:
                raise AssertionError(
                    f"{what}[{i}][{j}] has degree {p.degree}, expected {tgt[i] - src[j]}"
                )


def check_degrees(m: MonadMatrices) -> None:
    _check_map(m.d_left, m.src, m.mid, "A^T")
    _check_map(m.d_right, m.mid, m.tgt, "B^T")


def composition(m: MonadMatrices) -> PolyMatrix:
    """``B^T A^T``; identically zero for a complex."""
    return matmul(m.d_right, m.d_left)


def section_matrix(pm: PolyMatrix, src: Sequence[int], tgt: Sequence[int],
                   t: int, field=QQ) -> SparseMatrix:
    """Matrix of ``H^0`` of ``sum O(src_j + t) -> sum O(tgt_i + t)``."""
    col_off, ncols = [], 0
    for s in src:
        col_off.append(ncols)
        ncols += len(monomials(s + t))
    row_off, nrows = [], 0
    for s in tgt:
        row_off.append(nrows)
        nrows += len(monomials(s + t))
    out = SparseMatrix(nrows, ncols)
    for i, row in enumerate(pm):
        tidx = monomial_index(tgt[i] + t)
        for j, p in enumerate(row):
            if p.is_zero():
                continue
            for k, mono in enumerate(monomials(src[j] + t)):
                for e, c in p.terms.items():
                    target = (e[0] + mono[0], e[1] + mono[1], e[2] + mono[2], e[3] + mono[3])
                    out.add(row_off[i] + tidx[target], col_off[j] + k, c)
    if field.characteristic:
        p_ = field.characteristic
        out.rows = [{c: v % p_ for c, v in r.items() if v % p_} for r in out.rows]
    return out


def q_matrix(g: Sequence[Sequence[int]]) -> list[list[int]]:
    (x, y), (z, w) = g
    q = [[0] * 6 for _ in range(6)]
    for k in range(3):
        q[k][k], q[k][k + 3] = x, z
        q[k + 3][k], q[k + 3][k + 3] = y, w
    return q


def random_unimodular(rng: random.Random, steps: int = 4, bound: int = 5) -> list[list[int]]:
    g = [[1, 0], [0, 1]]
    for n in range(steps):
        k = rng.randint(-bound, bound)
        e = [[1, k], [0, 1]] if n % 2 == 0 else [[1, 0], [k, 1]]
        g = [[sum(g[i][m] * e[m][j] for m in range(2)) for j in range(2)] for i in range(2)]
    return g


def act(g, field=QQ) -> tuple[Polynomial, ...]:
    """Images of a, b, c, d under ``(a, c) -> g (a, c)`` and ``(b, d) -> g (b, d)``."""
    a, b, c, d = variables(field)
    (x, y), (z, w) = g
    return (a * x + c * y, b * x + d * y, a * z + c * w, b * z + d * w)


def _const_matrix(q, field) -> PolyMatrix:
    return [[Polynomial.const(v, field) for v in row] for row in q]


def equivariance_check(alpha, g, field=QQ) -> dict:
    """Compare ``g^*A`` with ``A Q_g`` and ``g^*B`` with ``Q_g^{-1} B`` on the base monad."""
    a, b, c, d = variables(field)
    base = monad_from_forms((a, b, c, d), alpha, field)
    moved = monad_from_forms(act(g, field), alpha, field)
    (x, y), (z, w) = g
    q = _const_matrix(q_matrix(g), field)
    q_inv = _const_matrix(q_matrix([[w, -y], [-z, x]]), field)
    return {
        "g": [list(r) for r in g],
        "A": moved.A == matmul(base.A, q),
        "B": moved.B == matmul(q_inv, base.B),
    }


def _rank_at(pm: PolyMatrix, point, field) -> int:
    m = SparseMatrix(len(pm), len(pm[0]))
    for i, row in enumerate(pm):
        for j, p in enumerate(row):
            v = p.evaluate(point)
            if v:
                m.add(i, j, v)
    return rank(m, field)


def minors_2x2(pm: PolyMatrix) -> list[Polynomial]:
    rows, cols = len(pm), len(pm[0])
    out = []
    for i in range(rows):
        for j in range(i + 1, rows):
            for k in range(cols):
                for l in range(k + 1, cols):
                    mnr = pm[i][k] * pm[j][l] - pm[i][l] * pm[j][k]
                    if not mnr.is_zero():
                        out.append(mnr)
    return out


def rank_drops_nowhere(pm: PolyMatrix, field=QQ) -> bool:
    """Exact test that a 2-row or 2-column matrix has rank 2 at every point.

    The 2x2 minors must generate an ideal of finite colength; with generators
    of degree <= D that happens iff the quotient vanishes in degree 4D - 3.
    """
    from .core import quotient_dim  # local import: core depends on this module

    if len(pm) > 2:
        pm = transpose(pm)
    gens = minors_2x2(pm)
    if not gens:
        return False
    top = max(g.degree for g in gens)
    return quotient_dim(gens, 4 * top - 3, field) == 0


def monad_check(m: MonadMatrices, samples: int = 100, seed: int = 0) -> dict:
    """Zero composition, plus fibrewise injectivity of A^T and surjectivity of B^T.

    Sample points come from ``random.Random(seed)``: coordinates uniform in
    ``[0, p)`` over GF(p) and in ``[-50, 50]`` over QQ, skipping the origin.
    Random points cannot see a degeneracy locus of positive codimension, so
    the base monad with the same alpha is also checked exactly via its minors;
    a pullback along forms without common zero inherits fibrewise ranks.
    """
    field = m.field
    report = {"variant": m.variant, "seed": seed, "samples": samples,
              "composition_zero": all(p.is_zero() for row in composition(m) for p in row),
              "failures": []}
    if m.alpha:
        base = monad_from_forms(variables(field), m.alpha, field)
        report["base_A_everywhere_injective"] = rank_drops_nowhere(base.d_left, field)
        report["base_B_everywhere_surjective"] = rank_drops_nowhere(base.d_right, field)
    rng = random.Random(seed)
    done = 0
    while done < samples:
        if field.characteristic:
            pt = tuple(rng.randrange(field.characteristic) for _ in range(4))
        else:
            pt = tuple(rng.randint(-50, 50) for _ in range(4))
        if not any(pt):
            continue
        done += 1
        ra = _rank_at(m.d_left, pt, field)
        rb = _rank_at(m.d_right, pt, field)
        if ra != 2 or rb != 2:
            report["failures"].append({"point": list(pt), "rank_A": ra, "rank_B": rb})
    report["passed"] = (report["composition_zero"] and not report["failures"]
                        and report.get("base_A_everywhere_injective", True)
                        and report.get("base_B_everywhere_surjective", True))
    return report
