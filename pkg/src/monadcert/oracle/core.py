"""Ground truth by exact linear algebra on the monad of ``E_{b,g}``.

Line bundles on P^3 have no H^1 or H^2, so for a monad
``C^2(s) --A^T--> mid --B^T--> C^2(tau)`` with cohomology E:

    h^0 E(t) = dim ker H^0(B^T)(t) - 2 dim R_{t+s}
    h^1 E(t) = 2 dim R_{t+tau} - rank H^0(B^T)(t)

``h^0(E x E)(t)`` is the degree-0 homology of the global sections of the
tensor-square complex: only H^0 and H^3 of its terms are nonzero, and an
H^3 differential would have to start at position -4, which does not exist.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from ..engine import PullbackParams
from ..hilbert import dim_graded_piece
from .fields import QQ
from .linalg import rank
from .monad import MonadMatrices, PolyMatrix, build_monad, section_matrix
from .parser import parse_polynomials
from .poly import Polynomial, random_form, variables


class CommonZeroError(ValueError):
    pass


@dataclass(frozen=True)
class FSpec:
    forms: tuple[Polynomial, ...]
    degrees: tuple[int, ...]
    description: str = "custom"

    @property
    def socle(self) -> int:
        return sum(self.degrees) - 4


def quotient_dim(gens: Sequence[Polynomial], p: int, field=QQ) -> int:
    """``dim (R / (gens))_p`` via the rank of ``sum_i R_{p - deg g_i} -> R_p``."""
    if p < 0:
        return 0
    gens = [g.to_field(field) for g in gens]
    pm = [list(gens)]
    m = section_matrix(pm, [-g.degree for g in gens], [0], p, field)
    return dim_graded_piece(p) - rank(m, field)


def macaulay_s_p(f: FSpec, p: int, field=QQ) -> int:
    return quotient_dim(f.forms, p, field)


def fspec_validate(forms: Sequence[Polynomial], degrees: Sequence[int] | None = None,
                   field=QQ, description: str = "custom") -> FSpec:
    """Certify that four forms have no common zero (finite colength)."""
    forms = tuple(forms)
    if len(forms) != 4:
        raise ValueError(f"need four forms, got {len(forms)}")
    for i, f in enumerate(forms, start=1):
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError(f"f{i} = {f} is not a nonzero homogeneous form")
    got = tuple(f.degree for f in forms)
    if degrees is not None and tuple(degrees) != got:
        raise ValueError(f"degree mismatch: forms have degrees {got}, expected {tuple(degrees)}")
    spec = FSpec(forms, got, description)
    extra = macaulay_s_p(spec, spec.socle + 1, field)
    if extra:
        raise CommonZeroError(
            f"common zero exists: quotient has dimension {extra} in degree {spec.socle + 1}"
        )
    return spec


def fspec_default(params: PullbackParams) -> FSpec:
    a, b, c, d = variables()
    d1, d2, d3, d4 = params.degrees
    return FSpec((a ** d1, b ** d2, c ** d3, d ** d4), params.degrees, "powers")


def fspec_random(params: PullbackParams, seed: int, field=QQ, attempts: int = 20) -> FSpec:
    """Dense random forms from ``random.Random(seed)``, redrawn until certified."""
    rng = random.Random(seed)
    for _ in range(attempts):
        forms = [random_form(d, rng, field) for d in params.degrees]
        try:
            return fspec_validate(forms, params.degrees, field,
                                  f"random(seed={seed}, field={field.name})")
        except CommonZeroError:
            continue
    raise CommonZeroError(f"no valid random forms after {attempts} draws (seed {seed})")


def fspec_from_text(text: str, params: PullbackParams, field=QQ,
                    description: str = "file") -> FSpec:
    return fspec_validate(parse_polynomials(text, field), params.degrees, field, description)


def _b_section_rank(m: MonadMatrices, t: int) -> tuple[int, int]:
    sec = section_matrix(m.d_right, m.mid, m.tgt, t, m.field)
    return rank(sec, m.field), sec.ncols


def oracle_h0_E(params: PullbackParams, f: FSpec, alpha, t: int, field=QQ,
                monad: MonadMatrices | None = None) -> int:
    m = monad or build_monad(params, f.forms, alpha, field)
    r, ncols = _b_section_rank(m, t)
    return ncols - r - sum(dim_graded_piece(t + s) for s in m.src)


def oracle_h1_E(params: PullbackParams, f: FSpec, alpha, t: int, field=QQ,
                monad: MonadMatrices | None = None) -> int:
    m = monad or build_monad(params, f.forms, alpha, field)
    r, _ = _b_section_rank(m, t)
    return sum(dim_graded_piece(t + s) for s in m.tgt) - r


def oracle_h0_h1_E(params, f, alpha, t, field=QQ, monad=None) -> tuple[int, int]:
    m = monad or build_monad(params, f.forms, alpha, field)
    r, ncols = _b_section_rank(m, t)
    h0 = ncols - r - sum(dim_graded_piece(t + s) for s in m.src)
    h1 = sum(dim_graded_piece(t + s) for s in m.tgt) - r
    return h0, h1


@dataclass
class TensorSquare:
    """Terms and differentials of ``M (x) M`` in positions -2..2."""
    twists: dict[int, list[int]]
    maps: dict[int, PolyMatrix]  # position k -> (k+1)


def tensor_square(m: MonadMatrices) -> TensorSquare:
    terms = {-1: list(m.src), 0: list(m.mid), 1: list(m.tgt)}
    diff = {-1: m.d_left, 0: m.d_right}
    zero = Polynomial({}, m.field)
    index: dict[int, list[tuple[int, int, int, int]]] = {k: [] for k in range(-2, 3)}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            for a in range(len(terms[i])):
                for b in range(len(terms[j])):
                    index[i + j].append((i, j, a, b))
    twists = {k: [terms[i][a] + terms[j][b] for i, j, a, b in basis]
              for k, basis in index.items()}
    maps = {}
    for k in range(-2, 2):
        pos = {key: n for n, key in enumerate(index[k + 1])}
        mat = [[zero] * len(index[k]) for _ in index[k + 1]]
        for col, (i, j, a, b) in enumerate(index[k]):
            if i in diff:
                for a2, row in enumerate(diff[i]):
                    if not row[a].is_zero():
                        mat[pos[(i + 1, j, a2, b)]][col] = mat[pos[(i + 1, j, a2, b)]][col] + row[a]
            if j in diff:
                sign = -1 if i % 2 else 1
                for b2, row in enumerate(diff[j]):
                    if not row[b].is_zero():
                        r = pos[(i, j + 1, a, b2)]
                        mat[r][col] = mat[r][col] + sign * row[b]
        maps[k] = mat
    return TensorSquare(twists, maps)


def oracle_h0_EndE(params: PullbackParams, f: FSpec, alpha, t: int = 0, field=QQ,
                   monad: MonadMatrices | None = None) -> int:
    """``h^0 End E(t)``; End E = E x E for c1 = 0 and E x E(1) for c1 = -1."""
    m = monad or build_monad(params, f.forms, alpha, field)
    shift = t + (1 if params.c1 == -1 else 0)
    ts = tensor_square(m)
    d_in = section_matrix(ts.maps[-1], ts.twists[-1], ts.twists[0], shift, field)
    d_out = section_matrix(ts.maps[0], ts.twists[0], ts.twists[1], shift, field)
    return d_out.ncols - rank(d_out, field) - rank(d_in, field)
