"""SL(U)-character tables for the c2 = 2 instanton ``E`` and its alpha data.

``E`` is the cohomology of

    0 -> C^2 (-1) --A--> U^3 --B--> C^2 (1) -> 0

on ``P^3 = P(U + U)``. Sections come from the equivariant minimal resolution

    0 -> U(-4) -> (S^2 U)^2 (-3) -> S^3 U (-2) + C^2 (-1) -> E -> 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chars import Character, decompose, irreducible_char, sym_power_V

TRIVIAL = irreducible_char(0)
STD = irreducible_char(1)


class DegenerateMonadError(ValueError):
    pass


@dataclass(frozen=True)
class AlphaParams:
    alpha: tuple[Fraction, ...]
    hankel_det: Fraction = field(compare=False)
    invariant: Fraction = field(compare=False)

    @property
    def special(self) -> bool:
        """True on the quadric ``I = 0`` where ``h^1 End E(-2)`` jumps."""
        return self.invariant == 0


def hankel_det(alpha: Sequence) -> Fraction:
    a0, a1, a2, a3, a4 = (Fraction(x) for x in alpha)
    return (a0 * (a2 * a4 - a3 * a3)
            - a1 * (a1 * a4 - a3 * a2)
            + a2 * (a1 * a3 - a2 * a2))


def alpha_invariant(alpha: Sequence) -> Fraction:
    a0, a1, a2, a3, a4 = (Fraction(x) for x in alpha)
    return a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2


def alpha_validate(alpha: Sequence) -> AlphaParams:
    if len(alpha) != 5:
        raise ValueError(f"need five alpha values, got {len(alpha)}")
    vals = tuple(Fraction(x) for x in alpha)
    det = hankel_det(vals)
    if det == 0:
        raise DegenerateMonadError(
            f"degenerate monad: Hankel determinant of {[str(v) for v in vals]} is 0"
        )
    return AlphaParams(vals, det, alpha_invariant(vals))


GENERIC_ALPHA = (1, 0, 1, 0, 2)
SPECIAL_ALPHA = (1, 0, 0, 1, 0)


def _checked(x: Character, what: str) -> Character:
    try:
        decompose(x)
    except ValueError as exc:  # pragma: no cover - guards the tables below
        raise AssertionError(f"{what} is not effective: {x!r}") from exc
    return x


def h0_E_char(h: int) -> Character:
    """Character of ``H^0 E(h)`` read off the degree-h piece of the resolution."""
    if h <= 0:
        return Character()
    s2, s3 = irreducible_char(2), irreducible_char(3)
    x = (s3 * sym_power_V(h - 2)
         + 2 * sym_power_V(h - 1)
         - 2 * (s2 * sym_power_V(h - 3))
         + STD * sym_power_V(h - 4))
    return _checked(x, f"H^0 E({h})")


def h1_E_from_monad(h: int) -> Character:
    """Virtual character ``2 S^{h+1}V - 3 U S^h V + H^0 E(h) + 2 S^{h-1}V``.

    Equal to ``H^1 E(h)`` whenever the twisted line bundles in the monad have
    no higher cohomology (h >= -3).
    """
    return (2 * sym_power_V(h + 1) - 3 * (STD * sym_power_V(h))
            + h0_E_char(h) + 2 * sym_power_V(h - 1))


def h1_E_char(h: int) -> Character:
    if h == -1:
        return 2 * TRIVIAL
    if h == 0:
        return STD
    return Character()


def hi_E_char(i: int, h: int) -> Character:
    """``H^i E(h)``; degrees 2 and 3 come from Serre duality (E is self-dual)."""
    if i == 0:
        return h0_E_char(h)
    if i == 1:
        return h1_E_char(h)
    if i == 2:
        return h1_E_char(-4 - h)
    if i == 3:
        return h0_E_char(-4 - h)
    raise ValueError(f"cohomological degree must be 0..3, got {i}")


_END_H1 = {
    -1: 4 * STD,
    0: 4 * TRIVIAL + 3 * irreducible_char(2),
    1: 2 * STD + 2 * irreducible_char(3),
    2: irreducible_char(4),
}


def h1_EndE_bonus(h: int) -> Character:
    """Part of ``H^1 End E(h)`` present only when the invariant I vanishes."""
    return TRIVIAL if h == -2 else Character()


def h1_EndE_char(h: int, special: bool) -> Character:
    x = _END_H1.get(h, Character())
    if special:
        x = x + h1_EndE_bonus(h)
    return x


def base_support(i: int) -> tuple[int | None, int | None]:
    """Closed range of h where ``H^i E(h)`` can be nonzero (None = unbounded)."""
    return {0: (1, None), 1: (-1, 0), 2: (-4, -3), 3: (None, -5)}[i]


END_SUPPORT = (-2, 2)
