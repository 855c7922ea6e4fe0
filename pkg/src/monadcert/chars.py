"""Virtual characters of SL(2) stored as sparse weight -> multiplicity maps.

The irreducible ``S^m U`` has weights ``m, m-2, ..., -m``. A character is
*effective* when it is a nonnegative combination of irreducibles, which for
SL(2) is checked by peeling irreducibles off the top weight.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class NotEffectiveError(ValueError):
    """Raised when a virtual character is not an actual representation."""


class ParityError(ValueError):
    """Raised when a weight lands on a non-integral twist."""


class Character:
    """Finite formal sum of torus weights with integer multiplicities."""

    __slots__ = ("_w",)

    def __init__(self, weights: Mapping[int, int] | None = None):
        self._w = {int(k): int(v) for k, v in (weights or {}).items() if v}

    @classmethod
    def zero(cls) -> "Character":
        return cls()

    @property
    def weights(self) -> dict[int, int]:
        return dict(sorted(self._w.items(), reverse=True))

    def __getitem__(self, w: int) -> int:
        return self._w.get(w, 0)

    def items(self):
        return self._w.items()

    def dim(self) -> int:
        return sum(self._w.values())

    def is_zero(self) -> bool:
        return not self._w

    def is_self_dual(self) -> bool:
        return all(self._w.get(-w, 0) == m for w, m in self._w.items())

    def max_abs_weight(self) -> int:
        return max((abs(w) for w in self._w), default=0)

    def __add__(self, other: "Character") -> "Character":
        out = dict(self._w)
        for w, m in other._w.items():
            out[w] = out.get(w, 0) + m
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({w: -m for w, m in self._w.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Character):
            return tensor(self, other)
        if isinstance(other, int):
            return Character({w: other * m for w, m in self._w.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Character):
            return self._w == other._w
        if isinstance(other, Mapping):
            return self._w == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._w.items()))

    def __repr__(self) -> str:
        return f"Character({self.weights})"


def irreducible_char(m: int) -> Character:
    """Character of the symmetric power ``S^m U``."""
    if m < 0:
        raise ValueError(f"irreducible index must be nonnegative, got {m}")
    return Character({m - 2 * k: 1 for k in range(m + 1)})


def tensor(x: Character, y: Character) -> Character:
    """Laurent product of two characters."""
    out: dict[int, int] = {}
    for u, a in x.items():
        for v, b in y.items():
            out[u + v] = out.get(u + v, 0) + a * b
    return Character(out)


def decompose(x: Character) -> list[tuple[int, int]]:
    """Split ``x`` into irreducibles, highest first.

    Raises NotEffectiveError if some peeled multiplicity is negative or the
    remainder has only negative weights left.
    """
    rest = dict(x.items())
    out = []
    while rest:
        top = max(rest)
        mult = rest[top]
        if top < 0 or mult < 0:
            raise NotEffectiveError(f"not an effective representation: {x!r}")
        for w in range(top, -top - 1, -2):
            left = rest.get(w, 0) - mult
            if left:
                rest[w] = left
            else:
                rest.pop(w, None)
        out.append((top, mult))
    return out


def from_decomposition(parts: Iterable[tuple[int, int]]) -> Character:
    total = Character()
    for m, mult in parts:
        total = total + mult * irreducible_char(m)
    return total


def sym_power_V(k: int) -> Character:
    """Character of ``S^k(U + U)``, i.e. degree-k forms on P^3 under SL(U)."""
    total = Character()
    for i in range(k + 1):
        total = total + tensor(irreducible_char(i), irreducible_char(k - i))
    return total


def evaluate_on_split_bundle(x: Character, beta2: int, twist2: int) -> dict[int, int]:
    """Substitute ``O(-b) + O(b)`` for U and twist, returning degree -> count.

    Parameters are doubled (``beta2 = 2b``, ``twist2 = 2 * twist``) so that
    half-integral ``b`` still works; weight w lands at ``(w*beta2 + twist2)/2``.
    """
    out: dict[int, int] = {}
    for w, m in x.items():
        num = w * beta2 + twist2
        if num % 2:
            raise ParityError(
                f"non-integral twist: weight {w} with beta2={beta2}, twist2={twist2}"
            )
        q = num // 2
        out[q] = out.get(q, 0) + m
    return {q: c for q, c in sorted(out.items()) if c}
