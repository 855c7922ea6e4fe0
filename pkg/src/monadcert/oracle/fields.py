"""Exact coefficient fields: the rationals and prime fields GF(p)."""
from __future__ import annotations

from fractions import Fraction


class RationalField:
    characteristic = 0
    name = "rational"

    def reduce(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x):
        return 1 / Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """Residues mod an odd prime, stored as ints in ``[0, p)``."""

    def __init__(self, p: int):
        if p <= 2 or not _is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = self.characteristic = p
        self.name = f"prime:{p}"

    def reduce(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x) -> int:
        return pow(int(x), -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
DEFAULT_PRIME = 32003


def parse_field(text: str):
    """``rational`` or ``prime:<p>``."""
    if text in ("rational", "QQ", "q"):
        return QQ
    if text.startswith("prime:"):
        return PrimeField(int(text.split(":", 1)[1]))
    if text == "prime":
        return PrimeField(DEFAULT_PRIME)
    raise ValueError(f"unknown field {text!r}; use 'rational' or 'prime:<p>'")
