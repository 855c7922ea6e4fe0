"""Sparse homogeneous polynomials in a, b, c, d."""
from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .fields import QQ

VARS = "abcd"
Exp = tuple[int, int, int, int]


@lru_cache(maxsize=None)
def monomials(deg: int) -> tuple[Exp, ...]:
    """Degree-``deg`` exponent vectors in graded lex order, a > b > c > d."""
    if deg < 0:
        return ()
    out = [
        (i, j, k, deg - i - j - k)
        for i in range(deg + 1)
        for j in range(deg + 1 - i)
        for k in range(deg + 1 - i - j)
    ]
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(deg: int) -> dict[Exp, int]:
    return {m: i for i, m in enumerate(monomials(deg))}


class Polynomial:
    __slots__ = ("terms", "field")

    def __init__(self, terms: Mapping[Exp, object] | None = None, field=QQ):
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            c = field.reduce(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def var(cls, name: str, field=QQ) -> "Polynomial":
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1}, field)

    @classmethod
    def const(cls, c, field=QQ) -> "Polynomial":
        return cls({(0, 0, 0, 0): c}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Homogeneous degree; None for the zero polynomial."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"not homogeneous: {self}")
        return next(iter(ds), None)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.const(other, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = Polynomial.const(1, self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other, self.field)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_field(self, field) -> "Polynomial":
        return Polynomial(self.terms, field)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace a, b, c, d by ``images``."""
        out = Polynomial({}, self.field)
        for e, c in self.terms.items():
            term = Polynomial.const(c, self.field)
            for img, k in zip(images, e):
                if k:
                    term = term * img ** k
            out = out + term
        return out

    def evaluate(self, point: Sequence):
        f = self.field
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            total += v
        return f.reduce(total)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                VARS[i] if k == 1 else f"{VARS[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def variables(field=QQ) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.var(v, field) for v in VARS)


def random_form(deg: int, rng, field=QQ, low: int = -9, high: int = 9) -> Polynomial:
    """Dense form of degree ``deg``; coefficients uniform in ``[0, p)`` over GF(p)."""
    if field.characteristic:
        coeffs = {m: rng.randrange(field.characteristic) for m in monomials(deg)}
    else:
        coeffs = {m: rng.randint(low, high) for m in monomials(deg)}
    return Polynomial(coeffs, field)

