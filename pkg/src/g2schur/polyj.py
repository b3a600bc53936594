"""Exact polynomials in the integer labels (j1, j2, j3).

These carry the series coefficients of table entries as closed-form
polynomial families, and the weights fed to the generating-function
machinery.  Representation is a sparse map from exponent triples to
nonzero Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

JExp = tuple[int, int, int]


class PolyJ:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[JExp, Fraction | int] | None = None):
        self.terms: dict[JExp, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    if min(e) < 0:
                        raise ValueError("exponents must be nonnegative")
                    self.terms[tuple(e)] = c

    @staticmethod
    def zero() -> "PolyJ":
        return PolyJ()

    @staticmethod
    def constant(c) -> "PolyJ":
        return PolyJ({(0, 0, 0): Fraction(c)})

    @staticmethod
    def variable(i: int) -> "PolyJ":
        e = [0, 0, 0]
        e[i] = 1
        return PolyJ({tuple(e): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyJ):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            mono = "*".join(f"j{i + 1}^{e[i]}" for i in range(3) if e[i])
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __add__(self, other: "PolyJ") -> "PolyJ":
        if not isinstance(other, PolyJ):
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = PolyJ.__new__(PolyJ)
        out.terms = terms
        return out

    def __neg__(self) -> "PolyJ":
        out = PolyJ.__new__(PolyJ)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "PolyJ") -> "PolyJ":
        if not isinstance(other, PolyJ):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "PolyJ") -> "PolyJ":
        if not isinstance(other, PolyJ):
            return NotImplemented
        acc: dict[JExp, Fraction] = {}
        for (a1, a2, a3), c1 in self.terms.items():
            for (b1, b2, b3), c2 in other.terms.items():
                e = (a1 + b1, a2 + b2, a3 + b3)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return PolyJ(acc)

    def scale(self, c) -> "PolyJ":
        c = Fraction(c)
        out = PolyJ.__new__(PolyJ)
        out.terms = {} if not c else {e: c * v for e, v in self.terms.items()}
        return out

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def evaluate(self, triple: tuple[int, int, int]) -> Fraction:
        j1, j2, j3 = triple
        total = Fraction(0)
        for (a, b, c), coeff in self.terms.items():
            total += coeff * j1**a * j2**b * j3**c
        return total
