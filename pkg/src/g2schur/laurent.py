"""Sparse Laurent polynomials in the three variables x12, x13, x23.

Exponent triples live in Z^3 (negative exponents allowed) and map to nonzero
exact coefficients.  Coefficients are ``fractions.Fraction`` throughout the
table machinery; any exact field element supporting ``+ - * ==`` and
truthiness (e.g. univariate rational functions in kappa) works as well, so
the same container carries residue-extraction data.

Values are immutable by convention: no method mutates ``terms`` after
construction, so instances may be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Exp = tuple[int, int, int]

#: variable names by position, used for rendering and error messages
VAR_NAMES = ("x12", "x13", "x23")


class LaurentPoly3:
    """Sparse trivariate Laurent polynomial with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        self.terms: dict[Exp, object] = (
            {} if terms is None else {e: c for e, c in terms.items() if c}
        )

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly3":
        return LaurentPoly3()

    @staticmethod
    def constant(c) -> "LaurentPoly3":
        return LaurentPoly3({(0, 0, 0): c})

    @staticmethod
    def one() -> "LaurentPoly3":
        return LaurentPoly3.constant(Fraction(1))

    @staticmethod
    def monomial(exp: Exp, coeff=Fraction(1)) -> "LaurentPoly3":
        return LaurentPoly3({tuple(exp): coeff})

    @staticmethod
    def variable(i: int) -> "LaurentPoly3":
        exp = [0, 0, 0]
        exp[i] = 1
        return LaurentPoly3.monomial(tuple(exp))

    # -- basic protocol -----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                f"{VAR_NAMES[i]}^{e[i]}" for i in range(3) if e[i] != 0
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = terms
        return out

    def __neg__(self) -> "LaurentPoly3":
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly3") -> "LaurentPoly3":
        if not isinstance(other, LaurentPoly3):
            return NotImplemented
        # iterate over the smaller operand for fewer dict rebuilds
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[Exp, object] = {}
        for (e1, e2, e3), c1 in a.items():
            for (f1, f2, f3), c2 in b.items():
                e = (e1 + f1, e2 + f2, e3 + f3)
                c = c1 * c2
                s = acc.get(e)
                acc[e] = c if s is None else s + c
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = {e: c for e, c in acc.items() if c}
        return out

    def scale(self, c) -> "LaurentPoly3":
        if not c:
            return LaurentPoly3()
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly3":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial is not defined here")
        result = LaurentPoly3.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and substitutions -------------------------------------

    def diff(self, i: int) -> "LaurentPoly3":
        """Partial derivative with respect to variable ``i`` (0, 1 or 2)."""
        terms: dict[Exp, object] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            ne = list(e)
            ne[i] = k - 1
            terms[tuple(ne)] = c * k
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = terms
        return out

    def mul_monomial(self, exp: Exp, coeff=Fraction(1)) -> "LaurentPoly3":
        if not coeff:
            return LaurentPoly3()
        d1, d2, d3 = exp
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = {
            (e1 + d1, e2 + d2, e3 + d3): c * coeff
            for (e1, e2, e3), c in self.terms.items()
        }
        return out

    def subs_unit(self, i: int) -> "LaurentPoly3":
        """Set variable ``i`` to 1 (project its exponent away)."""
        acc: dict[Exp, object] = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i] = 0
            key = tuple(ne)
            s = acc.get(key)
            acc[key] = c if s is None else s + c
        return LaurentPoly3(acc)

    def flip(self, i: int) -> "LaurentPoly3":
        """Substitute x_i -> 1/x_i."""
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = {
            tuple(-e[j] if j == i else e[j] for j in range(3)): c
            for e, c in self.terms.items()
        }
        return out

    def permute(self, pos: tuple[int, int, int]) -> "LaurentPoly3":
        """Relocate exponents: the exponent at position ``k`` moves to ``pos[k]``."""
        terms: dict[Exp, object] = {}
        for e, c in self.terms.items():
            ne = [0, 0, 0]
            for k in range(3):
                ne[pos[k]] = e[k]
            terms[tuple(ne)] = c
        out = LaurentPoly3.__new__(LaurentPoly3)
        out.terms = terms
        return out

    def eval_ones(self):
        """Value at x12 = x13 = x23 = 1, i.e. the sum of all coefficients."""
        total = Fraction(0)
        for c in self.terms.values():
            total = total + c
        return total

    # -- structure inspection -------------------------------------------

    def is_polynomial(self) -> bool:
        return all(min(e) >= 0 for e in self.terms)

    def total_degree(self) -> int:
        """Maximal total degree over all monomials; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def top_part(self) -> "LaurentPoly3":
        """Homogeneous part of maximal total degree."""
        d = self.total_degree()
        return LaurentPoly3({e: c for e, c in self.terms.items() if sum(e) == d})

    def homogeneous_part(self, d: int) -> "LaurentPoly3":
        return LaurentPoly3({e: c for e, c in self.terms.items() if sum(e) == d})

    def lex_leading(self) -> tuple[Exp, object]:
        """Leading term under the lexicographic order x12 > x13 > x23."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self) -> Iterator[tuple[Exp, object]]:
        for e in sorted(self.terms):
            yield e, self.terms[e]


def x_plus_inv(i: int) -> LaurentPoly3:
    """The symmetric generator x_i + 1/x_i of the invariant subring."""
    plus = [0, 0, 0]
    minus = [0, 0, 0]
    plus[i] = 1
    minus[i] = -1
    return LaurentPoly3({tuple(plus): Fraction(1), tuple(minus): Fraction(1)})


def poly_from_pairs(pairs: Iterable[tuple[Exp, object]]) -> LaurentPoly3:
    acc: dict[Exp, object] = {}
    for e, c in pairs:
        key = tuple(e)
        s = acc.get(key)
        acc[key] = c if s is None else s + c
    return LaurentPoly3(acc)
