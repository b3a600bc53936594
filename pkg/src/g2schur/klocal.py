"""Exact arithmetic in the localization Q[kappa^{+-1}, 1/(1 - kappa^2)].

Every coefficient met while expanding the specialized generating sums around
lambda = kappa lives in this ring: numerators are Laurent polynomials in
kappa and denominators are powers of (1 - kappa^2).  Staying inside the
localization makes products plain convolutions, with no gcd reduction on the
hot path; conversion to a reduced rational function happens once per
extracted value.
"""

from __future__ import annotations

from fractions import Fraction

from .univariate import RatFun1

_UNIT = {0: Fraction(1), 2: Fraction(-1)}  # 1 - kappa^2


def _convolve(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e)
            s = c1 * c2 if s is None else s + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


_unit_powers: list[dict[int, Fraction]] = [{0: Fraction(1)}]


def _unit_power(n: int) -> dict[int, Fraction]:
    """(1 - kappa^2)^n as a coefficient dict."""
    while len(_unit_powers) <= n:
        _unit_powers.append(_convolve(_unit_powers[-1], _UNIT))
    return _unit_powers[n]


def _divide_unit(terms: dict[int, Fraction]) -> dict[int, Fraction] | None:
    """Exact quotient terms / (1 - kappa^2), or None when not divisible."""
    if not terms:
        return {}
    lo = min(terms)
    hi = max(terms)
    quotient: dict[int, Fraction] = {}
    # p = (1 - k^2) q  =>  q_e = p_e + q_{e-2}, ascending in e
    for e in range(lo, hi + 1):
        q = terms.get(e, Fraction(0)) + quotient.get(e - 2, Fraction(0))
        if q:
            quotient[e] = q
    if quotient.get(hi - 1) or quotient.get(hi):
        return None
    quotient.pop(hi - 1, None)
    quotient.pop(hi, None)
    return quotient


class KLocal:
    """terms / (1 - kappa^2)^denpow with a kappa-Laurent numerator."""

    __slots__ = ("terms", "denpow")

    def __init__(self, terms: dict[int, Fraction] | None = None, denpow: int = 0):
        self.terms: dict[int, Fraction] = {} if not terms else {
            e: c for e, c in terms.items() if c}
        self.denpow = 0 if not self.terms else denpow

    @staticmethod
    def zero() -> "KLocal":
        return KLocal()

    @staticmethod
    def one() -> "KLocal":
        return KLocal({0: Fraction(1)})

    @staticmethod
    def kappa_power(n: int) -> "KLocal":
        return KLocal({n: Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"KLocal({self.terms!r}, denpow={self.denpow})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, KLocal):
            return NotImplemented
        return not (self - other)

    def _lifted(self, denpow: int) -> dict[int, Fraction]:
        if denpow == self.denpow:
            return self.terms
        return _convolve(self.terms, _unit_power(denpow - self.denpow))

    def __add__(self, other: "KLocal") -> "KLocal":
        if not isinstance(other, KLocal):
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        denpow = max(self.denpow, other.denpow)
        a = dict(self._lifted(denpow))
        for e, c in other._lifted(denpow).items():
            s = a.get(e)
            s = c if s is None else s + c
            if s:
                a[e] = s
            else:
                a.pop(e, None)
        return KLocal(a, denpow)

    def __neg__(self) -> "KLocal":
        out = KLocal.__new__(KLocal)
        out.terms = {e: -c for e, c in self.terms.items()}
        out.denpow = self.denpow
        return out

    def __sub__(self, other: "KLocal") -> "KLocal":
        if not isinstance(other, KLocal):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "KLocal":
        if isinstance(other, KLocal):
            return KLocal(_convolve(self.terms, other.terms),
                          self.denpow + other.denpow)
        if isinstance(other, (int, Fraction)):
            if not other:
                return KLocal()
            return KLocal({e: c * other for e, c in self.terms.items()}, self.denpow)
        return NotImplemented

    __rmul__ = __mul__

    def __rtruediv__(self, other) -> "KLocal":
        """other / self when the numerator is (monomial) * (1 - kappa^2)^b."""
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not self.terms:
            raise ZeroDivisionError("division by zero")
        terms, b = self.terms, 0
        while len(terms) > 1:
            q = _divide_unit(terms)
            if q is None:
                raise ZeroDivisionError(
                    "reciprocal leaves the localization (numerator not a monomial)")
            terms, b = q, b + 1
        (e, c), = terms.items()
        return KLocal({-e: Fraction(other) / c}, b - self.denpow)

    def to_ratfun(self) -> RatFun1:
        num = RatFun1.from_kappa_laurent(self.terms)
        if self.denpow > 0:
            den = RatFun1.from_kappa_laurent(_unit_power(self.denpow))
            return num / den
        if self.denpow < 0:
            return num * RatFun1.from_kappa_laurent(_unit_power(-self.denpow))
        return num
