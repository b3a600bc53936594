"""The three second-order operators H_1, H_2, H_3 and their graded components.

Each operator acts on Laurent polynomials in x12, x13, x23 and has table
entries as eigenfunctions with eigenvalue (j_k + 1)^2.  Operator k
differentiates a pair of variables (v, w) and treats the third (u) as a
spectator:

    H_k = v^2 d^2/dv^2 + w^2 d^2/dw^2
        + [2(v^2+1)(w^2+1) - 4vw(u + 1/u)] / [(v - 1/v)(w - 1/w)] d^2/dv dw
        + (3v^2+1)/(v - 1/v) d/dv + (3w^2+1)/(w - 1/w) d/dw + 1

with (v, w, u) = (x12, x13, x23), (x12, x23, x13), (x13, x23, x12) for
k = 1, 2, 3.  Eigenvalue checks multiply through by (v - 1/v)(w - 1/w), so
all arithmetic stays inside Laurent polynomials.

After the shift x = 1 + X the operator decomposes into homogeneous graded
components of degree m >= -2 (a coefficient monomial of degree d with an
order-r derivative has degree d - r).  Components are assembled once per
(k, m) by expanding each rational coefficient as a Laurent series in X and
are then reusable sparse linear maps.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .laurent import LaurentPoly3, x_plus_inv
from .series import TruncSeries3
from .table import SchurTable, Triple

# operator index -> (v, w, u) variable positions (0=x12, 1=x13, 2=x23)
OP_VARS = {1: (0, 1, 2), 2: (0, 2, 1), 3: (1, 2, 0)}


def _unit(i: int, e: int) -> LaurentPoly3:
    exp = [0, 0, 0]
    exp[i] = e
    return LaurentPoly3.monomial(tuple(exp))


def apply_H_cleared(k: int, p: LaurentPoly3, mu: Fraction) -> LaurentPoly3:
    """(v - 1/v)(w - 1/w) * (H_k p - mu p), exactly.

    Zero iff p is a mu-eigenfunction of H_k.
    """
    v, w, u = OP_VARS[k]
    one = Fraction(1)
    sv = _unit(v, 1) - _unit(v, -1)           # v - 1/v
    sw = _unit(w, 1) - _unit(w, -1)
    d = sv * sw
    v2 = _unit(v, 2)
    w2 = _unit(w, 2)
    cross_num = (
        (v2 + LaurentPoly3.one()) * (w2 + LaurentPoly3.one())
    ).scale(2) - (_unit(v, 1) * _unit(w, 1) * x_plus_inv(u)).scale(4)

    pv = p.diff(v)
    pw = p.diff(w)
    out = d * (v2 * pv.diff(v) + w2 * pw.diff(w))
    out = out + cross_num * pv.diff(w)
    out = out + sw * (v2.scale(3) + LaurentPoly3.one()) * pv
    out = out + sv * (w2.scale(3) + LaurentPoly3.one()) * pw
    out = out + (d * p).scale(one - mu)
    return out


def verify_eigen(table: SchurTable, max_level: int | None = None) -> list[dict]:
    """Eigenvalue check H_k phi = (j_k + 1)^2 phi for every entry, all k."""
    if max_level is None:
        max_level = table.max_level
    checks = []
    for triple in table.triples():
        if sum(triple) > max_level:
            continue
        phi = table.entries[triple]
        for k in (1, 2, 3):
            mu = Fraction((triple[k - 1] + 1) ** 2)
            residual = apply_H_cleared(k, phi, mu)
            rec = {
                "check": "eigen",
                "triple": list(triple),
                "k": k,
                "status": "pass" if not residual else "fail",
            }
            if residual:
                rec["witness"] = repr(residual)
            checks.append(rec)
    return checks


class HomogeneousOp:
    """Degree-graded component of one operator: coefficient/derivative pairs.

    ``terms`` is a list of (coefficient Laurent polynomial, derivative
    multi-index (n12, n13, n23)); every coefficient monomial has total degree
    ``degree + n12 + n13 + n23``.  Mixed partials are canonicalized with the
    x12-derivative order first.
    """

    __slots__ = ("k", "degree", "terms")

    def __init__(self, k: int, degree: int,
                 terms: list[tuple[LaurentPoly3, tuple[int, int, int]]]):
        self.k = k
        self.degree = degree
        self.terms = terms

    def apply(self, p: LaurentPoly3) -> LaurentPoly3:
        out = LaurentPoly3.zero()
        for coeff, (n1, n2, n3) in self.terms:
            q = p
            for _ in range(n1):
                q = q.diff(0)
            for _ in range(n2):
                q = q.diff(1)
            for _ in range(n3):
                q = q.diff(2)
            if q:
                out = out + coeff * q
        return out


def apply_homogeneous(op: HomogeneousOp, p: LaurentPoly3) -> LaurentPoly3:
    return op.apply(p)


def _poly1(var: int, coeffs: list[int]) -> LaurentPoly3:
    """Univariate polynomial sum coeffs[e] * X_var^e as a trivariate container."""
    out = {}
    for e, c in enumerate(coeffs):
        if c:
            exp = [0, 0, 0]
            exp[var] = e
            out[tuple(exp)] = Fraction(c)
    return LaurentPoly3(out)


@functools.lru_cache(maxsize=None)
def _coeff_expansion(k: int, kind: str, upto: int) -> dict[int, LaurentPoly3]:
    """Homogeneous parts of one operator coefficient after x = 1 + X.

    Every coefficient is numerator * X^{-monomial} / unit, where the unit has
    a nonzero constant term; the unit inverse is expanded as a truncated
    series.  Returns {degree: part} for degrees from -shift through ``upto``
    (the monomial denominator bounds how negative a degree can get).
    """
    v, w, u = OP_VARS[k]
    if kind == "vv":
        num = _poly1(v, [1, 2, 1])                     # (1+s)^2
        unit = LaurentPoly3.one()
        shift = 0
    elif kind == "ww":
        num = _poly1(w, [1, 2, 1])
        unit = LaurentPoly3.one()
        shift = 0
    elif kind == "vw":
        # [2(2+2s+s^2)(2+2t+t^2)(1+r) - 4(1+s)(1+t)(2+2r+r^2)] (1+s)(1+t)
        #   / [ s t (2+s)(2+t)(1+r) ]
        a = _poly1(v, [2, 2, 1]) * _poly1(w, [2, 2, 1]) * _poly1(u, [1, 1])
        b = _poly1(v, [1, 1]) * _poly1(w, [1, 1]) * _poly1(u, [2, 2, 1])
        num = (a.scale(2) - b.scale(4)) * _poly1(v, [1, 1]) * _poly1(w, [1, 1])
        unit = _poly1(v, [2, 1]) * _poly1(w, [2, 1]) * _poly1(u, [1, 1])
        shift = 2  # divide by s*t
    elif kind == "v":
        num = _poly1(v, [4, 6, 3]) * _poly1(v, [1, 1])  # (4+6s+3s^2)(1+s)
        unit = _poly1(v, [2, 1])
        shift = 1  # divide by s
    elif kind == "w":
        num = _poly1(w, [4, 6, 3]) * _poly1(w, [1, 1])
        unit = _poly1(w, [2, 1])
        shift = 1
    else:
        raise ValueError(kind)

    order = upto + shift
    series = TruncSeries3.from_poly(num, order)
    if unit != LaurentPoly3.one():
        series = series * TruncSeries3.from_poly(unit, order).invert()

    monomial_shift = [0, 0, 0]
    if kind == "vw":
        monomial_shift[v] = -1
        monomial_shift[w] = -1
    elif kind == "v":
        monomial_shift[v] = -1
    elif kind == "w":
        monomial_shift[w] = -1
    monomial_shift = tuple(monomial_shift)
    parts: dict[int, LaurentPoly3] = {}
    for d in range(-shift, upto + 1):
        parts[d] = series.homogeneous_part(d + shift).mul_monomial(monomial_shift)
    return parts


def _deriv_index(positions: tuple[int, ...]) -> tuple[int, int, int]:
    n = [0, 0, 0]
    for p in positions:
        n[p] += 1
    return tuple(n)


@functools.lru_cache(maxsize=None)
def homogeneous_component(k: int, m: int) -> HomogeneousOp:
    """Degree-m graded component of H_k in the shifted variables X = x - 1."""
    if k not in OP_VARS:
        raise ValueError("operator index must be 1, 2 or 3")
    if m < -2:
        raise ValueError("components vanish below degree -2")
    v, w, u = OP_VARS[k]
    shifts = {"vv": 0, "ww": 0, "vw": 2, "v": 1, "w": 1}
    terms: list[tuple[LaurentPoly3, tuple[int, int, int]]] = []
    for kind, dpos in (
        ("vv", (v, v)),
        ("vw", (v, w)),
        ("ww", (w, w)),
        ("v", (v,)),
        ("w", (w,)),
    ):
        degree_needed = m + len(dpos)
        if degree_needed < -shifts[kind]:
            continue
        part = _coeff_expansion(k, kind, max(degree_needed, 0))[degree_needed]
        if part:
            terms.append((part, _deriv_index(dpos)))
    if m == 0:
        terms.append((LaurentPoly3.one(), (0, 0, 0)))
    return HomogeneousOp(k, m, terms)


def verify_recursion_by_components(table: SchurTable, L: int,
                                   expansions: dict[Triple, TruncSeries3]) -> list[dict]:
    """Degree-by-degree eigen check on expansions around x = 1.

    For each entry and k, asserts
        sum_{m=-2}^{l} H_k^{(m)} phi^{(l-m)} = (j_k+1)^2 phi^{(l)}
    for every l in [-2, L].  Expansions must reach order L + 2.
    """
    checks = []
    for triple, series in sorted(expansions.items()):
        if series.order < L + 2:
            raise ValueError(f"expansion of {triple} has order {series.order}, need {L + 2}")
        parts = [series.homogeneous_part(d) for d in range(L + 3)]
        for k in (1, 2, 3):
            mu = Fraction((triple[k - 1] + 1) ** 2)
            for l in range(-2, L + 1):
                acc = LaurentPoly3.zero()
                for m in range(-2, l + 1):
                    d = l - m
                    if parts[d]:
                        acc = acc + homogeneous_component(k, m).apply(parts[d])
                target = parts[l].scale(mu) if l >= 0 else LaurentPoly3.zero()
                residual = acc - target
                rec = {
                    "check": "series-recursion",
                    "triple": list(triple),
                    "k": k,
                    "l": l,
                    "status": "pass" if not residual else "fail",
                }
                if residual:
                    rec["witness"] = repr(residual)
                checks.append(rec)
    return checks
