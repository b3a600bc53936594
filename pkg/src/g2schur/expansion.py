"""Expansions of table entries around x = 1 and their coefficient families.

Substituting x_ij = 1 + X_ij turns every table entry into a power series
whose constant term is 1 and whose linear part vanishes.  For a fixed
monomial X12^m12 X13^m13 X23^m23 the coefficient, viewed across all labels
(j1, j2, j3), is a polynomial of total degree at most m12 + m13 + m23; this
module reconstructs those polynomials by exact interpolation over table
labels and validates them out of sample.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from .laurent import Exp, LaurentPoly3
from .linalg import RankTracker, invert_matrix, mat_vec
from .polyj import JExp, PolyJ
from .series import TruncSeries3
from .table import FalsificationError, SchurTable, Triple

CACHE_ENV = "G2SCHUR_CACHE_DIR"

#: minimum number of out-of-sample labels before a family counts as validated
VALIDATION_MARGIN = 10


def _binomial_series(e: int, order: int) -> list[Fraction]:
    """Coefficients of (1 + X)^e through X^order, e any integer."""
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(1, order + 1):
        c = c * Fraction(e - k + 1, k)
        out.append(c)
    return out


def expand_entry(poly: LaurentPoly3, order: int) -> TruncSeries3:
    """Substitute x_ij = 1 + X_ij, truncating at total degree ``order``."""
    cache: dict[int, list[Fraction]] = {}

    def binom(e: int) -> list[Fraction]:
        if e not in cache:
            cache[e] = _binomial_series(e, order)
        return cache[e]

    acc: dict[Exp, Fraction] = {}
    for (e1, e2, e3), coeff in poly.terms.items():
        b1, b2, b3 = binom(e1), binom(e2), binom(e3)
        for k1 in range(order + 1):
            c1 = b1[k1]
            if not c1:
                continue
            c1 = coeff * c1
            for k2 in range(order - k1 + 1):
                c2 = b2[k2]
                if not c2:
                    continue
                c2 = c1 * c2
                for k3 in range(order - k1 - k2 + 1):
                    c3 = b3[k3]
                    if not c3:
                        continue
                    key = (k1, k2, k3)
                    acc[key] = acc.get(key, Fraction(0)) + c2 * c3
    return TruncSeries3(order, acc)


@dataclass
class PhiExpansion:
    """Series expansion of one table entry, with its structural checks."""

    triple: Triple
    series: TruncSeries3

    def __post_init__(self):
        if self.series.coefficient((0, 0, 0)) != 1:
            raise FalsificationError(
                f"expansion of {self.triple} has constant term != 1")
        if self.series.order >= 1 and self.series.homogeneous_part(1):
            raise FalsificationError(
                f"expansion of {self.triple} has a nonvanishing linear part")


def expand_phi(table: SchurTable, triple: Triple, order: int) -> PhiExpansion:
    return PhiExpansion(triple, expand_entry(table.entries[triple], order))


def _monomials_upto(degree: int) -> list[JExp]:
    out = []
    for a in range(degree + 1):
        for b in range(degree - a + 1):
            for c in range(degree - a - b + 1):
                out.append((a, b, c))
    out.sort()
    return out


@dataclass
class CoeffFamily:
    """Closed-form coefficient of one series monomial as a polynomial in labels."""

    mvec: Exp
    polynomial: PolyJ
    fit_triples: list[Triple]
    validated_on: int
    unvalidated: bool = False

    def serialize(self) -> dict:
        return {
            "mvec": list(self.mvec),
            "poly": [
                {"jexp": list(e), "coeff": str(self.polynomial.terms[e])}
                for e in sorted(self.polynomial.terms)
            ],
        }


class ExpansionSet:
    """Expansions of every table entry at a fixed order, with family fitting.

    Interpolation labels are chosen greedily in enumeration order until the
    monomial-evaluation matrix reaches full rank; every remaining table label
    is then used for out-of-sample validation.  Expansions can be cached on
    disk (keyed by table checksum and order) via the G2SCHUR_CACHE_DIR
    environment variable.
    """

    def __init__(self, table: SchurTable, order: int):
        self.table = table
        self.order = order
        self.expansions: dict[Triple, TruncSeries3] = self._load_or_expand()
        self._fit_data: dict[int, tuple[list[Triple], list[list[Fraction]]]] = {}
        self._families: dict[Exp, CoeffFamily] = {}

    # -- expansion cache --------------------------------------------------

    def _cache_path(self) -> str | None:
        root = os.environ.get(CACHE_ENV)
        if not root:
            return None
        os.makedirs(root, exist_ok=True)
        return os.path.join(
            root, f"expansions-{self.table.checksum()[:16]}-N{self.order}.json")

    def _load_or_expand(self) -> dict[Triple, TruncSeries3]:
        path = self._cache_path()
        if path and os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    raw = json.load(fh)
                out = {}
                for rec in raw:
                    series = TruncSeries3(self.order, {
                        tuple(e): Fraction(c) for e, c in rec["terms"]})
                    out[tuple(rec["triple"])] = series
                if set(out) == set(self.table.entries):
                    return out
            except (OSError, ValueError, KeyError, json.JSONDecodeError):
                pass  # fall through and recompute
        out = {
            t: expand_phi(self.table, t, self.order).series
            for t in self.table.triples()
        }
        if path:
            payload = [
                {"triple": list(t),
                 "terms": [[list(e), str(c)] for e, c in sorted(s.terms.items())]}
                for t, s in sorted(out.items())
            ]
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)
            os.replace(tmp, path)
        return out

    # -- family fitting -----------------------------------------------------

    def coefficient(self, triple: Triple, mvec: Exp) -> Fraction:
        return self.expansions[triple].coefficient(mvec)

    def _fit_basis(self, degree: int) -> tuple[list[Triple], list[list[Fraction]]]:
        """Greedily selected labels and the inverted fit matrix for one degree."""
        if degree in self._fit_data:
            return self._fit_data[degree]
        monomials = _monomials_upto(degree)
        tracker = RankTracker(len(monomials))
        chosen: list[Triple] = []
        rows: list[list[Fraction]] = []
        for t in self.table.triples():
            row = [Fraction(t[0]**a * t[1]**b * t[2]**c) for (a, b, c) in monomials]
            if tracker.try_add(row):
                chosen.append(t)
                rows.append(row)
                if tracker.rank == len(monomials):
                    break
        if tracker.rank < len(monomials):
            raise ValueError(
                f"table level {self.table.max_level} provides only rank "
                f"{tracker.rank} of {len(monomials)} for degree {degree}")
        self._fit_data[degree] = (chosen, invert_matrix(rows))
        return self._fit_data[degree]

    def fit_family(self, mvec: Exp) -> CoeffFamily:
        mvec = tuple(mvec)
        if mvec in self._families:
            return self._families[mvec]
        degree = sum(mvec)
        if self.order < degree:
            raise ValueError(f"expansions of order {self.order} cannot reach {mvec}")
        monomials = _monomials_upto(degree)
        chosen, inverse = self._fit_basis(degree)
        rhs = [self.coefficient(t, mvec) for t in chosen]
        coeffs = mat_vec(inverse, rhs)
        poly = PolyJ({m: c for m, c in zip(monomials, coeffs) if c})

        chosen_set = set(chosen)
        validated = 0
        for t in self.table.triples():
            if t in chosen_set:
                continue
            if poly.evaluate(t) != self.coefficient(t, mvec):
                raise FalsificationError(
                    f"degree bound violated for {mvec}: no polynomial of degree "
                    f"<= {degree} matches the coefficients (label {t})")
            validated += 1
        family = CoeffFamily(
            mvec=mvec,
            polynomial=poly,
            fit_triples=chosen,
            validated_on=validated,
            unvalidated=validated < VALIDATION_MARGIN,
        )
        self._families[mvec] = family
        return family


def fit_coeff_family(mvec: Exp, table: SchurTable,
                     expansions: ExpansionSet | None = None) -> CoeffFamily:
    """Convenience wrapper fitting a single family from a table."""
    if expansions is None:
        expansions = ExpansionSet(table, sum(mvec))
    return expansions.fit_family(mvec)
