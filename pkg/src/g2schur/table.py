"""Genus-two Schur polynomial table built by the Pieri recursion.

A triple of nonnegative integers (j1, j2, j3) is admissible when it satisfies
the triangle inequality |j1 - j2| <= j3 <= j1 + j2 and j1 + j2 + j3 is even.
The table holds one Laurent polynomial per admissible triple up to a level
(level = j1 + j2 + j3), constructed level by level from the three Pieri-type
recursions

    (x12 + 1/x12) phi_{j1,j2,j3} = sum_{a,b} K_{a,b}(j1,j2,j3) phi_{j1+a,j2+b,j3}
    (x13 + 1/x13) phi_{j1,j2,j3} = sum_{a,b} K_{a,b}(j1,j3,j2) phi_{j1+a,j2,j3+b}
    (x23 + 1/x23) phi_{j1,j2,j3} = sum_{a,b} K_{a,b}(j2,j3,j1) phi_{j1,j2+a,j3+b}

with phi_{0,0,0} = 1 and phi = 0 on non-admissible triples.  Each new entry is
solved from one predecessor equation and every other applicable predecessor
equation is then asserted exactly, so an inconsistent system cannot slip
through construction.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Iterable

from .laurent import Exp, LaurentPoly3, x_plus_inv

Triple = tuple[int, int, int]

FORMAT_VERSION = 1


class TableError(Exception):
    """Failure while constructing, saving or loading a table."""


class FalsificationError(AssertionError):
    """An exactly-provable identity failed; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def is_admissible(j1: int, j2: int, j3: int) -> bool:
    """Triangle inequality plus even total parity; negatives are rejected."""
    if j1 < 0 or j2 < 0 or j3 < 0:
        return False
    if (j1 + j2 + j3) % 2:
        return False
    return abs(j1 - j2) <= j3 <= j1 + j2


def enumerate_level(level: int) -> list[Triple]:
    """All admissible triples with j1 + j2 + j3 == level, in lexicographic order."""
    if level < 0 or level % 2:
        return []
    out = []
    for j1 in range(level + 1):
        for j2 in range(level - j1 + 1):
            j3 = level - j1 - j2
            if is_admissible(j1, j2, j3):
                out.append((j1, j2, j3))
    return out


def enumerate_through(max_level: int) -> list[Triple]:
    out: list[Triple] = []
    for level in range(0, max_level + 1, 2):
        out.extend(enumerate_level(level))
    return out


def pieri_coeff(a: int, b: int, j1: int, j2: int, j3: int) -> Fraction:
    """Recursion coefficient K_{a,b}(j1,j2,j3) for a, b in {-1,+1}.

    Vanishes exactly when the target triple (j1+a, j2+b, j3) is non-admissible.
    """
    if a not in (-1, 1) or b not in (-1, 1):
        raise ValueError("a and b must be +1 or -1")
    num = (a * j1 + b * j2 + j3 + a + b + 2) * (a * j1 + b * j2 - j3 + a + b)
    return Fraction(a * b * num, 4 * (j1 + 1) * (j2 + 1))


# The three recursions, normalized as (generator index, coefficient arguments,
# target increment).  For equation ``eq`` based at (j1,j2,j3):
#   eq=0: variable x12, K args (j1,j2,j3), target (j1+a, j2+b, j3)
#   eq=1: variable x13, K args (j1,j3,j2), target (j1+a, j2,   j3+b)
#   eq=2: variable x23, K args (j2,j3,j1), target (j1,   j2+a, j3+b)

def _pieri_terms(eq: int, base: Triple) -> list[tuple[Triple, Fraction]]:
    """Right-hand-side (triple, coefficient) pairs of one recursion at ``base``."""
    j1, j2, j3 = base
    out = []
    for a in (1, -1):
        for b in (1, -1):
            if eq == 0:
                coeff = pieri_coeff(a, b, j1, j2, j3)
                target = (j1 + a, j2 + b, j3)
            elif eq == 1:
                coeff = pieri_coeff(a, b, j1, j3, j2)
                target = (j1 + a, j2, j3 + b)
            else:
                coeff = pieri_coeff(a, b, j2, j3, j1)
                target = (j1, j2 + a, j3 + b)
            out.append((target, coeff))
    return out


_EQ_VAR = {0: 0, 1: 1, 2: 2}  # equation index -> variable position


class SchurTable:
    """Immutable map from admissible triples to their Laurent polynomials."""

    def __init__(self, max_level: int, entries: dict[Triple, LaurentPoly3],
                 provenance: dict[Triple, str] | None = None):
        self.max_level = max_level
        self.entries = entries
        self.provenance = provenance or {}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurTable):
            return NotImplemented
        return self.max_level == other.max_level and self.entries == other.entries

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, triple: Triple) -> LaurentPoly3:
        """Table entry; the zero polynomial for non-admissible or out-of-range triples."""
        return self.entries.get(triple, LaurentPoly3.zero())

    def triples(self) -> Iterable[Triple]:
        return enumerate_through(self.max_level)

    # -- verification helpers -------------------------------------------

    def pieri_residual(self, eq: int, base: Triple) -> LaurentPoly3:
        """LHS minus RHS of recursion ``eq`` based at ``base`` (zero iff it holds)."""
        lhs = x_plus_inv(_EQ_VAR[eq]) * self.entry(base)
        rhs = LaurentPoly3.zero()
        for target, coeff in _pieri_terms(eq, base):
            if coeff and is_admissible(*target):
                rhs = rhs + self.entry(target).scale(coeff)
        return lhs - rhs

    # -- persistence -----------------------------------------------------

    def canonical_json(self) -> str:
        payload = {
            "format_version": FORMAT_VERSION,
            "max_level": self.max_level,
            "entries": [
                {
                    "triple": list(t),
                    "poly": [
                        {"exp": list(e), "coeff": str(c)}
                        for e, c in self.entries[t].sorted_terms()
                    ],
                }
                for t in sorted(self.entries)
            ],
        }
        return json.dumps(payload, indent=1) + "\n"

    def checksum(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.canonical_json())

    @staticmethod
    def load(path) -> "SchurTable":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise TableError(f"unreadable table file: {exc}") from exc
        if not isinstance(payload, dict) or payload.get("format_version") != FORMAT_VERSION:
            raise TableError(
                f"format version mismatch: expected {FORMAT_VERSION}, "
                f"got {payload.get('format_version')!r}")
        max_level = payload.get("max_level")
        if not isinstance(max_level, int) or max_level < 0 or max_level % 2:
            raise TableError(f"invalid max_level: {max_level!r}")
        entries: dict[Triple, LaurentPoly3] = {}
        for rec in payload.get("entries", []):
            t = tuple(rec["triple"])
            if len(t) != 3 or not all(isinstance(v, int) for v in t):
                raise TableError(f"malformed triple {rec['triple']!r}")
            if not is_admissible(*t):
                raise TableError(f"non-admissible triple {t} in table file")
            if sum(t) > max_level:
                raise TableError(f"triple {t} beyond declared max_level {max_level}")
            if t in entries:
                raise TableError(f"duplicate triple {t}")
            terms: dict[Exp, Fraction] = {}
            for term in rec["poly"]:
                e = tuple(term["exp"])
                if len(e) != 3 or not all(isinstance(v, int) for v in e):
                    raise TableError(f"malformed exponent {term['exp']!r}")
                try:
                    c = Fraction(term["coeff"])
                except (ValueError, ZeroDivisionError, TypeError) as exc:
                    raise TableError(f"malformed rational {term['coeff']!r}") from exc
                if not c:
                    raise TableError(f"stored zero coefficient at {t}, {e}")
                if e in terms:
                    raise TableError(f"duplicate exponent {e} in entry {t}")
                terms[e] = c
            entries[t] = LaurentPoly3(terms)
        expected = set(enumerate_through(max_level))
        missing = expected - set(entries)
        if missing:
            raise TableError(f"incomplete table: missing {sorted(missing)[0]} "
                             f"and {len(missing) - 1} more")
        extra = set(entries) - expected
        if extra:
            raise TableError(f"unexpected triples present: {sorted(extra)[:3]}")
        unit = entries[(0, 0, 0)]
        if unit != LaurentPoly3.one():
            raise TableError("entry (0,0,0) is not the constant 1")
        for t, poly in entries.items():
            if poly.eval_ones() != 1:
                raise TableError(f"entry {t} does not evaluate to 1 at (1,1,1)")
        return SchurTable(max_level, entries)


def solve_table(max_level: int) -> SchurTable:
    """Build the table through ``max_level`` by level induction.

    Each new entry at level N+2 is solved from the first admissible
    predecessor among (j1-1,j2-1,j3), (j1-1,j2,j3-1), (j1,j2-1,j3-1) and the
    remaining applicable predecessor equations are asserted exactly.
    """
    if max_level < 0 or max_level % 2:
        raise ValueError("max_level must be a nonnegative even integer")
    entries: dict[Triple, LaurentPoly3] = {(0, 0, 0): LaurentPoly3.one()}
    provenance: dict[Triple, str] = {(0, 0, 0): "initial"}
    table = SchurTable(max_level, entries, provenance)
    for level in range(2, max_level + 1, 2):
        for triple in enumerate_level(level):
            j1, j2, j3 = triple
            candidates = [
                (0, (j1 - 1, j2 - 1, j3)),
                (1, (j1 - 1, j2, j3 - 1)),
                (2, (j1, j2 - 1, j3 - 1)),
            ]
            usable = [(eq, p) for eq, p in candidates if is_admissible(*p)]
            if not usable:
                raise TableError(f"no admissible predecessor for {triple}")
            eq, pred = usable[0]
            lhs = x_plus_inv(_EQ_VAR[eq]) * entries[pred]
            known = LaurentPoly3.zero()
            lead_coeff = None
            for target, coeff in _pieri_terms(eq, pred):
                if not coeff or not is_admissible(*target):
                    continue
                if target == triple:
                    lead_coeff = coeff
                else:
                    known = known + entries[target].scale(coeff)
            if not lead_coeff:
                raise TableError(f"vanishing leading coefficient solving {triple}")
            entries[triple] = (lhs - known).scale(1 / lead_coeff)
            provenance[triple] = f"eq{eq + 1}@{pred}"
            for other_eq, other_pred in usable[1:]:
                residual = table.pieri_residual(other_eq, other_pred)
                if residual:
                    raise FalsificationError(
                        f"inconsistent recursion at {triple}: equation "
                        f"{other_eq + 1} based at {other_pred} fails",
                        witness=residual)
    return table


def leading_term(poly: LaurentPoly3, triple: Triple) -> tuple[Fraction, tuple[int, int, int]]:
    """Top total-degree part of a table entry, verified to be a single monomial.

    Returns (coefficient, exponents of (x12, x13, x23)); the exponents must be
    ((j1+j2-j3)/2, (j1-j2+j3)/2, (-j1+j2+j3)/2).
    """
    j1, j2, j3 = triple
    top = poly.top_part()
    if len(top.terms) != 1:
        raise FalsificationError(
            f"top degree part of entry {triple} is not a single monomial",
            witness=top)
    (exp, coeff), = top.terms.items()
    expected = ((j1 + j2 - j3) // 2, (j1 - j2 + j3) // 2, (-j1 + j2 + j3) // 2)
    if exp != expected:
        raise FalsificationError(
            f"leading exponents of entry {triple}: got {exp}, expected {expected}",
            witness=top)
    return coeff, exp


# Positions of the variable pairs under an index permutation sigma:
# the pair {i, j} of the permuted entry lands on the pair {sigma(i), sigma(j)}.
_PAIR_POS = {frozenset({1, 2}): 0, frozenset({1, 3}): 1, frozenset({2, 3}): 2}
_POS_PAIR = {0: (1, 2), 1: (1, 3), 2: (2, 3)}


def s3_check(table: SchurTable, sigma: tuple[int, int, int]) -> tuple[bool, Triple | None]:
    """Check equivariance under a simultaneous permutation of labels and variables.

    ``sigma`` maps index i to sigma[i-1].  Returns (ok, witness_triple).
    """
    pos_map = []
    for k in range(3):
        i, j = _POS_PAIR[k]
        pos_map.append(_PAIR_POS[frozenset({sigma[i - 1], sigma[j - 1]})])
    pos_map = tuple(pos_map)
    for triple in table.triples():
        permuted_labels = tuple(triple[sigma[i] - 1] for i in range(3))
        candidate = table.entry(permuted_labels).permute(pos_map)
        if candidate != table.entries[triple]:
            return False, triple
    return True, None
