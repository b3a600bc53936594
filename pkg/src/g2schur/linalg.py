"""Exact linear algebra over the rationals for small dense systems.

Everything here works on lists of Fraction rows.  It backs the polynomial
interpolation of series-coefficient families and the kernel computations of
the degree-graded differential operators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = list[Fraction]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Row]:
    """Basis of the right kernel of the matrix (one vector per free column)."""
    reduced, pivots = rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis: list[Row] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for prow, pcol in zip(reduced, pivots):
            vec[pcol] = -prow[free]
        basis.append(vec)
    return basis


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Row | None:
    """Solve A x = b exactly; None when the system is inconsistent.

    For underdetermined consistent systems the free variables are set to 0.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    x = [Fraction(0)] * ncols
    for prow, pcol in zip(reduced, pivots):
        if pcol == ncols:
            return None  # pivot in the augmented column
        x[pcol] = prow[ncols]
    return x


def invert_matrix(rows: Sequence[Sequence[Fraction]]) -> list[Row]:
    """Inverse of a square matrix; raises on singular input."""
    n = len(rows)
    aug = [list(map(Fraction, r)) + [Fraction(i == j) for j in range(n)]
           for i, r in enumerate(rows)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n:] for r in reduced]


def mat_vec(rows: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> Row:
    return [sum((a * b for a, b in zip(row, vec) if a and b), Fraction(0))
            for row in rows]


class RankTracker:
    """Incremental rank bookkeeping for greedy row selection."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[Row] = []     # eliminated rows
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def try_add(self, row: Sequence[Fraction]) -> bool:
        """Reduce the row against selected pivots; keep it if independent."""
        v = list(map(Fraction, row))
        for prow, pcol in zip(self._rows, self._pivots):
            if v[pcol]:
                f = v[pcol]
                v = [a - f * b for a, b in zip(v, prow)]
        pcol = next((c for c in range(self.ncols) if v[c]), None)
        if pcol is None:
            return False
        inv = 1 / v[pcol]
        self._rows.append([a * inv for a in v])
        self._pivots.append(pcol)
        return True
