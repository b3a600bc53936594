"""Kernels of the degree -2 graded operators on homogeneous polynomials.

The product basis

    P_{m,k,l} = X23^m  P_k((X12 - X13)/X23)  P_l((X12 + X13)/X23),  k + l <= m

(P_n = Legendre polynomials) spans the degree-m homogeneous polynomials and
diagonalizes X12 X13 H1t where H1t is the degree -2 component of the first
operator: in the variables U = (X12-X13)/X23, V = (X12+X13)/X23 the product
X12 X13 H1t becomes a difference of two Legendre differential operators, so
P_{m,k,l} is an eigenvector with eigenvalue l(l+1) - k(k+1).  The kernel of
H1t at degree m is therefore spanned by the diagonal elements P_{m,l,l}.

The remaining two operators act on the diagonal elements by an explicit
three-term formula; stacked exact nullspaces give the pairwise common
kernels (one-dimensional in even degree, trivial in odd degree) and the
triviality of the triple kernel in every positive degree.  Nullspaces are
computed by exact Gaussian elimination in the monomial basis; the product
basis route serves as the independent cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .diffops import HomogeneousOp, homogeneous_component
from .laurent import Exp, LaurentPoly3
from .linalg import nullspace, rref
from .table import FalsificationError
from .univariate import legendre


def _binomial_pm(k: int, sign: int) -> LaurentPoly3:
    """(X12 + sign*X13)^k as a trivariate polynomial."""
    out = {}
    for i in range(k + 1):
        out[(k - i, i, 0)] = Fraction(math.comb(k, i) * (sign ** i))
    return LaurentPoly3(out)


def pbasis_laurent(m: int, k: int, l: int) -> LaurentPoly3:
    """X23^m P_k((X12-X13)/X23) P_l((X12+X13)/X23), Laurent in general."""
    pk = legendre(k)
    pl = legendre(l)
    acc = LaurentPoly3.zero()
    for i, ci in enumerate(pk.coeffs):
        if not ci:
            continue
        left = _binomial_pm(i, -1)
        for j, cj in enumerate(pl.coeffs):
            if not cj:
                continue
            term = (left * _binomial_pm(j, +1)).mul_monomial(
                (0, 0, m - i - j), ci * cj)
            acc = acc + term
    return acc


def pbasis(m: int, k: int, l: int) -> LaurentPoly3:
    """Product-basis element; negative powers of X23 must cancel."""
    if k + l > m:
        raise ValueError("need k + l <= m")
    out = pbasis_laurent(m, k, l)
    if not out.is_polynomial():
        raise FalsificationError(
            f"product basis element ({m},{k},{l}) failed to be polynomial",
            witness=out)
    return out


def _monomials(m: int) -> list[Exp]:
    return sorted(
        (a, b, m - a - b) for a in range(m + 1) for b in range(m - a + 1))


def _operator_rows(ops: list[HomogeneousOp], m: int,
                   monomials: list[Exp]) -> list[list[Fraction]]:
    """Stacked matrix rows of the operators on degree-m monomials.

    Columns follow ``monomials``; rows are indexed by the Laurent monomials
    appearing in any image, one block per operator.
    """
    images = [[op.apply(LaurentPoly3.monomial(e)) for e in monomials] for op in ops]
    rows: list[list[Fraction]] = []
    for block in images:
        targets = sorted({e for img in block for e in img.terms})
        for tgt in targets:
            rows.append([img.terms.get(tgt, Fraction(0)) for img in block])
    return rows


def _vector_of(poly: LaurentPoly3, monomials: list[Exp]) -> list[Fraction]:
    vec = [poly.terms.get(e, Fraction(0)) for e in monomials]
    leftover = set(poly.terms) - set(monomials)
    if leftover:
        raise ValueError(f"polynomial leaves the degree space: {sorted(leftover)}")
    return vec


def _span_contains(basis: list[list[Fraction]], vec: list[Fraction]) -> bool:
    if not any(vec):
        return True
    if not basis:
        return False
    rows = [list(r) for r in basis]
    before, _ = rref(rows)
    after, _ = rref(rows + [list(vec)])
    return len(after) == len(before)


def kernel_H1(m: int) -> dict:
    """Exact kernel of the first graded operator at degree m, both routes.

    Computes the monomial-basis nullspace, asserts it matches the span of the
    diagonal product-basis elements, and verifies the diagonalization of
    X12 X13 H1t on every P_{m,k,l} with eigenvalue l(l+1) - k(k+1).
    """
    op = homogeneous_component(1, -2)
    monomials = _monomials(m)
    rows = _operator_rows([op], m, monomials)
    null = nullspace(rows, len(monomials))
    claimed = [pbasis(m, l, l) for l in range(m // 2 + 1)]
    if len(null) != len(claimed):
        raise FalsificationError(
            f"kernel dimension at degree {m}: got {len(null)}, "
            f"expected {m // 2 + 1}")
    for vec in claimed:
        if op.apply(vec):
            raise FalsificationError(
                f"claimed kernel element P_({m},l,l) not annihilated", witness=vec)
    claimed_rows = [_vector_of(v, monomials) for v in claimed]
    for vec in null:
        if not _span_contains(claimed_rows, vec):
            raise FalsificationError(
                f"computed kernel vector outside the claimed span at degree {m}")
    x12x13 = LaurentPoly3.monomial((1, 1, 0))
    for k in range(m + 1):
        for l in range(m - k + 1):
            p = pbasis(m, k, l)
            expect = p.scale(Fraction(l * (l + 1) - k * (k + 1)))
            if x12x13 * op.apply(p) != expect:
                raise FalsificationError(
                    f"diagonalization failed on P_({m},{k},{l})")
    return {
        "degree": m,
        "dim": len(null),
        "basis": [f"P_({m},{l},{l})" for l in range(m // 2 + 1)],
    }


def action_check(m: int, l: int) -> list[dict]:
    """Three-term action of the second and third operators on P_{m,l,l}.

    X12 X23 H2t P = (m+1)[(m+2l+2) X12/X23 P - (l+1) P_{m,l+1,l} - (l+1) P_{m,l,l+1}]
    X13 X23 H3t P = (m+1)[(m+2l+2) X13/X23 P + (l+1) P_{m,l+1,l} - (l+1) P_{m,l,l+1}]

    The raised-index symbols are expanded by the defining formula even when
    l+1+l exceeds m (they are then Laurent, not polynomial).
    """
    if 2 * l > m:
        raise ValueError("need 2l <= m")
    p = pbasis(m, l, l)
    p_up_left = pbasis_laurent(m, l + 1, l)
    p_up_right = pbasis_laurent(m, l, l + 1)
    checks = []
    for k, front in ((2, (1, 0, 1)), (3, (0, 1, 1))):
        lhs = LaurentPoly3.monomial(front) * homogeneous_component(k, -2).apply(p)
        shifted = p.mul_monomial((front[0], front[1], -1), Fraction(m + 2 * l + 2))
        sign_left = Fraction(-(l + 1)) if k == 2 else Fraction(l + 1)
        rhs = (shifted
               + p_up_left.scale(sign_left)
               + p_up_right.scale(Fraction(-(l + 1)))).scale(Fraction(m + 1))
        checks.append({
            "check": f"H{k}-action",
            "m": m,
            "l": l,
            "status": "pass" if lhs == rhs else "fail",
        })
    return checks


def _odd_double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def leading_term_check(m: int, l: int) -> list[dict]:
    """Lexicographically largest term of H2t / H3t applied to P_{m,l,l}.

    Under the order x12 > x13 > x23 the leading term is
      ((2l-1)!!)^2/(l!)^2 (m+1)(m-2l) X12^{2l} X23^{m-2l-2}     for m > 2l,
      +- ((2l+1)!!)^2/(l!)^2 * 2l^2/(4l^2-1) X12^{2l-2}          for m = 2l > 0
    (plus sign for the second operator, minus for the third), and the image
    is empty for m = l = 0.
    """
    if 2 * l > m:
        raise ValueError("need 2l <= m")
    p = pbasis(m, l, l)
    checks = []
    for k in (2, 3):
        image = homogeneous_component(k, -2).apply(p)
        if m == 0:
            status = "pass" if not image else "fail"
            checks.append({"check": f"H{k}-leading", "m": m, "l": l,
                           "case": "empty", "status": status})
            continue
        if m > 2 * l:
            coeff = Fraction(
                _odd_double_factorial(2 * l - 1) ** 2 * (m + 1) * (m - 2 * l),
                math.factorial(l) ** 2)
            expected = ((2 * l, 0, m - 2 * l - 2), coeff)
            case = "m>2l"
        else:
            coeff = Fraction(
                _odd_double_factorial(2 * l + 1) ** 2 * 2 * l * l,
                math.factorial(l) ** 2 * (4 * l * l - 1))
            if k == 3:
                coeff = -coeff
            expected = ((2 * l - 2, 0, 0), coeff)
            case = "m=2l"
        actual = image.lex_leading() if image else None
        checks.append({
            "check": f"H{k}-leading",
            "m": m,
            "l": l,
            "case": case,
            "status": "pass" if actual == expected else "fail",
            "expected": [list(expected[0]), str(expected[1])],
            "actual": None if actual is None else [list(actual[0]), str(actual[1])],
        })
    return checks


def pair_kernel_vector(pair: tuple[int, int], n: int) -> LaurentPoly3:
    """The displayed spanning vector of the even-degree pairwise kernel.

    For degree 2n: sum_l s^(n-l) (2l+1)/(n+l+1) C(2n, n-l) P_{2n,l,l} with
    s = -1 for the pair (1,2) and s = +1 for (1,3).
    """
    if pair not in ((1, 2), (1, 3)):
        raise ValueError("pair must be (1,2) or (1,3)")
    acc = LaurentPoly3.zero()
    for l in range(n + 1):
        c = Fraction((2 * l + 1) * math.comb(2 * n, n - l), n + l + 1)
        if pair == (1, 2) and (n - l) % 2:
            c = -c
        acc = acc + pbasis(2 * n, l, l).scale(c)
    return acc


def common_kernel(pair: tuple[int, int], m: int) -> dict:
    """Exact common kernel of the first operator with the second or third.

    Dimension 1 at even degree (spanned by the displayed vector), 0 at odd
    degree; stacked-matrix nullspace cross-checked against membership.
    """
    if pair not in ((1, 2), (1, 3)):
        raise ValueError("pair must be (1,2) or (1,3)")
    ops = [homogeneous_component(1, -2), homogeneous_component(pair[1], -2)]
    monomials = _monomials(m)
    rows = _operator_rows(ops, m, monomials)
    null = nullspace(rows, len(monomials))
    expected_dim = 1 if m % 2 == 0 else 0
    if len(null) != expected_dim:
        raise FalsificationError(
            f"pair {pair} kernel at degree {m}: dim {len(null)}, expected {expected_dim}")
    result = {"pair": list(pair), "degree": m, "dim": len(null)}
    if m % 2 == 0:
        vec = pair_kernel_vector(pair, m // 2)
        for op in ops:
            if op.apply(vec):
                raise FalsificationError(
                    f"displayed vector not annihilated for pair {pair}, degree {m}")
        if not _span_contains([_vector_of(vec, monomials)], null[0]):
            raise FalsificationError(
                f"kernel at degree {m} not spanned by the displayed vector")
        result["spanned_by_displayed_vector"] = True
    return result


def triple_kernel(m: int) -> int:
    """Dimension of the common kernel of all three operators at degree m.

    Must be 1 for m = 0 (constants) and 0 for every m >= 1.
    """
    ops = [homogeneous_component(k, -2) for k in (1, 2, 3)]
    monomials = _monomials(m)
    rows = _operator_rows(ops, m, monomials)
    dim = len(nullspace(rows, len(monomials)))
    expected = 1 if m == 0 else 0
    if dim != expected:
        raise FalsificationError(
            f"triple kernel at degree {m}: dim {dim}, expected {expected}")
    return dim
