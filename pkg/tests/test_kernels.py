from fractions import Fraction

import pytest

from g2schur.diffops import homogeneous_component
from g2schur.kernels import (action_check, common_kernel, kernel_H1,
                             leading_term_check, pair_kernel_vector, pbasis,
                             pbasis_laurent, triple_kernel)
from g2schur.laurent import LaurentPoly3

mono = LaurentPoly3.monomial


class TestProductBasis:
    def test_small_elements(self):
        assert pbasis(0, 0, 0) == LaurentPoly3.one()
        assert pbasis(1, 1, 0) == mono((1, 0, 0)) - mono((0, 1, 0))
        assert pbasis(1, 0, 1) == mono((1, 0, 0)) + mono((0, 1, 0))
        assert pbasis(2, 1, 1) == mono((2, 0, 0)) - mono((0, 2, 0))

    def test_homogeneous_and_polynomial(self):
        for m in range(6):
            for k in range(m + 1):
                for l in range(m - k + 1):
                    p = pbasis(m, k, l)
                    assert p.is_polynomial()
                    assert all(sum(e) == m for e in p.terms)

    def test_raised_indices_are_laurent(self):
        p = pbasis_laurent(2, 2, 1)  # k + l > m
        assert not p.is_polynomial()

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            pbasis(1, 1, 1)

    def test_basis_count_matches_dimension(self):
        for m in range(7):
            count = sum(1 for k in range(m + 1) for l in range(m - k + 1))
            assert count == (m + 1) * (m + 2) // 2


class TestKernelH1:
    @pytest.mark.parametrize("m,dim", [(0, 1), (1, 1), (2, 2), (3, 2), (5, 3)])
    def test_dimensions(self, m, dim):
        info = kernel_H1(m)
        assert info["dim"] == dim == m // 2 + 1

    def test_explicit_span_degree_two(self):
        # kernel at degree 2 is spanned by X23^2 and X12^2 - X13^2
        op = homogeneous_component(1, -2)
        assert not op.apply(mono((0, 0, 2)))
        assert not op.apply(mono((2, 0, 0)) - mono((0, 2, 0)))

    def test_diagonalization_eigenvalue(self):
        # X12 X13 H1t on P_(1,1,0) has eigenvalue l(l+1) - k(k+1) = -2
        op = homogeneous_component(1, -2)
        p = pbasis(1, 1, 0)
        assert mono((1, 1, 0)) * op.apply(p) == p.scale(Fraction(-2))
        q = pbasis(1, 0, 1)
        assert mono((1, 1, 0)) * op.apply(q) == q.scale(Fraction(2))


class TestActionFormulas:
    @pytest.mark.parametrize("m,l", [(0, 0), (1, 0), (2, 0), (2, 1), (3, 1),
                                     (4, 0), (4, 2), (5, 2)])
    def test_action(self, m, l):
        assert all(c["status"] == "pass" for c in action_check(m, l))

    def test_degenerate_cancellation(self):
        # at m = l = 0 the right-hand side collapses to zero
        op2 = homogeneous_component(2, -2)
        assert not op2.apply(LaurentPoly3.one())
        rhs = (LaurentPoly3.one().mul_monomial((1, 0, -1), Fraction(2))
               + pbasis_laurent(0, 1, 0).scale(Fraction(-1))
               + pbasis_laurent(0, 0, 1).scale(Fraction(-1)))
        assert not rhs

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            action_check(2, 2)


class TestLeadingTerms:
    def test_empty_case(self):
        checks = leading_term_check(0, 0)
        assert all(c["status"] == "pass" and c["case"] == "empty" for c in checks)

    def test_generic_case_values(self):
        checks = leading_term_check(3, 0)
        for c in checks:
            assert c["status"] == "pass"
            assert c["expected"] == [[0, 0, 1], "12"]

    def test_diagonal_case_signs(self):
        checks = {c["check"]: c for c in leading_term_check(2, 1)}
        assert checks["H2-leading"]["expected"] == [[0, 0, 0], "6"]
        assert checks["H3-leading"]["expected"] == [[0, 0, 0], "-6"]
        assert all(c["status"] == "pass" for c in checks.values())

    @pytest.mark.parametrize("m", range(7))
    def test_all_diagonals(self, m):
        for l in range(m // 2 + 1):
            assert all(c["status"] == "pass" for c in leading_term_check(m, l))


class TestCommonKernels:
    def test_even_degree_vectors(self):
        assert pair_kernel_vector((1, 2), 1) == \
            mono((2, 0, 0)) - mono((0, 2, 0)) - mono((0, 0, 2))
        assert pair_kernel_vector((1, 3), 1) == \
            mono((2, 0, 0)) - mono((0, 2, 0)) + mono((0, 0, 2))

    @pytest.mark.parametrize("pair", [(1, 2), (1, 3)])
    @pytest.mark.parametrize("m", range(7))
    def test_dimension_pattern(self, pair, m):
        res = common_kernel(pair, m)
        assert res["dim"] == (1 if m % 2 == 0 else 0)
        if m % 2 == 0:
            assert res["spanned_by_displayed_vector"]

    def test_displayed_vectors_annihilated(self):
        for pair in ((1, 2), (1, 3)):
            ops = [homogeneous_component(1, -2),
                   homogeneous_component(pair[1], -2)]
            for n in range(1, 5):
                vec = pair_kernel_vector(pair, n)
                for op in ops:
                    assert not op.apply(vec)


class TestTripleKernel:
    @pytest.mark.parametrize("m,dim", [(0, 1), (1, 0), (2, 0), (3, 0), (7, 0)])
    def test_dimensions(self, m, dim):
        assert triple_kernel(m) == dim

    def test_degree_two_witness(self):
        # the pair-(1,2) vector escapes the third operator's kernel
        vec = pair_kernel_vector((1, 2), 1)
        image = homogeneous_component(3, -2).apply(vec)
        assert image == LaurentPoly3.constant(Fraction(-12))
