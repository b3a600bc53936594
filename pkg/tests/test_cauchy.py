from fractions import Fraction

import pytest

from g2schur.cauchy import (KAPPA_PREFACTOR, cauchy_truncation,
                            check_H1_relation, closedform_omega_minus,
                            closedform_omega_plus, leading_pole_coefficient,
                            master_sum, omega_from_sums, omega_initial_minus,
                            omega_initial_plus, omega_plus_from_minus,
                            pde_check, specialization_phi,
                            specialized_sum_check)
from g2schur.laurent import LaurentPoly3, x_plus_inv
from g2schur.polyj import PolyJ
from g2schur.series import TruncSeries3
from g2schur.table import enumerate_level


def brute_sum(p: PolyJ, order: int) -> TruncSeries3:
    """Brute-force label sum as a power series in (L1, L2, L3)."""
    acc = TruncSeries3(order)
    for level in range(0, 2 * order + 1, 2):
        for triple in enumerate_level(level):
            if sum(triple) <= order:
                acc = acc + TruncSeries3(
                    order, {triple: p.evaluate(triple)})
    return acc


class TestMasterSum:
    def test_constant_weight_closed_form(self):
        ms = master_sum(PolyJ.constant(1))
        assert ms.powers == (1, 1, 1)
        assert ms.numer == LaurentPoly3.one()

    @pytest.mark.parametrize("p,order", [
        (PolyJ.constant(1), 5),
        (PolyJ.variable(0), 4),
        (PolyJ.variable(1) * PolyJ.variable(2), 6),
        (PolyJ({(1, 1, 1): Fraction(1), (0, 0, 1): Fraction(-2)}), 5),
    ])
    def test_against_brute_force(self, p, order):
        assert master_sum(p).taylor(order) == brute_sum(p, order)

    def test_power_bounds(self):
        # denominator powers stay within 1 + operator order
        p = PolyJ({(2, 1, 1): Fraction(1)})
        ms = master_sum(p)
        assert all(pw <= 1 + 4 for pw in ms.powers)


class TestPoleData:
    def test_degree_zero_minus(self):
        value, order = leading_pole_coefficient(PolyJ.constant(1), "-", 0)
        assert value == KAPPA_PREFACTOR
        assert order == 2

    def test_degree_zero_plus(self):
        value, order = leading_pole_coefficient(PolyJ.constant(1), "+", 0)
        assert value == KAPPA_PREFACTOR * Fraction(-2)
        assert order == 3

    def test_pole_bounds_low_degrees(self, expansions12):
        for mvec in [(1, 0, 0), (2, 0, 0), (0, 0, 2), (1, 1, 0), (2, 2, 0)]:
            fam = expansions12.fit_family(mvec)
            for sign, bound in (("-", 2), ("+", 3)):
                _, order = leading_pole_coefficient(fam.polynomial, sign, sum(mvec))
                assert order <= bound


class TestCauchyTruncation:
    def test_lambda_zero_coefficients(self, table12):
        cm = cauchy_truncation(table12, "-", 4)
        assert cm.coefficient(0, 1) == LaurentPoly3.one()
        assert cm.coefficient(0, -1) == LaurentPoly3.one().scale(Fraction(-1))
        cp = cauchy_truncation(table12, "+", 4)
        assert cp.coefficient(0, 1) == LaurentPoly3.one()
        assert cp.coefficient(0, -1) == LaurentPoly3.one()

    def test_lambda_two_includes_higher_labels(self, table12):
        # labels with j2 + j3 = 2 reach level 6: (2,1,1), (2,0,2), (2,2,0)
        cm = cauchy_truncation(table12, "-", 2)
        assert cm.coefficient(2, 3) == (
            table12.entries[(2, 1, 1)] + table12.entries[(2, 0, 2)]
            + table12.entries[(2, 2, 0)])
        assert cm.coefficient(2, 1) == table12.entries[(0, 1, 1)]

    def test_insufficient_level_rejected(self, table8):
        with pytest.raises(ValueError, match="insufficient"):
            cauchy_truncation(table8, "-", 5)

    def test_relations(self, table12):
        checks = check_H1_relation(table12, 4)
        assert checks and all(c["status"] == "pass" for c in checks)


class TestClosedForms:
    def test_degree_zero_and_two(self):
        cm = closedform_omega_minus(4)
        assert cm.coefficient((0, 0, 0)) == KAPPA_PREFACTOR
        assert cm.coefficient((2, 0, 0)) == KAPPA_PREFACTOR * Fraction(1, 2)
        assert cm.coefficient((0, 2, 0)) == KAPPA_PREFACTOR * Fraction(1, 2)
        assert cm.coefficient((0, 0, 2)) == KAPPA_PREFACTOR * Fraction(-1, 6)
        assert cm.coefficient((4, 0, 0)) == KAPPA_PREFACTOR * Fraction(1, 3)

    def test_plus_degree_zero_and_two(self):
        cp = closedform_omega_plus(4)
        assert cp.coefficient((0, 0, 0)) == KAPPA_PREFACTOR * Fraction(-2)
        # degree-2 part is (-2 - 2) times the minus-type part
        assert cp.coefficient((2, 0, 0)) == KAPPA_PREFACTOR * Fraction(-2)
        assert cp.coefficient((0, 0, 2)) == KAPPA_PREFACTOR * Fraction(2, 3)

    def test_euler_relation(self):
        cm = closedform_omega_minus(8)
        cp = closedform_omega_plus(8)
        via = omega_plus_from_minus(cm)
        keys = set(cp.coeffs) | set(via.coeffs)
        assert all(cp.coefficient(e) == via.coefficient(e) for e in keys)

    def test_even_in_each_variable(self):
        assert closedform_omega_minus(7).all_even()
        assert closedform_omega_plus(7).all_even()

    def test_initial_conditions(self):
        order = 8
        for closed, initial in (
            (closedform_omega_minus(order), omega_initial_minus(order)),
            (closedform_omega_plus(order), omega_initial_plus(order)),
        ):
            sliced = TruncSeries3(order, {
                e: (c / KAPPA_PREFACTOR).as_fraction()
                for e, c in closed.coeffs.items() if e[2] == 0})
            assert sliced == initial


class TestPde:
    def test_closed_forms_satisfy_pdes(self):
        assert all(c["status"] == "pass" for c in pde_check(closedform_omega_minus(6)))
        assert all(c["status"] == "pass" for c in pde_check(closedform_omega_plus(6)))

    def test_mutation_detected(self):
        omega = closedform_omega_minus(4)
        omega.coeffs[(0, 0, 2)] = KAPPA_PREFACTOR * Fraction(-1, 5)
        checks = pde_check(omega)
        failed = [c for c in checks if c["status"] == "fail"]
        assert failed and "witness" in failed[0]


class TestOmegaFromSums:
    def test_matches_closed_form(self, table12, expansions12):
        om = omega_from_sums(table12, "-", 4, expansions12)
        cf = closedform_omega_minus(4)
        keys = set(om.coeffs) | set(cf.coeffs)
        assert all(om.coefficient(e) == cf.coefficient(e) for e in keys)
        assert om.all_even()

    def test_plus_matches_closed_form(self, table12, expansions12):
        om = omega_from_sums(table12, "+", 3, expansions12)
        cf = closedform_omega_plus(3)
        keys = set(om.coeffs) | set(cf.coeffs)
        assert all(om.coefficient(e) == cf.coefficient(e) for e in keys)


class TestSpecialization:
    def test_base_cases(self):
        assert specialization_phi(0, 0) == LaurentPoly3.one()
        assert specialization_phi(1, 1) == x_plus_inv(0).scale(Fraction(1, 2))

    def test_against_table(self, table12):
        for j1 in range(6):
            for j2 in range(j1 + 1):
                closed = specialization_phi(j1, j2)
                actual = table12.entries[(j1, j2, j1 - j2)].subs_unit(2)
                assert closed == actual, (j1, j2)

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            specialization_phi(1, 2)


class TestSpecializedSum:
    @pytest.mark.parametrize("j1,J", [(0, 0), (1, 1), (1, 3), (2, 2), (2, 4),
                                      (3, 3), (4, 6)])
    def test_identity_cases(self, table12, j1, J):
        rec = specialized_sum_check(j1, J, table12)
        assert rec["mode"] == "identity" and rec["status"] == "pass"

    @pytest.mark.parametrize("j1,J", [(2, 0), (3, 1), (4, 2), (1, 0), (0, 3)])
    def test_empty_cases(self, table12, j1, J):
        rec = specialized_sum_check(j1, J, table12)
        assert rec["mode"] == "empty" and rec["status"] == "pass"

    def test_J_independence(self, table12):
        # the identity right-hand side depends only on j1, so equal passes at
        # J and J + 2 pin the same sum; verify directly as well
        def row_sum(j1, J):
            total = LaurentPoly3.zero()
            for j2 in range(J + 1):
                t = (j1, j2, J - j2)
                if t in table12.entries:
                    total = total + table12.entries[t].subs_unit(2)
            return total

        assert row_sum(1, 1) == row_sum(1, 3) == row_sum(1, 5)
        assert row_sum(2, 2) == row_sum(2, 4)

    def test_level_guard(self, table8):
        with pytest.raises(ValueError):
            specialized_sum_check(4, 6, table8)
