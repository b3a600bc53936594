import json
from fractions import Fraction

import pytest

from g2schur.laurent import LaurentPoly3, x_plus_inv
from g2schur.table import (FalsificationError, SchurTable, TableError,
                           enumerate_level, is_admissible, leading_term,
                           pieri_coeff, s3_check, solve_table)


class TestAdmissibility:
    def test_examples(self):
        assert is_admissible(0, 0, 0)
        assert not is_admissible(1, 1, 1)   # parity
        assert is_admissible(2, 1, 1)
        assert not is_admissible(3, 1, 1)   # triangle
        assert not is_admissible(-1, 1, 0)  # negatives rejected

    def test_enumerate_levels(self):
        assert enumerate_level(0) == [(0, 0, 0)]
        assert enumerate_level(2) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
        assert enumerate_level(4) == [
            (0, 2, 2), (1, 1, 2), (1, 2, 1), (2, 0, 2), (2, 1, 1), (2, 2, 0)]
        assert enumerate_level(1) == []
        assert enumerate_level(-2) == []

    def test_level_sizes(self):
        # level 2n holds (n+1)(n+2)/2 labels
        for n in range(8):
            assert len(enumerate_level(2 * n)) == (n + 1) * (n + 2) // 2


class TestPieriCoeff:
    def test_frozen_values(self):
        assert pieri_coeff(1, 1, 0, 0, 0) == 2
        assert pieri_coeff(1, -1, 1, 0, 1) == 0
        assert pieri_coeff(-1, -1, 1, 1, 0) == Fraction(1, 2)

    def test_vanishing_iff_target_nonadmissible(self):
        for level in range(0, 22, 2):
            for (j1, j2, j3) in enumerate_level(level):
                for a in (1, -1):
                    for b in (1, -1):
                        coeff = pieri_coeff(a, b, j1, j2, j3)
                        target_ok = is_admissible(j1 + a, j2 + b, j3)
                        assert bool(coeff) == target_ok, (j1, j2, j3, a, b)

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            pieri_coeff(0, 1, 1, 1, 0)


@pytest.fixture(scope="module")
def table4():
    return solve_table(4)


class TestSolveTable:
    def test_level_two_entries(self, table4):
        half = Fraction(1, 2)
        assert table4.entries[(1, 1, 0)] == x_plus_inv(0).scale(half)
        assert table4.entries[(1, 0, 1)] == x_plus_inv(1).scale(half)
        assert table4.entries[(0, 1, 1)] == x_plus_inv(2).scale(half)

    def test_level_four_entry(self, table4):
        expected = (x_plus_inv(0) * x_plus_inv(2)).scale(Fraction(1, 3)) \
            - x_plus_inv(1).scale(Fraction(1, 6))
        assert table4.entries[(1, 2, 1)] == expected

    def test_unit_values(self, table8):
        for phi in table8.entries.values():
            assert phi.eval_ones() == 1

    def test_invariance_under_inversion(self, table8):
        for phi in table8.entries.values():
            for i in range(3):
                assert phi.flip(i) == phi

    def test_pieri_residuals(self, table8):
        for triple in table8.triples():
            if sum(triple) > table8.max_level - 2:
                continue
            for eq in (0, 1, 2):
                assert not table8.pieri_residual(eq, triple), (triple, eq)

    def test_completeness(self, table8):
        levels = {t: sum(t) for t in table8.entries}
        assert max(levels.values()) == 8
        assert all(lvl % 2 == 0 for lvl in levels.values())

    def test_odd_max_level_rejected(self):
        with pytest.raises(ValueError):
            solve_table(3)


class TestLeadingTerm:
    def test_examples(self, table4):
        assert leading_term(table4.entries[(0, 0, 0)], (0, 0, 0)) == (1, (0, 0, 0))
        assert leading_term(table4.entries[(1, 1, 0)], (1, 1, 0)) == (
            Fraction(1, 2), (1, 0, 0))
        assert leading_term(table4.entries[(1, 2, 1)], (1, 2, 1)) == (
            Fraction(1, 3), (1, 0, 1))

    def test_distinct_within_level(self, table8):
        for level in range(0, 10, 2):
            seen = set()
            for triple in enumerate_level(level):
                _, exps = leading_term(table8.entries[triple], triple)
                assert exps not in seen
                seen.add(exps)

    def test_structural_violation_detected(self):
        # top-degree part with two monomials
        p = LaurentPoly3({(1, 0, 0): Fraction(1), (0, 1, 0): Fraction(1)})
        with pytest.raises(FalsificationError):
            leading_term(p, (1, 1, 0))
        # single monomial at the wrong exponents
        q = LaurentPoly3({(0, 1, 0): Fraction(1), (0, 0, 0): Fraction(1)})
        with pytest.raises(FalsificationError):
            leading_term(q, (1, 1, 0))


class TestS3:
    def test_identity(self, table8):
        ok, _ = s3_check(table8, (1, 2, 3))
        assert ok

    @pytest.mark.parametrize("sigma", [
        (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)])
    def test_permutations(self, table8, sigma):
        ok, witness = s3_check(table8, sigma)
        assert ok, witness

    def test_violation_detected(self, table4):
        entries = dict(table4.entries)
        entries[(1, 1, 0)] = entries[(1, 1, 0)].scale(Fraction(2))
        broken = SchurTable(4, entries)
        ok, witness = s3_check(broken, (3, 2, 1))
        assert not ok and witness is not None


class TestPersistence:
    def test_roundtrip(self, table4, tmp_path):
        path = tmp_path / "t.json"
        table4.save(path)
        loaded = SchurTable.load(path)
        assert loaded == table4
        assert loaded.checksum() == table4.checksum()
        # canonical bytes are reproducible
        loaded.save(tmp_path / "t2.json")
        assert (tmp_path / "t.json").read_bytes() == (tmp_path / "t2.json").read_bytes()

    def _payload(self, table):
        return json.loads(table.canonical_json())

    def test_rejects_nonadmissible_triple(self, table4, tmp_path):
        payload = self._payload(table4)
        payload["entries"].append(
            {"triple": [1, 1, 1], "poly": [{"exp": [0, 0, 0], "coeff": "1"}]})
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload))
        with pytest.raises(TableError, match="non-admissible"):
            SchurTable.load(path)

    def test_rejects_missing_origin(self, table4, tmp_path):
        payload = self._payload(table4)
        payload["entries"] = [
            rec for rec in payload["entries"] if rec["triple"] != [0, 0, 0]]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload))
        with pytest.raises(TableError, match="incomplete"):
            SchurTable.load(path)

    def test_rejects_malformed_rational(self, table4, tmp_path):
        payload = self._payload(table4)
        payload["entries"][0]["poly"][0]["coeff"] = "1/0"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload))
        with pytest.raises(TableError, match="malformed rational"):
            SchurTable.load(path)

    def test_rejects_version_mismatch(self, table4, tmp_path):
        payload = self._payload(table4)
        payload["format_version"] = 99
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(payload))
        with pytest.raises(TableError, match="version"):
            SchurTable.load(path)

    def test_rejects_truncated_file(self, table4, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(table4.canonical_json()[:40])
        with pytest.raises(TableError, match="unreadable"):
            SchurTable.load(path)
