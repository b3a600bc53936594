from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from g2schur.laurent import LaurentPoly3, x_plus_inv


def mono(e, c=1):
    return LaurentPoly3.monomial(e, Fraction(c))


def test_difference_of_squares():
    x = LaurentPoly3.variable(0)
    xinv = mono((-1, 0, 0))
    assert (x + xinv) * (x - xinv) == mono((2, 0, 0)) - mono((-2, 0, 0))


def test_zero_is_identity():
    p = mono((1, -2, 3), Fraction(5, 7)) + mono((0, 0, 0), 2)
    assert LaurentPoly3.zero() + p == p
    assert p - p == LaurentPoly3.zero()
    assert not (p - p)


def test_scale_and_pow():
    p = x_plus_inv(0)
    assert p.scale(Fraction(1, 2)) + p.scale(Fraction(1, 2)) == p
    assert p ** 2 == mono((2, 0, 0)) + mono((0, 0, 0), 2) + mono((-2, 0, 0))
    assert p ** 0 == LaurentPoly3.one()


def test_diff_laurent():
    p = mono((2, 0, 0)) + mono((-1, 0, 0), 3) + mono((0, 5, 0))
    assert p.diff(0) == mono((1, 0, 0), 2) + mono((-2, 0, 0), -3)
    assert p.diff(2) == LaurentPoly3.zero()


def test_subs_unit_and_flip():
    p = mono((1, 0, 2)) + mono((1, 0, -2)) + mono((1, 0, 0), -1)
    assert p.subs_unit(2) == mono((1, 0, 0))
    assert p.flip(2) == p  # symmetric support in the third slot
    q = mono((1, 2, 0))
    assert q.flip(0) == mono((-1, 2, 0))


def test_permute_positions():
    p = mono((1, 2, 3))
    assert p.permute((2, 1, 0)) == mono((3, 2, 1))
    assert p.permute((0, 1, 2)) == p


def test_top_part_and_leading():
    p = mono((1, 0, 0), 2) + mono((-1, 0, 0), 2) + mono((0, 1, 1), 7)
    top = p.top_part()
    assert top == mono((0, 1, 1), 7)
    assert p.lex_leading() == ((1, 0, 0), Fraction(2))


def test_eval_ones():
    assert x_plus_inv(1).eval_ones() == 2


coeffs = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6)
exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exps, coeffs, max_size=5).map(LaurentPoly3)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(polys)
def test_involutions(p):
    assert p.flip(0).flip(0) == p
    assert p.permute((1, 0, 2)).permute((1, 0, 2)) == p
    assert -(-p) == p
