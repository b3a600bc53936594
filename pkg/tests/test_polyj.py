from fractions import Fraction

from g2schur.polyj import PolyJ


def test_eval_example_family():
    # (j1^2 + j2^2 - j3^2)/12 + (j1 + j2 - j3)/6 at (1,1,0)
    p = PolyJ({
        (2, 0, 0): Fraction(1, 12), (0, 2, 0): Fraction(1, 12),
        (0, 0, 2): Fraction(-1, 12), (1, 0, 0): Fraction(1, 6),
        (0, 1, 0): Fraction(1, 6), (0, 0, 1): Fraction(-1, 6),
    })
    assert p.evaluate((1, 1, 0)) == Fraction(1, 2)
    assert p.evaluate((0, 0, 0)) == 0


def test_eval_trivial():
    assert PolyJ.zero().evaluate((7, 8, 9)) == 0
    assert PolyJ.constant(1).evaluate((5, 3, 2)) == 1


def test_ring_ops_and_degree():
    j1 = PolyJ.variable(0)
    j2 = PolyJ.variable(1)
    p = (j1 + j2) * (j1 - j2)
    assert p == PolyJ({(2, 0, 0): 1, (0, 2, 0): -1})
    assert p.degree() == 2
    assert PolyJ.zero().degree() == -1
    assert (p - p) == PolyJ.zero()
    assert p.scale(Fraction(1, 2)).evaluate((3, 1, 0)) == 4
