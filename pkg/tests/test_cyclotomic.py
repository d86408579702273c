from fractions import Fraction

import pytest

from mckaynum.cyclotomic import (Cyclotomic, cyclotomic_polynomial, one,
                                 parse_value, render_value, root_of_unity,
                                 zero)
from mckaynum.errors import ConductorOverflow
from mckaynum._numbers import euler_phi


def test_roots_of_unity_basics():
    for e in (1, 2, 3, 4, 5, 6, 8, 12):
        z = root_of_unity(e)
        acc = one()
        for _ in range(e):
            acc = acc * z
        assert acc == one()
    assert root_of_unity(2) == Cyclotomic.from_rational(-1)
    assert root_of_unity(1) == one()


def test_primitive_root_sums():
    # all nontrivial p-th roots sum to -1
    for p in (3, 5, 7, 11):
        s = zero()
        for k in range(1, p):
            s = s + root_of_unity(p, k)
        assert s == Cyclotomic.from_rational(-1)


def test_cyclotomic_polynomial():
    # x^4 - x^2 + 1 for conductor 12
    assert tuple(cyclotomic_polynomial(12)) == (1, 0, -1, 0, 1)
    for e in (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15):
        assert len(cyclotomic_polynomial(e)) == euler_phi(e) + 1


def test_arithmetic_mixed_conductors():
    z3 = root_of_unity(3)
    z4 = root_of_unity(4)
    v = z3 + z4
    assert v - z4 == z3
    assert (z4 * z4) == Cyclotomic.from_rational(-1)
    assert (v * zero()) == zero()
    half = Cyclotomic.from_rational(Fraction(1, 2))
    assert half + half == one()
    assert (z3 / 2) * 2 == z3
    assert z3 / Fraction(1, 3) == z3 * 3


def test_golden_ratio_relation():
    # z5 + z5^4 satisfies x^2 + x - 1 = 0
    z = root_of_unity(5)
    x = z + z.galois(4)
    assert x * x + x - one() == zero()


def test_galois_and_conjugate():
    z = root_of_unity(5)
    assert z.galois(2) == z * z
    assert z.conjugate() == z.galois(4)
    v = z + z.conjugate()
    assert v.conjugate() == v
    # conjugate is a ring homomorphism
    w = root_of_unity(5, 2) + one()
    assert (v * w).conjugate() == v.conjugate() * w.conjugate()
    assert (v + w).conjugate() == v.conjugate() + w.conjugate()


def test_rational_recognition():
    assert (root_of_unity(6) - root_of_unity(6)).as_rational() == 0
    s = root_of_unity(3) + root_of_unity(3, 2)
    assert s.as_rational() == -1
    assert s.as_integer() == -1
    assert root_of_unity(5).as_rational() is None
    assert Cyclotomic.from_rational(Fraction(3, 2)).as_integer() is None
    assert (root_of_unity(8) + root_of_unity(8, 7)).as_rational() is None


def test_to_conductor():
    z3 = root_of_unity(3)
    lifted = z3.to_conductor(6)
    assert lifted.conductor in (3, 6)
    assert lifted == z3
    assert root_of_unity(6, 2) == z3


def test_render_parse_round_trip():
    samples = [
        zero(), one(), Cyclotomic.from_rational(-7),
        Cyclotomic.from_rational(Fraction(2, 3)),
        root_of_unity(5) + root_of_unity(5, 4),
        root_of_unity(8) * Cyclotomic.from_rational(Fraction(-1, 2)) + one(),
        root_of_unity(12, 7),
    ]
    for v in samples:
        assert parse_value(render_value(v)) == v


def test_conductor_overflow():
    with pytest.raises(ConductorOverflow):
        root_of_unity(10007)


def test_coeff_key_orders_rationals_naturally():
    a = Cyclotomic.from_rational(2)
    b = Cyclotomic.from_rational(1)
    assert a.coeff_key(12) > b.coeff_key(12)
