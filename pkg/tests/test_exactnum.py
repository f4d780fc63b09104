"""Exact cyclotomic arithmetic against independent algebra."""

from fractions import Fraction

import pytest
import sympy

from orbivertex.exactnum import CycloNum, cyclo_field, cyclotomic_polynomial, field_for


def test_cyclotomic_polynomials_match_sympy():
    x = sympy.symbols("x")
    for n in range(1, 41):
        ours = cyclotomic_polynomial(n)  # ascending, constant term first
        theirs = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
        assert list(ours) == [int(c) for c in reversed(theirs)]


def test_root_of_unity_order_and_powers():
    field = cyclo_field(24)
    z = field.root_of_unity(24)
    acc = field.from_fraction(1)
    seen_one = []
    for k in range(1, 25):
        acc = acc * z
        if acc == field.from_fraction(1):
            seen_one.append(k)
    assert seen_one == [24]
    assert field.root_of_unity(24, 25) == z
    assert field.root_of_unity(8) == z**3
    assert field.root_of_unity(3) == z**8


def test_imaginary_unit_squares_to_minus_one():
    for a in (1, 2, 3):
        field = field_for(a)
        i = field.imaginary_unit()
        assert i * i == field.from_fraction(-1)


def test_field_for_contains_needed_roots():
    for a in (1, 2, 3):
        field = field_for(a)
        assert field.order % 4 == 0
        assert field.order % (4 * a) == 0
        field.root_of_unity(2 * a)
        field.root_of_unity(a)


def test_inverse_and_division():
    field = cyclo_field(8)
    z = field.root_of_unity(8)
    v = field.from_fraction(Fraction(3, 7)) + z - z ** 3
    assert v * v.inverse() == field.from_fraction(1)
    assert (v / v) == field.from_fraction(1)
    with pytest.raises(ZeroDivisionError):
        field.from_fraction(0).inverse()


def test_rational_detection_and_embedding():
    field = cyclo_field(8)
    z = field.root_of_unity(8)
    v = z + z.inverse()  # 2 cos(pi/4) = sqrt(2), not rational
    assert not v.is_rational()
    assert (v * v).is_rational()
    assert (v * v).as_fraction() == 2
    small = cyclo_field(4)
    big = cyclo_field(8)
    i_small = small.imaginary_unit()
    assert i_small.embed(big) == big.imaginary_unit()


def test_sum_of_all_roots_vanishes():
    field = cyclo_field(12)
    total = field.from_fraction(0)
    for k in range(12):
        total = total + field.root_of_unity(12, k)
    assert total.is_zero()


def test_mixed_arithmetic_with_fractions():
    field = cyclo_field(4)
    i = field.imaginary_unit()
    v = Fraction(1, 2) + i * Fraction(1, 3)
    w = v - Fraction(1, 2)
    assert w == i * Fraction(1, 3)
    assert (v * 6) == field.from_fraction(3) + i * 2
