from fractions import Fraction

import pytest

from cocycle_lab.scalars import (
    CycScalar,
    as_root_exponent,
    cyclotomic_polynomial,
    is_square_in_mu,
    rational_is_square_in_field,
    root_of_unity,
    square_class,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity():
    i = root_of_unity(4, 1)
    assert i * i == -1
    assert root_of_unity(4, 2) == -1
    assert i**4 == 1
    # 1 + zeta_3 + zeta_3^2 = 0, by reduction mod the cyclotomic polynomial
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1
    assert root_of_unity(3, 1) ** 3 == 1
    # multiplicative order is N/gcd(N, k)
    z = root_of_unity(12, 8)
    assert (z**3).is_one() and not z.is_one() and not (z**2).is_one()


def test_field_operations():
    i = root_of_unity(4, 1)
    assert (1 + i) * (1 - i) == 2
    assert CycScalar.rational(-1).inv() == -1
    assert (i + 1) - 1 == i
    assert CycScalar.rational(Fraction(2, 3)) / CycScalar.rational(Fraction(1, 6)) == 4
    with pytest.raises(ZeroDivisionError):
        CycScalar.zero(4).inv()
    z = root_of_unity(5, 2)
    x = 3 * z**2 - z + Fraction(1, 2)
    assert x * x.inv() == 1
    assert x ** (-2) == (x * x).inv()


def test_canonicality_random_routes(rng):
    # same value along different arithmetic routes gives identical vectors
    for _ in range(1000):
        n = rng.choice([3, 4, 5, 12])
        a, b = rng.randrange(2 * n), rng.randrange(2 * n)
        z = root_of_unity(n, 1)
        assert z**a * z**b == z ** (a + b)
    for _ in range(50):
        parts = [
            CycScalar.rational(Fraction(rng.randrange(-5, 6), rng.randrange(1, 7)), 4)
            for _ in range(4)
        ]
        left = ((parts[0] + parts[1]) + parts[2]) + parts[3]
        right = parts[3] + (parts[2] + (parts[1] + parts[0]))
        assert left == right
        assert left.nums == right.nums and left.den == right.den


def test_lift_is_field_embedding(rng):
    z = root_of_unity(3, 1)
    for _ in range(100):
        a = z ** rng.randrange(3) + rng.randrange(-2, 3)
        b = z ** rng.randrange(3) - rng.randrange(-2, 3)
        assert (a * b).lift(12) == a.lift(12) * b.lift(12)
        assert (a + b).lift(12) == a.lift(12) + b.lift(12)
    with pytest.raises(ValueError):
        z.lift(4)


def test_field_axioms_sampled(rng):
    z = root_of_unity(4, 1)
    samples = [z, 1 + z, CycScalar.rational(Fraction(3, 2), 4), 2 - z, -z]
    for a in samples:
        for b in samples:
            for c in samples:
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
        assert (a * a.inv()).is_one()


def test_as_root_exponent():
    assert as_root_exponent(CycScalar.rational(-1), 4) == 2
    assert as_root_exponent(CycScalar.rational(2), 4) is None
    i = root_of_unity(4, 1)
    assert as_root_exponent(i * i * i, 4) == 3
    assert as_root_exponent(root_of_unity(3, 2), 6) == 4


def test_is_square_in_mu():
    i = root_of_unity(4, 1)
    assert is_square_in_mu(CycScalar.rational(-1), 4) is True
    # exhaustive oracle: no fourth root of unity squares to i
    assert all(root_of_unity(4, k) ** 2 != i for k in range(4))
    assert is_square_in_mu(i, 4) is False
    # odd order: zeta_3 = (zeta_3^2)^2
    assert root_of_unity(3, 2) ** 2 == root_of_unity(3, 1)
    assert is_square_in_mu(root_of_unity(3, 1), 3) is True
    with pytest.raises(ValueError):
        is_square_in_mu(CycScalar.rational(2), 4)


def test_rational_square_classes():
    assert rational_is_square_in_field(4, 4)
    assert rational_is_square_in_field(Fraction(9, 16), 1)
    assert not rational_is_square_in_field(2, 4)
    assert not rational_is_square_in_field(Fraction(1, 2), 4)
    # -4 = (2i)^2 once i is present
    assert rational_is_square_in_field(-4, 4)
    assert not rational_is_square_in_field(-4, 2)
    # sqrt(2) lives in the eighth cyclotomic field
    assert rational_is_square_in_field(2, 8)
    # -3 is a square alongside a primitive cube root: (1 + 2 zeta_3)^2 = -3
    z3 = root_of_unity(3, 1)
    assert (1 + 2 * z3) ** 2 == -3
    assert rational_is_square_in_field(-3, 3)
    assert not rational_is_square_in_field(3, 3)
    assert rational_is_square_in_field(3, 12)


def test_square_class():
    i = root_of_unity(4, 1)
    assert square_class(CycScalar.rational(4, 4)) == "trivial"
    assert square_class(i) == "nontrivial"
    assert square_class(CycScalar.rational(-1, 4)) == "trivial"  # -1 = i^2
    assert square_class(CycScalar.rational(-1, 2)) == "nontrivial"
    assert square_class(1 + i) == "undecided"
    with pytest.raises(ValueError):
        square_class(CycScalar.zero(4))


def test_json_roundtrip():
    i = root_of_unity(4, 1)
    value = (3 * i + Fraction(1, 2)) / 5
    data = value.to_json()
    assert CycScalar.from_json(data) == value
    assert root_of_unity(4, 1).to_json() == {
        "conductor": 4,
        "coeffs": [["0", "1"], ["1", "1"]],
    }


def test_str_forms():
    assert str(root_of_unity(4, 1)) == "i"
    assert str(root_of_unity(4, 3)) == "-i"
    assert str(CycScalar.rational(Fraction(-7, 2))) == "-7/2"
    assert str(root_of_unity(8, 1)) == "zeta8"
