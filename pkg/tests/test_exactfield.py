import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tritile.exactfield import ONE, QS3, SQRT3, ZERO, qs3_approx, qs3_arith, qs3_sign, qs3_sqrt

fracs = st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 4)
qs3s = st.builds(QS3, fracs, fracs)


def test_arith_examples():
    assert qs3_arith("add", QS3(1), QS3(0, 1)) == QS3(1, 1)
    assert qs3_arith("mul", SQRT3, SQRT3) == QS3(3)
    assert qs3_arith("div", ONE, QS3(2, 1)) == QS3(2, -1)
    assert qs3_arith("sub", QS3(1, 1), QS3(1, 1)) == ZERO


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        qs3_arith("div", ONE, ZERO)


def test_unknown_op():
    with pytest.raises(ValueError):
        qs3_arith("pow", ONE, ONE)


@pytest.mark.parametrize("x, s", [(ZERO, 0), (QS3(-5, 3), 1), (QS3(7, -4), 1), (QS3(5, -3), -1), (QS3(-7, 4), -1), (QS3(0, -1), -1)])
def test_sign_examples(x, s):
    assert qs3_sign(x) == s


@pytest.mark.parametrize("x, d, out", [(SQRT3, 6, "1.732051"), (QS3(2), 2, "2.00"), (QS3(-5, 3), 4, "0.1962"),
                                        (QS3(Fraction(-1, 8)), 2, "-0.13"), (QS3(0, -1), 3, "-1.732")])
def test_approx_examples(x, d, out):
    assert qs3_approx(x, d) == out


def test_canonical_form():
    x = QS3(Fraction(2, 4), Fraction(6, 8))
    assert x.parts == (2, 3, 4)
    assert x == QS3(Fraction(1, 2), Fraction(3, 4))
    assert hash(x) == hash(QS3(Fraction(1, 2), Fraction(3, 4)))
    assert QS3(Fraction(3, -6)).parts == (-1, 0, 2)


def test_string_round_trip():
    x = QS3(Fraction(-7, 3), Fraction(5, 2))
    assert x.to_strings() == ["-7", "3", "5", "2"]
    assert QS3.from_strings(x.to_strings()) == x
    with pytest.raises(ValueError):
        QS3.from_strings(["1", "0", "0", "1"])


@settings(max_examples=200)
@given(qs3s, qs3s, qs3s)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x:
        assert x * (ONE / x) == ONE
    assert (x - y) + y == x


@given(qs3s, qs3s)
def test_equality_is_componentwise(x, y):
    d = x - y
    assert (x == y) == (d.p == 0 and d.q == 0)


@given(qs3s)
def test_sqrt_of_square(x):
    r = qs3_sqrt(x * x)
    assert r is not None and r * r == x * x and r.sign() >= 0


def test_sqrt_absent():
    assert qs3_sqrt(QS3(2)) is None
    assert qs3_sqrt(QS3(-4)) is None
    assert qs3_sqrt(QS3(7, 4)) == QS3(2, 1)


def test_sign_matches_approx_over_many_samples():
    import random

    rng = random.Random(2024)
    checked = 0
    for _ in range(10_000):
        p = Fraction(rng.randint(-10 ** 9, 10 ** 9), rng.randint(1, 10 ** 6))
        q = Fraction(rng.randint(-10 ** 9, 10 ** 9), rng.randint(1, 10 ** 6))
        x = QS3(p, q)
        s = qs3_approx(x, 30)
        if s.strip("-0.") == "":
            continue
        checked += 1
        assert qs3_sign(x) == (-1 if s.startswith("-") else 1)
    assert checked > 9_000


def test_sign_near_cancellation():
    # convergents of sqrt(3) give p + q sqrt3 extremely close to zero
    p, q = 1, 1
    for _ in range(40):
        p, q = p + 3 * q, p + q
        x = QS3(p, -q)
        assert qs3_sign(x) == (1 if p * p > 3 * q * q else -1)


@given(qs3s, st.integers(min_value=1, max_value=25))
def test_approx_is_correctly_rounded(x, digits):
    getcontext().prec = 80
    exact = Decimal(x.p.numerator) / Decimal(x.p.denominator) + Decimal(x.q.numerator) / Decimal(x.q.denominator) * Decimal(3).sqrt()
    got = Decimal(qs3_approx(x, digits))
    assert abs(got - exact) <= Decimal(10) ** -digits / 2 + Decimal(10) ** -60


def test_float_conversion():
    assert math.isclose(float(QS3(1, 1)), 1 + math.sqrt(3))
