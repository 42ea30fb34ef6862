from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from hyperanimals import FieldMismatchError, QuadExt, new_context
from hyperanimals.quadfield import arith, ceil_value, floor_value, int_pow, sign

from conftest import HYPERBOLIC_12, sig_id

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=60)
FIELDS = [5, 12, 45, 21, 32]


def quads(D):
    return st.builds(lambda a, b: QuadExt(a, b, D), rationals, rationals)


def interval(x: QuadExt, bits=200):
    with mpmath.workprec(bits):
        return mpmath.mpf(x.a.numerator) / x.a.denominator + mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(x.D)


# -- construction and arithmetic -----------------------------------------------------


def test_rejects_square_or_nonpositive_discriminant():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 9)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 0)


def test_mixed_fields_raise():
    with pytest.raises(FieldMismatchError):
        arith(QuadExt(1, 1, 5), QuadExt(1, 1, 12), "add")
    with pytest.raises(FieldMismatchError):
        QuadExt(1, 1, 5) * QuadExt(1, 1, 12)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        arith(QuadExt(1, 1, 5), QuadExt(0, 0, 5), "div")
    with pytest.raises(ZeroDivisionError):
        int_pow(QuadExt(0, 0, 5), -1)


def test_lowest_terms():
    x = QuadExt(Fraction(4, -6), Fraction(10, 4), 5)
    assert (x.a, x.b) == (Fraction(-2, 3), Fraction(5, 2))
    assert x.a.denominator > 0


def test_multiplication_rule():
    x, y = QuadExt(2, 3, 7), QuadExt(-1, 5, 7)
    assert arith(x, y, "mul") == QuadExt(2 * -1 + 3 * 5 * 7, 2 * 5 + 3 * -1, 7)


@pytest.mark.parametrize("pq", HYPERBOLIC_12, ids=sig_id)
def test_alpha_times_inverse_is_one(pq):
    a = new_context(*pq).alpha
    assert a * a.inverse() == 1


def test_beta_quadratic_for_4_5():
    ctx = new_context(4, 5)
    b = ctx.beta
    # D = 12 here, so sqrt(3) = sqrt(12)/2
    assert ctx.alpha == QuadExt(2, Fraction(1, 2), 12)
    assert b == QuadExt(Fraction(3, 2), Fraction(1, 4), 12)
    assert 2 * b * b - 6 * b + 3 == 0


def test_golden_square():
    phi = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi * phi == QuadExt(Fraction(3, 2), Fraction(1, 2), 5)


# -- sign, floor -------------------------------------------------------------------


def test_sign_examples():
    assert sign(QuadExt(0, 0, 5)) == 0
    assert sign(QuadExt(5, -2, 5)) == 1
    assert sign(QuadExt(2, -1, 5)) == -1


def test_floor_examples():
    assert floor_value(new_context(3, 7).beta) == 3
    assert floor_value(QuadExt(Fraction(7, 2), 0, 5)) == 3
    assert floor_value(5 * new_context(7, 3).beta) == 3
    assert ceil_value(QuadExt(Fraction(7, 2), 0, 5)) == 4


def test_floor_of_7_3_beta_against_mpmath():
    x = 5 * new_context(7, 3).beta
    assert int(mpmath.floor(interval(x))) == 3


# -- powers ----------------------------------------------------------------------


def test_int_pow_basics():
    a = new_context(4, 5).alpha
    assert int_pow(a, 0) == 1
    assert int_pow(a, -1) == QuadExt(2, Fraction(-1, 2), 12)
    assert a ** 3 == a * a * a


@pytest.mark.parametrize("pq", HYPERBOLIC_12, ids=sig_id)
def test_alpha_root_of_characteristic(pq):
    ctx = new_context(*pq)
    a = ctx.alpha
    assert int_pow(a, 2) - ctx.t * a + 1 == 0


# -- properties --------------------------------------------------------------------


@pytest.mark.parametrize("D", FIELDS)
@given(data=st.data())
def test_field_axioms(D, data):
    x, y, z = (data.draw(quads(D)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x * x.inverse() == 1


@pytest.mark.parametrize("D", FIELDS)
@given(data=st.data())
def test_conjugation_and_norm(D, data):
    x, y = data.draw(quads(D)), data.draw(quads(D))
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).norm() == x.norm() * y.norm()


@pytest.mark.parametrize("D", FIELDS)
@given(data=st.data())
def test_floor_brackets_value(D, data):
    x = data.draw(quads(D))
    f = floor_value(x)
    assert x - f >= 0
    assert x - (f + 1) < 0
    assert ceil_value(x) == -floor_value(-x)


@pytest.mark.parametrize("D", FIELDS)
@given(
    a=st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4),
    b=st.fractions(min_value=-10**4, max_value=10**4, max_denominator=10**4),
)
def test_sign_and_floor_match_interval_evaluation(D, a, b):
    x = QuadExt(a, b, D)
    v = interval(x)
    # 200 bits leaves a wide margin over these magnitudes; exact zero only when a = b = 0
    expected = 0 if (a == 0 and b == 0) else (1 if v > 0 else -1)
    assert sign(x) == expected
    assert floor_value(x) == int(mpmath.floor(v))


def test_sign_near_cancellation():
    # Pell convergents of sqrt(2): differences shrink like 1/q
    for p, q in [(99, 70), (19601, 13860), (3363, 2378)]:
        x = QuadExt(p, -q, 2)
        assert sign(x) == (1 if p * p > 2 * q * q else -1)


def test_to_decimal_digits():
    d = QuadExt(0, 1, 2).to_decimal(20)
    assert str(d) == "1.4142135623730950488"


@pytest.mark.parametrize("D", FIELDS)
def test_ten_thousand_samples_against_interval_evaluation(D):
    import random

    rng = random.Random(D)
    for _ in range(10_000):
        a = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**5))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**5))
        x = QuadExt(a, b, D)
        v = interval(x)
        assert sign(x) == (0 if v == 0 else (1 if v > 0 else -1))
        assert floor_value(x) == int(mpmath.floor(v))
