from fractions import Fraction
from math import floor, ceil

import mpmath
from hypothesis import given, strategies as st

from geospec.surd import QuadraticSurd, eps, dist_to_int, format_surd, parse_exact, nearest_integer

ints = st.integers(-10 ** 6, 10 ** 6)
dens = st.integers(1, 10 ** 4)
rads = st.sampled_from([2, 3, 5, 13, 21])


def surds():
    return st.builds(lambda p, q, r, d: QuadraticSurd(p, q, r, d), ints, ints, dens, rads)


def mp(x):
    return (mpmath.mpf(x.p) + x.q * mpmath.sqrt(x.d)) / x.r


@given(surds())
def test_floor_ceil_match_high_precision(x):
    assert floor(x) == int(mpmath.floor(mp(x)))
    assert ceil(x) == int(mpmath.ceil(mp(x)))


@given(surds(), surds())
def test_field_operations(x, y):
    y = QuadraticSurd(y.p, y.q, y.r, x.d)
    assert abs(mp(x * y) - mp(x) * mp(y)) < mpmath.mpf(10) ** -40 * (1 + abs(mp(x) * mp(y)))
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x


@given(surds())
def test_sign_and_order(x):
    assert x.sign() == (mp(x) > 0) - (mp(x) < 0)
    assert (x < 0) == (mp(x) < 0)


@given(surds())
def test_format_roundtrip(x):
    back = parse_exact(format_surd(x))
    assert QuadraticSurd._coerce(back) == x


@given(surds())
def test_rounding_convention(x):
    e = eps(x)
    assert Fraction(-1, 2) <= e < Fraction(1, 2)
    assert x - e == nearest_integer(x)
    assert dist_to_int(x) == abs(e)


def test_half_rounds_up():
    assert nearest_integer(Fraction(1, 2)) == 1
    assert eps(Fraction(1, 2)) == Fraction(-1, 2)


def test_norm_trace_of_silver_unit():
    a = QuadraticSurd(2, 1, 1, 3)
    assert a.norm() == 1 and a.trace() == 4
    assert a * a.conjugate() == 1
    assert str(a) == "(2+sqrt(3))"


@given(surds())
def test_float_has_relative_accuracy(x):
    ref = mp(x)
    if ref != 0:
        assert abs(float(x) - float(ref)) <= 1e-15 * abs(float(ref))


def test_float_survives_cancellation():
    # a convergent minus its irrational limit: huge coefficients, tiny value
    from geospec import spectrum_quadratic as sq
    d = sq.spectrum_values(3, "minus", 40)[40] - sq.spectrum_limit(3, "minus")
    ref = (mpmath.mpf(d.p) + d.q * mpmath.sqrt(13)) / d.r
    assert float(d) != 0 and abs(float(d) / float(ref) - 1) < 1e-14
