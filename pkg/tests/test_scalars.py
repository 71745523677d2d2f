import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liequad.scalars import (
    EXACT,
    Exact,
    ScalarParseError,
    complex_backend,
    parse_complex,
    parse_exact,
)


def rand_fraction(rng, bound=10**6):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def test_field_axioms_on_random_rational_triples():
    # associativity / commutativity / distributivity, 1000 seeded triples
    rng = random.Random(20240811)
    for _ in range(1000):
        a, b, c = (Exact(rand_fraction(rng), rand_fraction(rng)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_division_and_inverse():
    a = Exact(Fraction(3, 4), Fraction(-2, 5))
    assert a / a == Exact(1)
    assert a * (Exact(1) / a) == Exact(1)
    with pytest.raises(ZeroDivisionError):
        a / Exact(0)


def test_reduced_storage():
    x = Exact(Fraction(2, 4))
    assert x.re.numerator == 1 and x.re.denominator == 2


@given(
    n=st.integers(-10**6, 10**6),
    d=st.integers(1, 10**6),
    m=st.integers(-10**6, 10**6),
    e=st.integers(1, 10**6),
)
def test_exact_serialisation_round_trips(n, d, m, e):
    x = Exact(Fraction(n, d), Fraction(m, e))
    assert parse_exact(EXACT.format(x)) == x


@pytest.mark.parametrize(
    "token,expected",
    [
        ("3", Exact(3)),
        ("-1/2", Exact(Fraction(-1, 2))),
        ("i", Exact(0, 1)),
        ("-i", Exact(0, -1)),
        ("2i", Exact(0, 2)),
        ("1/2+3/4i", Exact(Fraction(1, 2), Fraction(3, 4))),
        ("1-2i", Exact(1, -2)),
    ],
)
def test_parse_exact_forms(token, expected):
    assert parse_exact(token) == expected


def test_parse_complex_forms():
    assert parse_complex("1.5") == 1.5
    assert parse_complex("2e-3+1e-2i") == complex(2e-3, 1e-2)
    assert parse_complex("-0.5i") == complex(0, -0.5)
    cb = complex_backend()
    z = complex(0.1234567, -9.87e-5)
    assert cb.parse(cb.format(z)) == z


def test_parse_errors():
    with pytest.raises(ScalarParseError):
        parse_exact("abc")
    with pytest.raises(ScalarParseError):
        parse_exact("1/0")
    with pytest.raises(ScalarParseError):
        parse_complex("")


def test_complex_backend_zero_tolerance():
    cb = complex_backend(1e-9)
    assert cb.is_zero(5e-10)
    assert not cb.is_zero(5e-9)
    assert not EXACT.is_zero(Exact(Fraction(1, 10**12)))
