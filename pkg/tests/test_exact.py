"""Exact-core tests: binomials, factorization, and canonical value algebra."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sincint import (
    ExactValue,
    is_prime,
    log_of_integer,
    parse_exact_value,
    prime_factorization,
    rational_binomial,
)

# ---------------------------------------------------------------------------
# independent oracles


def pascal_binomial(n: int, k: int) -> int:
    """Binomial oracle: build Pascal's triangle row by row, integers only."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def brute_is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, n))


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=48)

_exact_values = st.builds(
    ExactValue,
    pi_coeff=_rationals,
    log_coeffs=st.dictionaries(st.sampled_from(_SMALL_PRIMES), _rationals, max_size=4),
)


# ---------------------------------------------------------------------------
# rational_binomial


def test_binomial_standard_example():
    assert rational_binomial(4, 2) == Fraction(6)


def test_binomial_out_of_range_is_zero():
    assert rational_binomial(5, 7) == 0
    assert rational_binomial(5, -1) == 0


def test_binomial_large_value_against_pascal_oracle():
    expected = pascal_binomial(40, 20)
    assert expected == 137846528820
    assert rational_binomial(40, 20) == expected


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        rational_binomial(-1, 0)


def test_binomial_satisfies_pascal_recurrence_up_to_60():
    for n in range(1, 61):
        for k in range(0, n + 1):
            assert rational_binomial(n, k) == (
                rational_binomial(n - 1, k - 1) + rational_binomial(n - 1, k)
            )


def test_binomial_is_exact_rational_type():
    value = rational_binomial(40, 20)
    assert isinstance(value, Fraction)
    assert value.denominator == 1


# ---------------------------------------------------------------------------
# factorization and logs


@given(st.integers(min_value=1, max_value=20000))
def test_factorization_recomposes_and_uses_primes(m):
    factors = prime_factorization(m)
    product = 1
    for prime, exponent in factors.items():
        assert brute_is_prime(prime)
        assert exponent >= 1
        product *= prime**exponent
    assert product == m


def test_factorization_rejects_nonpositive():
    with pytest.raises(ValueError):
        prime_factorization(0)


@given(st.integers(min_value=-3, max_value=10000))
def test_is_prime_matches_brute_force(n):
    assert is_prime(n) == brute_is_prime(n)


def test_log_of_one_is_zero():
    assert log_of_integer(1, Fraction(5, 2)) == ExactValue.zero()


def test_log_of_twelve():
    assert log_of_integer(12, 1) == ExactValue(log_coeffs={2: Fraction(2), 3: Fraction(1)})


def test_log_of_nine_with_rational_weight():
    # trial-division oracle: 9 = 3^2, so the ln(3) weight is 2 * 3/4
    factors = prime_factorization(9)
    assert factors == {3: 2}
    expected = ExactValue(log_coeffs={3: factors[3] * Fraction(3, 4)})
    assert log_of_integer(9, Fraction(3, 4)) == expected
    assert expected.log_coeffs[3] == Fraction(3, 2)


def test_log_rejects_nonpositive_argument():
    with pytest.raises(ValueError):
        log_of_integer(0, 1)
    with pytest.raises(ValueError):
        log_of_integer(-5, 1)


@given(
    st.integers(min_value=1, max_value=400),
    st.integers(min_value=1, max_value=400),
    _rationals,
)
def test_log_homomorphism(m, n, coeff):
    assert log_of_integer(m * n, coeff) == log_of_integer(m, coeff) + log_of_integer(n, coeff)


# ---------------------------------------------------------------------------
# ExactValue algebra


def test_add_collects_pi():
    half = ExactValue.pi_multiple(Fraction(1, 2))
    assert half + half == ExactValue.pi_multiple(1)


def test_scale_example():
    value = ExactValue(log_coeffs={3: Fraction(3, 4)})
    assert value.scale(-4) == ExactValue(log_coeffs={3: Fraction(-3)})


def test_cancellation_removes_key():
    u = ExactValue(log_coeffs={3: Fraction(3, 4)})
    v = ExactValue(log_coeffs={3: Fraction(-3, 4)})
    total = u + v
    assert total.is_zero
    assert total.log_coeffs == {}


def test_zero_coefficients_are_dropped_on_construction():
    assert ExactValue(0, {2: Fraction(0)}) == ExactValue.zero()


def test_nonprime_log_key_rejected():
    with pytest.raises(ValueError):
        ExactValue(log_coeffs={6: Fraction(1)})
    with pytest.raises(ValueError):
        ExactValue(log_coeffs={1: Fraction(1)})


@given(_exact_values, _exact_values)
def test_add_commutative(u, v):
    assert u + v == v + u


@given(_exact_values, _exact_values, _exact_values)
def test_add_associative(u, v, w):
    assert (u + v) + w == u + (v + w)


@given(_exact_values, _exact_values, _rationals)
def test_scale_distributes_over_add(u, v, r):
    assert (u + v).scale(r) == u.scale(r) + v.scale(r)


@given(_exact_values)
def test_subtraction_gives_zero(u):
    assert (u - u).is_zero


# ---------------------------------------------------------------------------
# canonical text form


@pytest.mark.parametrize(
    "value,text",
    [
        (ExactValue.zero(), "0"),
        (ExactValue.pi_multiple(Fraction(1, 2)), "1/2*pi"),
        (ExactValue(log_coeffs={3: Fraction(3, 4)}), "3/4*ln(3)"),
        (ExactValue(log_coeffs={3: Fraction(-3, 4)}), "-3/4*ln(3)"),
        (
            ExactValue(Fraction(1, 3), {2: Fraction(-5, 8)}),
            "1/3*pi - 5/8*ln(2)",
        ),
        (
            ExactValue(Fraction(-2), {2: Fraction(1), 5: Fraction(7, 3)}),
            "-2*pi + 1*ln(2) + 7/3*ln(5)",
        ),
    ],
)
def test_canonical_rendering(value, text):
    assert str(value) == text
    assert parse_exact_value(text) == value


@given(_exact_values)
def test_text_round_trip(value):
    assert parse_exact_value(str(value)) == value


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_exact_value("pi + 3")
    with pytest.raises(ValueError):
        parse_exact_value("1/2*log(3)")
