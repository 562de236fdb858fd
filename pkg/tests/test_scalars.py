from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qfk.scalars import (
    CompositeModulusError,
    CyclotomicField,
    FieldError,
    PrimeField,
    RootOrderError,
    arith,
    cyclotomic_polynomial,
    field_create,
    is_prime,
    least_prime_with_root,
    root_power,
)


def test_f13_root_of_order_four():
    F = field_create({"backend": "prime", "p": 13}, 4)
    assert F.zeta().raw == 8
    assert (F.zeta() * F.zeta()).raw == 12
    assert F.zeta().multiplicative_order() == 4


def test_trivial_root():
    assert field_create({"backend": "prime", "p": 7}, 1).zeta().raw == 1


def test_configuration_errors_are_distinct():
    with pytest.raises(RootOrderError):
        field_create({"backend": "prime", "p": 7}, 4)
    with pytest.raises(CompositeModulusError):
        field_create({"backend": "prime", "p": 15}, 2)
    with pytest.raises(RootOrderError):
        field_create({"backend": "cyclotomic", "M": 6}, 4)
    with pytest.raises(FieldError):
        field_create({"backend": "quaternion"}, 1)


def test_arith_examples():
    F = PrimeField(13, 4)
    assert arith(F(8), F(8), "mul") == F(12)
    assert arith(F(5), F(0), "add") == F(5)
    Q = CyclotomicField(4, 4)
    x = Q.zeta()
    assert x * x == Q(-1)


def test_mixed_fields_and_zero_division():
    with pytest.raises(FieldError):
        arith(PrimeField(13)(1), PrimeField(7)(1), "add")
    with pytest.raises(ZeroDivisionError):
        PrimeField(13)(1) / PrimeField(13)(0)
    with pytest.raises(ZeroDivisionError):
        CyclotomicField(5)(1) / CyclotomicField(5)(0)


def test_root_power():
    F = PrimeField(13, 4)
    assert root_power(F, 2).raw == 12
    assert root_power(F, 0).raw == 1
    assert root_power(F, 4).raw == 1
    assert root_power(F, -1) == F.zeta().inverse()


def test_least_prime_with_root():
    assert least_prime_with_root(4) == 5
    assert least_prime_with_root(6) == 7
    assert least_prime_with_root(4, above=100) == 101
    assert field_create({"backend": "prime", "min_prime": 200}, 8).p == 233


def test_cyclotomic_polynomials():
    # coefficient lists, constant term first
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("M", [3, 5, 8, 9, 12])
def test_roots_of_unity_sum_to_zero(M):
    Q = CyclotomicField(M, M)
    total = Q(0)
    for e in range(M):
        total = total + root_power(Q, e)
    assert total == Q(0)
    assert Q.zeta().multiplicative_order() == M


def test_json_roundtrip():
    Q = CyclotomicField(5, 5)
    a = Q.zeta() * Q(Fraction(3, 7)) + Q(2)
    assert Q.scalar(Q.from_json(Q.to_json(a.raw))) == a
    F = PrimeField(13)
    assert F.from_json(F.to_json(F(-1).raw)) == 12


primes = st.sampled_from([p for p in range(3, 200) if is_prime(p)])


@given(primes, st.integers(), st.integers())
def test_prime_field_matches_integer_arithmetic(p, a, b):
    F = PrimeField(p)
    assert (F(a) * F(b)).raw == (a * b) % p
    assert (F(a) - F(b)).raw == (a - b) % p
    if a % p:
        assert (F(a) * F(a).inverse()).raw == 1


small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=60)
@given(st.sampled_from([3, 5, 7, 8, 12]), st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=6))
def test_cyclotomic_field_axioms(M, xs, ys):
    Q = CyclotomicField(M)
    a, b = Q(xs), Q(ys)
    assert a * b == b * a
    assert (a + b) * b == a * b + b * b
    if a:
        assert a * a.inverse() == Q(1)
        assert (b / a) * a == b
