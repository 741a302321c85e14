"""Cyclotomic polynomials and exact arithmetic in Z[w_N] and its fraction field."""

import cmath
import math
import random

import pytest

from sparkforge import cyclotomic_poly, root_power
from sparkforge.exact_arith import (
    CycInt,
    ExactScalar,
    divisors,
    euler_phi,
    is_prime,
    is_prime_power,
)
from sparkforge.errors import DivisionByZero

RING_ORDERS = [4, 5, 8, 10, 12]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _phi_brute(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _random_cyc(rng, order):
    width = euler_phi(order)
    return CycInt(order, tuple(rng.randint(-9, 9) for _ in range(width)))


def test_cyclotomic_small_cases():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)


def test_cyclotomic_product_identity():
    for n in range(1, 31):
        prod = [1]
        for d in divisors(n):
            prod = _poly_mul(prod, list(cyclotomic_poly(d)))
        expected = [-1] + [0] * (n - 1) + [1]
        assert prod == expected, f"divisor product broke at n={n}"


def test_cyclotomic_degree_is_phi():
    for n in range(1, 31):
        poly = cyclotomic_poly(n)
        assert len(poly) - 1 == _phi_brute(n)
        assert poly[-1] == 1


def test_root_power_examples():
    assert root_power(4, 1).coeffs == (0, 1)
    assert root_power(4, 2).coeffs == (-1, 0)
    for n in range(1, 13):
        assert root_power(n, n) == CycInt.one(n)
        assert root_power(n, 7) == root_power(n, 7 + n)
        assert root_power(n, -1) == root_power(n, n - 1)


def test_root_power_matches_unit_circle():
    for n in range(1, 13):
        for k in range(n):
            got = root_power(n, k).to_complex()
            want = cmath.exp(-2j * cmath.pi * k / n)
            assert abs(got - want) <= 1e-12


def test_omega4_squared_is_minus_one():
    w = root_power(4, 1)
    assert w * w == CycInt.from_int(4, -1)


def test_phi3_relation_normalizes_to_zero():
    total = CycInt.one(3) + root_power(3, 1) + root_power(3, 2)
    assert total.is_zero()


def test_additive_identity():
    rng = random.Random(101)
    for order in RING_ORDERS:
        zero = CycInt.zero(order)
        for _ in range(20):
            a = _random_cyc(rng, order)
            assert a + zero == a
            assert a - a == zero


def test_ring_axioms_random_triples():
    rng = random.Random(202)
    for order in RING_ORDERS:
        for _ in range(100):
            a = _random_cyc(rng, order)
            b = _random_cyc(rng, order)
            c = _random_cyc(rng, order)
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_zero_product_spot_check():
    # Z[w_N] is an integral domain; nonzero pairs keep nonzero products.
    rng = random.Random(303)
    checked = 0
    while checked < 100:
        order = rng.choice(RING_ORDERS)
        a = _random_cyc(rng, order)
        b = _random_cyc(rng, order)
        if a.is_zero() or b.is_zero():
            continue
        assert not (a * b).is_zero()
        checked += 1


def test_scalar_canonical_reduction():
    two_fourths = ExactScalar(CycInt.from_int(1, 2), 4)
    assert two_fourths.den == 2
    assert two_fourths.num == CycInt.from_int(1, 1)
    assert ExactScalar(CycInt.from_int(1, -6), 4).den == 2


def test_scalar_field_ops():
    rng = random.Random(404)
    for order in (1, 4, 5, 8):
        for _ in range(25):
            num = _random_cyc(rng, order)
            if num.is_zero():
                continue
            s = ExactScalar(num, rng.randint(1, 9))
            t = ExactScalar(_random_cyc(rng, order), rng.randint(1, 9))
            assert (t + s) - s == t
            assert (t * s) / s == t
            assert s * s.inverse() == 1


def test_division_by_zero_raises():
    one = ExactScalar.from_int(4, 1)
    zero = ExactScalar.zero(4)
    with pytest.raises(DivisionByZero):
        one / zero
    with pytest.raises(DivisionByZero):
        zero.inverse()


def test_scalar_to_complex_tracks_denominator():
    s = ExactScalar(root_power(8, 3), 5)
    want = cmath.exp(-2j * cmath.pi * 3 / 8) / 5
    assert abs(s.to_complex() - want) <= 1e-12


def test_number_theory_helpers():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert [n for n in range(1, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime_power(8) and is_prime_power(9) and is_prime_power(13)
    assert not is_prime_power(1) and not is_prime_power(10) and not is_prime_power(12)
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
