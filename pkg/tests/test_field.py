import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from permbinom.field import (
    build_field, clmul, divisors, enumerate_mu, in_mu, mul, norm_to_subfield,
    order, poly_mod, pow_,
)


def _gcd_poly(a, b):
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _xpow2k_mod(k, f):
    x = 2
    for _ in range(k):
        x = poly_mod(clmul(x, x), f)
    return x


def ben_or_irreducible(f):
    """Independent oracle: gcd(f, x^(2^k) - x) == 1 for k <= n/2."""
    n = f.bit_length() - 1
    return all(_gcd_poly(f, _xpow2k_mod(k, f) ^ 2) == 1 for k in range(1, n // 2 + 1))


@pytest.mark.parametrize("n", range(2, 13))
def test_reduction_poly_is_smallest_irreducible(n):
    spec = build_field(n)
    first = next(f for f in range(1 << n, 1 << (n + 1)) if f & 1 and ben_or_irreducible(f))
    assert spec.reduction_poly == first


def test_known_reduction_polys():
    assert build_field(1).reduction_poly == 3
    assert build_field(3).reduction_poly == 0b1011


@pytest.mark.parametrize("n", [8, 16])
def test_reduction_poly_degree_and_irreducible(n):
    f = build_field(n).reduction_poly
    assert f.bit_length() - 1 == n
    assert ben_or_irreducible(f)
    # x^(2^n) = x mod f for a degree-n irreducible
    assert _xpow2k_mod(n, f) == 2


@pytest.mark.parametrize("n", [0, 17, -1])
def test_degree_out_of_range(n):
    with pytest.raises(ValueError):
        build_field(n)


@pytest.mark.parametrize("n", range(1, 17))
def test_tables_are_inverse_bijections(n):
    spec = build_field(n)
    qm1 = spec.order_mult
    logs = spec.log_table[1:]
    assert sorted(logs.tolist()) == list(range(qm1))
    assert np.array_equal(spec.exp_table[logs], np.arange(1, spec.q))
    assert np.array_equal(spec.exp_table[:qm1], spec.exp_table[qm1:])


@pytest.mark.parametrize("n", range(2, 17))
def test_generator_is_primitive_and_smallest(n):
    spec = build_field(n)
    qm1 = spec.order_mult
    assert pow_(spec, spec.generator, qm1) == 1
    assert order(spec, spec.generator) == qm1
    for c in range(2, spec.generator):
        assert order(spec, c) < qm1


def test_gf8_hand_reduction():
    spec = build_field(3)
    assert mul(spec, 0b010, 0b100) == 0b011


def test_mul_identity_and_zero(small_field):
    for x in range(small_field.q):
        assert mul(small_field, x, 0) == 0
        assert mul(small_field, x, 1) == x


def test_mul_matches_log_tables(small_field):
    spec = small_field
    for x, y in itertools.product(range(1, spec.q), repeat=2):
        assert mul(spec, x, y) == spec.exp_table[spec.log_table[x] + spec.log_table[y]]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_field_axioms_exhaustive(n):
    spec = build_field(n)
    els = range(spec.q)
    for x, y, z in itertools.product(els, repeat=3):
        assert mul(spec, x, y) == mul(spec, y, x)
        assert mul(spec, mul(spec, x, y), z) == mul(spec, x, mul(spec, y, z))
        assert mul(spec, x, y ^ z) == mul(spec, x, y) ^ mul(spec, x, z)


@given(st.integers(5, 16).flatmap(
    lambda n: st.tuples(st.just(n), *[st.integers(0, (1 << n) - 1)] * 3)))
def test_field_axioms_sampled(args):
    n, x, y, z = args
    spec = build_field(n)
    assert mul(spec, x, y) == mul(spec, y, x)
    assert mul(spec, mul(spec, x, y), z) == mul(spec, x, mul(spec, y, z))
    assert mul(spec, x, y ^ z) == mul(spec, x, y) ^ mul(spec, x, z)


@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_additive(n):
    spec = build_field(n)
    for x, y in itertools.product(range(spec.q), repeat=2):
        assert pow_(spec, x ^ y, 2) == pow_(spec, x, 2) ^ pow_(spec, y, 2)


def test_pow_conventions():
    spec = build_field(6)
    g, qm1 = spec.generator, spec.order_mult
    assert pow_(spec, g, qm1) == 1
    assert pow_(spec, g, qm1 // 2 + qm1) == pow_(spec, g, qm1 // 2)
    assert pow_(spec, 0, 0) == 1
    assert pow_(spec, 0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        pow_(spec, 0, -1)
    for x in range(1, spec.q):
        assert mul(spec, x, pow_(spec, x, -1)) == 1


def test_order_examples():
    spec = build_field(6)
    g = spec.generator
    assert order(spec, 1) == 1
    assert order(spec, g) == 63
    assert order(spec, pow_(spec, g, 9)) == 7
    with pytest.raises(ValueError):
        order(spec, 0)


def test_order_by_repeated_multiplication(small_field):
    spec = small_field
    for x in range(1, spec.q):
        k, y = 1, x
        while y != 1:
            y = mul(spec, y, x)
            k += 1
        assert order(spec, x) == k
        assert spec.order_mult % k == 0


def test_in_mu_examples():
    spec = build_field(6)
    g9 = pow_(spec, spec.generator, 9)
    assert in_mu(spec, g9, 7)
    assert not in_mu(spec, g9, 3)
    for d in divisors(63):
        assert in_mu(spec, 1, d)
    with pytest.raises(ValueError):
        in_mu(spec, g9, 5)
    spec12 = build_field(12)
    assert in_mu(spec12, pow_(spec12, spec12.generator, 45), 91)


def test_enumerate_mu_examples():
    spec = build_field(6)
    g = spec.generator
    assert enumerate_mu(spec, 1) == [1]
    assert enumerate_mu(spec, 3) == [1, pow_(spec, g, 21), pow_(spec, g, 42)]
    with pytest.raises(ValueError):
        enumerate_mu(spec, 4)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_enumerate_mu_is_subgroup(n):
    spec = build_field(n)
    for d in divisors(spec.order_mult):
        mu = enumerate_mu(spec, d)
        assert len(mu) == d == len(set(mu))
        group = set(mu)
        assert all(in_mu(spec, u, d) for u in mu)
        if d <= 65:
            assert all(mul(spec, u, v) in group for u in mu for v in mu)
        assert all(pow_(spec, u, -1) in group for u in mu)


def test_norm_examples():
    spec = build_field(8)
    assert norm_to_subfield(spec, 1, 2) == 1
    assert norm_to_subfield(spec, 0, 2) == 0
    assert norm_to_subfield(spec, spec.generator, 2) == pow_(spec, spec.generator, 85)
    assert order(spec, norm_to_subfield(spec, spec.generator, 2)) == 3
    with pytest.raises(ValueError):
        norm_to_subfield(spec, 1, 3)


@pytest.mark.parametrize("n,m", [(6, 2), (6, 3), (8, 4), (12, 3), (12, 4), (16, 4)])
def test_norm_lands_in_subfield(n, m):
    spec = build_field(n)
    sub = (1 << m) - 1
    for x in range(1, spec.q, max(1, spec.q // 512)):
        y = norm_to_subfield(spec, x, m)
        assert sub % order(spec, y) == 0
        assert pow_(spec, y, 1 << m) == y
    assert order(spec, norm_to_subfield(spec, spec.generator, m)) == sub
