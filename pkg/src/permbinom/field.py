"""Arithmetic in GF(2^n), 1 <= n <= 16.

Elements are plain ints in polynomial basis: bit k is the coefficient of x^k.
Addition is XOR.  Every field carries precomputed discrete-log tables with
respect to a fixed primitive element, and the field model (reduction
polynomial, generator) is pinned so that integer encodings of results are
reproducible:

* reduction polynomial: the smallest irreducible of degree n, as an integer;
* generator: the smallest integer that is a primitive element.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

MAX_DEGREE = 16

FieldElement = int


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    da = poly_degree(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = poly_degree(a)
    return a


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2.

    x itself is rejected: a field modulus needs a nonzero constant term.
    """
    n = poly_degree(p)
    if n < 1 or not p & 1:
        return False
    for d in range(2, 1 << (n // 2 + 1)):
        if poly_mod(p, d) == 0:
            return False
    return True


def smallest_irreducible(n: int) -> int:
    for p in range(1 << n, 1 << (n + 1)):
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


def prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(clmul(a, b), m)


def _powmod(x: int, k: int, m: int) -> int:
    r = 1
    while k:
        if k & 1:
            r = _mulmod(r, x, m)
        x = _mulmod(x, x, m)
        k >>= 1
    return r


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(2^n) with pinned model and log/exp tables.

    ``exp_table`` has length 2(q-1) so that ``exp_table[i + j]`` works for
    logs i, j in [0, q-2] without a modulo.  ``log_table[0]`` is -1.
    """

    n: int
    reduction_poly: int
    generator: int
    log_table: np.ndarray = field(repr=False)
    exp_table: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return 1 << self.n

    @property
    def order_mult(self) -> int:
        return (1 << self.n) - 1

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValueError(f"{x:#x} is not an element of GF(2^{self.n})")
        return x

    def log(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return int(self.log_table[x])

    def exp(self, k: int) -> int:
        return int(self.exp_table[k % self.order_mult])

    @cached_property
    def log_list(self) -> list[int]:
        return self.log_table.tolist()

    @cached_property
    def exp_list(self) -> list[int]:
        return self.exp_table.tolist()

    def header(self) -> dict:
        return {
            "n": self.n,
            "reduction_poly": hex(self.reduction_poly),
            "generator": hex(self.generator),
        }


def _is_primitive(g: int, m: int, n: int) -> bool:
    order = (1 << n) - 1
    if _powmod(g, order, m) != 1:
        return False
    return all(_powmod(g, order // p, m) != 1 for p in prime_factors(order))


@lru_cache(maxsize=None)
def build_field(n: int) -> FieldSpec:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be in [1, {MAX_DEGREE}], got {n}")
    m = smallest_irreducible(n)
    q = 1 << n
    if n == 1:
        g = 1
    else:
        g = next(c for c in range(2, q) if _is_primitive(c, m, n))
    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    x = 1
    for k in range(q - 1):
        exp[k] = x
        log[x] = k
        x = _mulmod(x, g, m)
    exp[q - 1:] = exp[: q - 1]
    exp.setflags(write=False)
    log.setflags(write=False)
    return FieldSpec(n, m, g, log, exp)


def mul(spec: FieldSpec, x: int, y: int) -> int:
    return poly_mod(clmul(x, y), spec.reduction_poly)


def inv(spec: FieldSpec, x: int) -> int:
    return pow_(spec, x, -1)


def pow_(spec: FieldSpec, x: int, k: int) -> int:
    """x^k; negative k allowed for nonzero x, 0^0 = 1."""
    if x == 0:
        if k < 0:
            raise ZeroDivisionError("zero raised to a negative power")
        return 1 if k == 0 else 0
    return _powmod(x, k % spec.order_mult, spec.reduction_poly)


def order(spec: FieldSpec, x: int) -> int:
    if x == 0:
        raise ValueError("zero has no multiplicative order")
    qm1 = spec.order_mult
    return qm1 // gcd(spec.log(x), qm1)


def _check_divisor(spec: FieldSpec, d: int) -> None:
    if d < 1 or spec.order_mult % d:
        raise ValueError(f"{d} does not divide q-1 = {spec.order_mult}")


def in_mu(spec: FieldSpec, x: int, d: int) -> bool:
    """Is x a d-th root of unity?"""
    _check_divisor(spec, d)
    return d % order(spec, x) == 0


def enumerate_mu(spec: FieldSpec, d: int) -> list[int]:
    _check_divisor(spec, d)
    step = spec.order_mult // d
    return [int(spec.exp_table[k * step]) for k in range(d)]


def norm_to_subfield(spec: FieldSpec, x: int, m: int) -> int:
    """Norm down to the subfield GF(2^m), i.e. x^((2^n-1)/(2^m-1))."""
    if m < 1 or spec.n % m:
        raise ValueError(f"{m} does not divide {spec.n}")
    return pow_(spec, x, spec.order_mult // ((1 << m) - 1))


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]
