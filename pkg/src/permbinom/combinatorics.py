"""Binomial coefficients mod 2 and the symbolic Hermite coefficient.

Expanding (x^i + a x)^t = sum_k C(t, k) a^(t-k) x^(t + (i-1)k), the
coefficient of x^(q-1) after reduction mod x^q - x collects the k with
t + (i-1)k = 0 mod (q-1) and C(t, k) odd.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .field import FieldSpec


def lucas_binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2: 1 iff the bits of k are a subset of the bits of n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return int(k & ~n == 0)


@dataclass(frozen=True)
class CongruentIndexSet:
    t: int
    i: int
    modulus: int
    members: tuple[int, ...]
    surviving: tuple[int, ...]


def congruent_set(t: int, i: int, q_minus_1: int) -> CongruentIndexSet:
    if not 1 <= t <= q_minus_1 - 1:
        raise ValueError(f"t={t} outside [1, {q_minus_1 - 1}]")
    m = q_minus_1
    step_mod = m // gcd(i - 1, m)
    # solve (i-1) k = -t (mod m); k is determined mod m/g
    g = gcd(i - 1, m)
    if t % g:
        members: list[int] = []
    else:
        r = (i - 1) // g
        k0 = (-t // g) * pow(r, -1, step_mod) % step_mod if step_mod > 1 else 0
        members = list(range(k0, t + 1, step_mod))
    surviving = [k for k in members if lucas_binom_mod2(t, k)]
    return CongruentIndexSet(t, i, m, tuple(members), tuple(surviving))


def binomial_power_coeff(spec: FieldSpec, i: int, a: int, t: int) -> int:
    """Sum of a^(t-k) over the surviving k of congruent_set(t, i, q-1)."""
    if a == 0:
        raise ValueError("coefficient must be nonzero")
    la = spec.log(a)
    acc = 0
    for k in congruent_set(t, i, spec.order_mult).surviving:
        acc ^= spec.exp(la * (t - k))
    return acc
