"""Index decomposition of x^i + a x and the multiplicative AGW reduction.

Writing x^i + a x = x((x^s)^e + a) with s = gcd(i-1, q-1), the binomial
permutes GF(q) iff u -> u (u^e + a)^s permutes the d = (q-1)/s roots of
unity.  Elements of mu_d are handled by their logs, which are multiples of s.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .field import FieldSpec, enumerate_mu, in_mu, inv, mul, pow_
from .permtest import BinomialSpec, is_pp_direct


class PreconditionError(ValueError):
    """Inputs fall outside the domain where a check is meaningful."""


@dataclass(frozen=True)
class IndexForm:
    i: int
    s: int
    d: int
    e: int


def compute_index(spec: FieldSpec, i: int) -> IndexForm:
    qm1 = spec.order_mult
    if not 2 <= i <= qm1 - 1:
        raise ValueError(f"exponent {i} outside [2, {qm1 - 1}]")
    s = gcd(i - 1, qm1)
    return IndexForm(i=i, s=s, d=qm1 // s, e=(i - 1) // s)


def agw_reduced_map(spec: FieldSpec, form: IndexForm, a: int) -> dict[int, int]:
    """u -> u (u^e + a)^s on mu_d; 0 marks a root of u^e + a."""
    if a == 0:
        raise ValueError("coefficient must be nonzero")
    qm1 = spec.order_mult
    log, exp = spec.log_list, spec.exp_list
    s, se = form.s, form.s * form.e
    out = {}
    for k in range(form.d):
        w = exp[se * k % qm1] ^ a
        out[exp[s * k]] = exp[(s * k + s * log[w]) % qm1] if w else 0
    return out


def is_pp_via_agw(spec: FieldSpec, i: int, a: int) -> bool:
    form = compute_index(spec, i)
    if form.s == 1:
        return is_pp_direct(BinomialSpec(spec, i, a))
    images = agw_reduced_map(spec, form, a).values()
    return 0 not in images and len(set(images)) == form.d


def agw_batch(spec: FieldSpec, i: int, a_logs) -> np.ndarray:
    """is_pp_via_agw for many a = g^a_logs at once (O(d) per coefficient)."""
    a_logs = np.asarray(a_logs, dtype=np.int64)
    form = compute_index(spec, i)
    qm1 = spec.order_mult
    s, d = form.s, form.d
    k = np.arange(d)
    ue = spec.exp_table[(k * s * form.e) % qm1]
    w = ue[None, :] ^ spec.exp_table[a_logs][:, None]
    ok = ~(w == 0).any(axis=1)
    lw = spec.log_table[np.where(w == 0, 1, w)]
    img = (k[None, :] * s + lw * s) % qm1 // s
    img.sort(axis=1)
    ok &= (img == k[None, :]).all(axis=1)
    return ok


def f1_inverse_power_identity(spec: FieldSpec, a: int) -> bool:
    """Over GF(q^2), q = 2^m with m odd: u (u^6 + a)^(q-1) == a^-1 u^-5 on mu_(q+1).

    Raises PreconditionError unless a lies in mu_(q+1) but not mu_((q+1)/3).
    """
    if spec.n % 2 or (spec.n // 2) % 2 == 0 or spec.n < 6:
        raise PreconditionError("field must be GF(q^2) with q = 2^m, m odd >= 3")
    q = 1 << (spec.n // 2)
    if a == 0 or not in_mu(spec, a, q + 1) or in_mu(spec, a, (q + 1) // 3):
        raise PreconditionError(f"{a:#x} not in mu_(q+1) minus mu_((q+1)/3)")
    a_inv = inv(spec, a)
    for u in enumerate_mu(spec, q + 1):
        lhs = mul(spec, u, pow_(spec, pow_(spec, u, 6) ^ a, q - 1))
        rhs = mul(spec, a_inv, pow_(spec, u, -5))
        if lhs != rhs:
            return False
    return True
