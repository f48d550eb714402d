"""Three independent ways of deciding whether x^i + a*x permutes GF(2^n).

The scalar testers here are the reference versions.  The ``*_batch``
variants decide many coefficients at once for a fixed exponent and are what
the search engine calls.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .field import FieldSpec


@dataclass(frozen=True)
class BinomialSpec:
    field: FieldSpec
    i: int
    a: int

    def __post_init__(self):
        q = self.field.q
        if not 2 <= self.i <= q - 2:
            raise ValueError(f"exponent {self.i} outside [2, {q - 2}]")
        if not 0 < self.a < q:
            raise ValueError(f"coefficient {self.a:#x} must be a nonzero element")


def evaluate(b: BinomialSpec) -> np.ndarray:
    """f(c) for every c in GF(q), indexed by c."""
    spec = b.field
    qm1 = spec.order_mult
    lc = spec.log_table[1:]
    out = np.zeros(spec.q, dtype=np.int64)
    out[1:] = spec.exp_table[(lc * b.i) % qm1] ^ spec.exp_table[lc + spec.log(b.a)]
    return out


def is_pp_direct(b: BinomialSpec) -> bool:
    spec = b.field
    qm1 = spec.order_mult
    log, exp = spec.log_list, spec.exp_list
    i, la = b.i, log[b.a]
    seen = 1  # f(0) = 0
    for c in range(1, spec.q):
        lc = log[c]
        bit = 1 << (exp[lc * i % qm1] ^ exp[lc + la])
        if seen & bit:
            return False
        seen |= bit
    return True


def root_count_check(b: BinomialSpec) -> bool:
    """True iff 0 is the only root, i.e. a is not an (i-1)-th power."""
    qm1 = b.field.order_mult
    s = gcd(b.i - 1, qm1)
    return b.field.log(b.a) % s != 0


def _power_sums(spec: FieldSpec, values: np.ndarray, ts: np.ndarray) -> np.ndarray:
    """sum_c values[c]^t for each t (t >= 1, so zero values contribute nothing)."""
    nz = values[values != 0]
    logs = spec.log_table[nz]
    terms = spec.exp_table[np.outer(ts, logs) % spec.order_mult]
    return np.bitwise_xor.reduce(terms, axis=1) if len(nz) else np.zeros(len(ts), np.int64)


def hermite_power_sum(b: BinomialSpec, t: int) -> int:
    """Coefficient of x^(q-1) in (x^i + a x)^t mod (x^q - x), as sum_c f(c)^t."""
    if not 1 <= t <= b.field.q - 2:
        raise ValueError(f"t={t} outside [1, {b.field.q - 2}]")
    return int(_power_sums(b.field, evaluate(b), np.array([t]))[0])


def is_pp_hermite(b: BinomialSpec, block: int = 64) -> bool:
    if not root_count_check(b):
        return False
    values = evaluate(b)
    top = b.field.q - 2
    for start in range(1, top + 1, block):
        ts = np.arange(start, min(start + block, top + 1))
        if np.any(_power_sums(b.field, values, ts)):
            return False
    return True


def _values_batch(spec: FieldSpec, i: int, a_logs: np.ndarray, c_logs: np.ndarray) -> np.ndarray:
    """f(c) for a = g^a_logs (rows) and c = g^c_logs (columns)."""
    qm1 = spec.order_mult
    ci = spec.exp_table[(c_logs * i) % qm1]
    return ci[None, :] ^ spec.exp_table[a_logs[:, None] + c_logs[None, :]]


def direct_batch(spec: FieldSpec, i: int, a_logs: np.ndarray, chunk: int = 64) -> np.ndarray:
    """Vectorised direct test with an occupancy mask per coefficient.

    Columns of the evaluation grid are processed in growing chunks; a row
    drops out as soon as it hits a collision.
    """
    a_logs = np.asarray(a_logs, dtype=np.int64)
    q = spec.q
    alive = np.arange(len(a_logs))
    occ = np.zeros((len(a_logs), q), dtype=bool)
    occ[:, 0] = True  # f(0) = 0
    start = 0
    qm1 = spec.order_mult
    while start < qm1 and len(alive):
        stop = min(start + chunk, qm1)
        vals = _values_batch(spec, i, a_logs[alive], np.arange(start, stop))
        rows = occ[alive]
        hit = np.take_along_axis(rows, vals, axis=1).any(axis=1)
        srt = np.sort(vals, axis=1)
        hit |= (srt[:, 1:] == srt[:, :-1]).any(axis=1)
        keep = ~hit
        alive = alive[keep]
        vals = vals[keep]
        occ[alive[:, None], vals] = True
        start = stop
        chunk *= 2
    ok = np.zeros(len(a_logs), dtype=bool)
    ok[alive] = True
    return ok


def hermite_batch(spec: FieldSpec, i: int, a_logs) -> np.ndarray:
    return np.array(
        [is_pp_hermite(BinomialSpec(spec, i, spec.exp(int(la)))) for la in a_logs],
        dtype=bool,
    )
