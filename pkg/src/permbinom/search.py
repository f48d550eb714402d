"""Exhaustive classification of x^i + a x over GF(2^n).

For each exponent i the coefficients are first filtered by the root count
(a must not be an (i-1)-th power, i.e. log a is not a multiple of s), then
handed to a tester.  With ``a_reduction`` only one coefficient per class is
tested, where a ~ a * c^(i-1) (cosets of mu_d, so classes are log a mod s)
and a ~ a^2 (doubling of the class mod s); validity is constant on classes.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Optional

import numpy as np

from .agw import agw_batch, compute_index
from .field import FieldSpec, build_field
from .permtest import direct_batch, hermite_batch
from .theorems import theorem_tags_for

TESTERS = ("auto", "direct", "agw", "hermite", "cross-check")
WORKERS_ENV = "PERMBINOM_WORKERS"
FULL_LIST_MAX_N = 8
HERMITE_MAX_N = 10


class TesterDisagreement(RuntimeError):
    __test__ = False


@dataclass
class SearchConfig:
    n: int
    tester: str = "auto"
    skip_linearized: bool = False
    i_range: Optional[tuple[int, int]] = None
    a_reduction: bool = True
    workers: Optional[int] = None

    def validate(self) -> None:
        if not 2 <= self.n <= 16:
            raise ValueError(f"n must be in [2, 16], got {self.n}")
        if self.tester not in TESTERS:
            raise ValueError(f"unknown tester {self.tester!r}")
        if self.tester in ("hermite", "cross-check") and self.n > HERMITE_MAX_N:
            raise ValueError(f"{self.tester} tester refused for n > {HERMITE_MAX_N}")
        if self.tester == "direct" and self.n > 12 and not self.a_reduction:
            raise ValueError("unreduced direct search limited to n <= 12")
        if self.i_range is not None:
            lo, hi = self.i_range
            q = 1 << self.n
            if not 2 <= lo <= hi <= q - 2:
                raise ValueError(f"exponent range {lo}-{hi} outside [2, {q - 2}]")

    def exponents(self) -> list[int]:
        q = 1 << self.n
        lo, hi = self.i_range or (2, q - 2)
        return [i for i in range(lo, hi + 1)
                if not (self.skip_linearized and is_linearized(i))]


@dataclass
class PBRecord:
    n: int
    i: int
    index_d: int
    linearized: bool
    valid_count: int
    valid_a: list[int]
    elided: bool = False
    valid_a_min: Optional[int] = None
    valid_a_max: Optional[int] = None
    theorem_tags: list[str] = field(default_factory=list)


def is_linearized(i: int) -> bool:
    return i > 1 and i & (i - 1) == 0


def classify_linearized(spec: FieldSpec, j: int):
    """Predicate on a for x^(2^j) + a x: a is not a (2^gcd(j,n) - 1)-th power."""
    if not 1 <= j < spec.n:
        raise ValueError(f"j must be in [1, {spec.n - 1}]")
    e = spec.order_mult // ((1 << gcd(j, spec.n)) - 1)

    def pred(a: int) -> bool:
        return a != 0 and spec.log(a) * e % spec.order_mult != 0
    return pred


def _doubling_orbits(s: int) -> list[list[int]]:
    """Orbits of x -> 2x on the nonzero residues mod s (s odd)."""
    seen = set()
    orbits = []
    for j in range(1, s):
        if j in seen:
            continue
        orb = []
        k = j
        while k not in seen:
            seen.add(k)
            orb.append(k)
            k = 2 * k % s
        orbits.append(orb)
    return orbits


def _run_tester(spec: FieldSpec, i: int, a_logs: np.ndarray, tester: str, d: int) -> np.ndarray:
    if tester == "auto":
        tester = "agw" if d * d <= spec.q else "direct"
    if tester == "direct":
        return direct_batch(spec, i, a_logs)
    if tester == "agw":
        return agw_batch(spec, i, a_logs)
    if tester == "hermite":
        return hermite_batch(spec, i, a_logs)
    if tester == "cross-check":
        res = [direct_batch(spec, i, a_logs), agw_batch(spec, i, a_logs),
               hermite_batch(spec, i, a_logs)]
        if not (np.array_equal(res[0], res[1]) and np.array_equal(res[0], res[2])):
            bad = np.flatnonzero((res[0] != res[1]) | (res[0] != res[2]))
            raise TesterDisagreement(
                f"n={spec.n} i={i}: testers disagree at a=g^{int(a_logs[bad[0]])}")
        return res[0]
    raise ValueError(f"unknown tester {tester!r}")


def classify_exponent(spec: FieldSpec, i: int, tester: str = "auto",
                      a_reduction: bool = True) -> list[int]:
    """Sorted integer encodings of every a making x^i + a x a permutation."""
    form = compute_index(spec, i)
    s = form.s
    if s == 1:
        return []
    qm1 = spec.order_mult
    logs = np.arange(qm1)
    if a_reduction:
        orbits = _doubling_orbits(s)
        reps = np.array([orb[0] for orb in orbits], dtype=np.int64)
        ok = _run_tester(spec, i, reps, tester, form.d)
        good = np.zeros(s, dtype=bool)
        for orb, flag in zip(orbits, ok):
            if flag:
                good[orb] = True
        valid_logs = logs[good[logs % s]]
    else:
        cand = logs[logs % s != 0]
        valid_logs = cand[_run_tester(spec, i, cand, tester, form.d)]
    return sorted(spec.exp_table[valid_logs].tolist())


def make_record(spec: FieldSpec, i: int, valid: list[int]) -> PBRecord:
    rec = PBRecord(
        n=spec.n, i=i, index_d=compute_index(spec, i).d,
        linearized=is_linearized(i), valid_count=len(valid), valid_a=list(valid),
        theorem_tags=theorem_tags_for(spec.n, i),
    )
    if valid:
        rec.valid_a_min, rec.valid_a_max = valid[0], valid[-1]
    if spec.n > FULL_LIST_MAX_N and valid:
        rec.valid_a = [valid[len(valid) // 2]]
        rec.elided = True
    return rec


def _classify_chunk(args) -> list[tuple[int, list[int]]]:
    n, tester, a_reduction, exps = args
    spec = build_field(n)
    return [(i, classify_exponent(spec, i, tester, a_reduction)) for i in exps]


def resolve_workers(config: SearchConfig) -> int:
    if config.workers:
        return max(1, config.workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return 1


def search_field(config: SearchConfig) -> list[PBRecord]:
    config.validate()
    spec = build_field(config.n)
    exps = config.exponents()
    workers = resolve_workers(config)
    if workers == 1:
        results = _classify_chunk((config.n, config.tester, config.a_reduction, exps))
    else:
        chunks = [exps[k::workers * 4] for k in range(workers * 4)]
        jobs = [(config.n, config.tester, config.a_reduction, c) for c in chunks if c]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_classify_chunk, jobs) for r in part]
    results.sort()
    return [make_record(spec, i, valid) for i, valid in results if valid]


def auto_threshold(q: int) -> int:
    """Largest index for which the auto tester picks the AGW route."""
    return isqrt(q)
