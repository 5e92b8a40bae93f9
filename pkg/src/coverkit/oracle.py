"""Brute-force reference checks over full periods, plus the window/full
benchmark.

Every fast windowed criterion elsewhere in the package is anchored by an
exhaustive scan here.  The scans reuse the int64 kernels (falling back to
exact big-integer code when scaling would overflow), but they never consult
the window theorems themselves.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .covering import (
    DEFAULT_ORACLE_CAP,
    PeriodicValueTable,
    System,
    Verdict,
    first_mismatch,
    sum_tables_window,
    tables_scaled,
    verify_covering_function,
)
from .fracsets import phi_sum_cardinality
from .numtheory import divisors_of

__all__ = [
    "brute_cover_verdict",
    "brute_tables_zero_verdict",
    "brute_least_period",
    "BenchReport",
    "bench_window_vs_full",
]


def brute_cover_verdict(
    system: System, target: PeriodicValueTable, cap: int = DEFAULT_ORACLE_CAP
) -> Verdict:
    """Compare w with the target on every point of one full common period."""
    N = math.lcm(system.lcm(), target.period)
    if N > cap:
        raise ValueError(f"period too large: lcm {N} exceeds cap {cap}")
    x = first_mismatch(system, target, 0, N)
    return Verdict(True) if x is None else Verdict(False, x)


def brute_tables_zero_verdict(
    psis: list[PeriodicValueTable], cap: int = DEFAULT_ORACLE_CAP
) -> Verdict:
    """Check sum_s psi_s(x) = 0 on every point of one full common period."""
    N = math.lcm(*(t.period for t in psis))
    if N > cap:
        raise ValueError(f"period too large: lcm {N} exceeds cap {cap}")
    scaled = tables_scaled(psis, 0, N)
    if scaled is not None:
        arr, _ = scaled
        if arr.any():
            return Verdict(False, int(arr.astype(bool).argmax()))
        return Verdict(True)
    for x, v in enumerate(sum_tables_window(psis, 0, N)):
        if v != 0:
            return Verdict(False, x)
    return Verdict(True)


def brute_least_period(table: PeriodicValueTable) -> int:
    """Smallest divisor d of the period with table(x) = table(x+d) for all x."""
    vals = [Fraction(v) for v in table.values]
    D = math.lcm(*(v.denominator for v in vals))
    nums = [int(v * D) for v in vals]
    if max(abs(v) for v in nums) < 2**62:
        arr = np.asarray(nums, dtype=np.int64)
        for d in divisors_of(table.period):
            if np.array_equal(arr, np.roll(arr, -d)):
                return d
    for d in divisors_of(table.period):
        if all(nums[x] == nums[(x + d) % table.period] for x in range(table.period)):
            return d
    raise AssertionError("the full period is always a period")


@dataclass(frozen=True)
class BenchReport:
    """Timing contrast of the window check against the full-period scan."""

    moduli: tuple[int, ...]
    window_points: int
    full_points: int
    t_window_ns: int
    t_full_ns: int
    agree: bool
    window_verdict: Verdict
    full_verdict: Verdict

    def machine_line(self) -> str:
        return (
            f"bench|moduli={','.join(map(str, self.moduli))}"
            f"|S={self.window_points}|N={self.full_points}"
            f"|t_window_ns={self.t_window_ns}|t_full_ns={self.t_full_ns}"
            f"|agree={'true' if self.agree else 'false'}"
        )


def bench_window_vs_full(
    system: System, target: PeriodicValueTable, cap: int = DEFAULT_ORACLE_CAP
) -> BenchReport:
    """Run the windowed verification and the exhaustive one, check they
    agree, and report the point counts and wall times of both.

    One untimed warmup run precedes the measurements so kernel compilation
    never lands in the timings.  This is an illustrative contrast, not a
    statistically careful benchmark.
    """
    window_points = phi_sum_cardinality(system.moduli + [target.period])
    full_points = math.lcm(system.lcm(), target.period)

    verify_covering_function(system, target)
    brute_cover_verdict(system, target, cap)

    t0 = time.perf_counter_ns()
    wv = verify_covering_function(system, target)
    t_window = time.perf_counter_ns() - t0

    t0 = time.perf_counter_ns()
    fv = brute_cover_verdict(system, target, cap)
    t_full = time.perf_counter_ns() - t0

    agree = wv.ok == fv.ok
    assert agree, f"window verdict {wv} disagrees with full-period verdict {fv}"
    return BenchReport(
        tuple(system.moduli), window_points, full_points, t_window, t_full, agree, wv, fv
    )
