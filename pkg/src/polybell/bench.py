"""Micro-benchmarks for series composition and reversion over the rationals.

The workload series is the Bell-number generating function exp(exp(t)-1)-1,
whose coefficients grow fast enough to make exact-arithmetic costs visible.
Reversion compares Newton iteration against the quadratically slower
Lagrange coefficient formula and refuses to report timings unless both
algorithms produced structurally identical series; composition times the
Horner scheme that builds the workload itself.

Wall times are the minimum over ``reps`` runs; coefficient multiplication
counts come from the series engine's instrumentation and are identical
across runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .bell import gf_bell_numbers
from .series import TruncatedSeries, count_coeff_mults
from .special import exp_minus_one

MIN_ORDER = 8

WORKLOADS = ("compose", "revert")


@dataclass(frozen=True)
class AlgorithmTiming:
    algorithm: str
    wall_s: float
    coeff_mults: int


@dataclass(frozen=True)
class BenchReport:
    workload: str
    order: int
    reps: int
    series_equal: bool
    results: tuple[AlgorithmTiming, ...]


def _time_algorithm(
    name: str, reps: int, run: Callable[[], TruncatedSeries]
) -> tuple[AlgorithmTiming, TruncatedSeries]:
    best = None
    mults = 0
    value: TruncatedSeries | None = None
    for _ in range(reps):
        with count_coeff_mults() as counter:
            start = time.perf_counter()
            value = run()
            elapsed = time.perf_counter() - start
        mults = counter.mults
        best = elapsed if best is None else min(best, elapsed)
    assert value is not None
    return AlgorithmTiming(algorithm=name, wall_s=best, coeff_mults=mults), value


def run_bench(workload: str, order: int, reps: int = 1) -> BenchReport:
    """Time one workload; raises ValueError on unusable parameters."""
    if workload not in WORKLOADS:
        raise ValueError(f"unknown workload {workload!r}")
    if order < MIN_ORDER:
        raise ValueError(f"benchmark order must be >= {MIN_ORDER}")
    if reps < 1:
        raise ValueError("reps must be >= 1")

    if workload == "compose":
        outer = exp_minus_one(order)
        timing, _ = _time_algorithm(
            "horner_compose", reps, lambda: outer.compose(outer)
        )
        return BenchReport(
            workload=workload,
            order=order,
            reps=reps,
            series_equal=True,
            results=(timing,),
        )

    target = gf_bell_numbers(order)
    newton, newton_series = _time_algorithm("newton", reps, target.revert)
    lagrange, lagrange_series = _time_algorithm(
        "lagrange", reps, target.revert_lagrange
    )
    equal = newton_series == lagrange_series
    if not equal:
        raise AssertionError(
            "reversion algorithms disagree; refusing to report timings"
        )
    return BenchReport(
        workload=workload,
        order=order,
        reps=reps,
        series_equal=equal,
        results=(newton, lagrange),
    )
