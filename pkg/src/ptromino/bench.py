"""Wall-clock scaling of ``count_tilings`` on generated tileable regions."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .counting import count_tilings
from .instances import GenSpec, generate_tileable


@dataclass(frozen=True)
class BenchRow:
    n: int
    median_seconds: float
    times: tuple


def loglog_slope(ns: Sequence[float], seconds: Sequence[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    slope, _ = np.polyfit(np.log(np.asarray(ns, float)), np.log(np.asarray(seconds, float)), 1)
    return float(slope)


def time_count(n: int, seed: int, repeat: int = 5) -> BenchRow:
    r = generate_tileable(GenSpec(n, seed=seed))
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        count_tilings(r)
        times.append(time.perf_counter() - t0)
    return BenchRow(n, statistics.median(times), tuple(times))


def run_bench(sizes: Sequence[int], seed: int, repeat: int = 5) -> List[BenchRow]:
    # compile the kernels before timing anything
    count_tilings(generate_tileable(GenSpec(30, seed=seed)))
    return [time_count(n, seed, repeat) for n in sizes]


def format_table(rows: Sequence[BenchRow]) -> str:
    lines = [f"{'n':>10}  {'median_s':>10}"]
    lines += [f"{row.n:>10}  {row.median_seconds:>10.4f}" for row in rows]
    if len(rows) >= 2:
        lines.append(f"slope {loglog_slope([r.n for r in rows], [r.median_seconds for r in rows]):.3f}")
    return "\n".join(lines) + "\n"
