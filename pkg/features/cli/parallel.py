"""
Parallel Verification
---------------------
Static partitioning of a verification range into disjoint sub-ranges,
scanned by a process pool capped at the CPU count, results merged in
range order.
"""
import logging
import multiprocessing
import os
from functools import reduce
from typing import Callable, Dict, List, Tuple

from errors import UsageError
from features.diophantus20 import (
    ScanResult,
    scan_diophantus20,
    scan_pq_square,
    scan_right_triangle_premise,
)
from features.fermat4 import scan_flt4
from utils import stopwatch

from .report import SearchReport, Task

logger = logging.getLogger(__name__)

SCANNERS: Dict[Task, Callable[[int, int], ScanResult]] = {
    Task.DIO20: scan_diophantus20,
    Task.FLT4: scan_flt4,
    Task.PQ_SQUARE: scan_pq_square,
    Task.RIGHT_TRIANGLE: scan_right_triangle_premise,
}


def partition_range(lo: int, hi: int, jobs: int) -> List[Tuple[int, int]]:
    """
    Split [lo, hi] into at most `jobs` contiguous disjoint inclusive ranges.

    Args:
        lo (int): First index
        hi (int): Last index, hi ≥ lo
        jobs (int): Maximum number of ranges, at least 1

    Returns:
        List of (start, end) pairs covering [lo, hi] in order; earlier
        ranges take the remainder, so sizes differ by at most one

    Raises:
        UsageError: jobs < 1 or lo > hi
    """
    if jobs < 1:
        raise UsageError(f"jobs must be at least 1, got {jobs}")
    if lo > hi:
        raise UsageError(f"empty range [{lo}, {hi}]")

    size = hi - lo + 1
    count = min(jobs, size)
    base, extra = divmod(size, count)
    ranges = []
    start = lo
    for index in range(count):
        length = base + (1 if index < extra else 0)
        ranges.append((start, start + length - 1))
        start += length
    return ranges


def worker_count(range_count: int) -> int:
    """Processes for range_count ranges: at most one per range and one per CPU."""
    return max(1, min(range_count, os.cpu_count() or 1))


def _run_scan(task: Task, lo: int, hi: int) -> ScanResult:
    logger.debug("worker scanning %s over [%d, %d]", task.value, lo, hi)
    return SCANNERS[task](lo, hi)


def run_verification(task: Task, bound: int, jobs: int = 1) -> SearchReport:
    """
    Exhaustively verify one task up to bound.

    Args:
        task (Task): Which search to run
        bound (int): Upper end of the outer index (q, z or m)
        jobs (int): Worker processes

    Returns:
        SearchReport: identical content for every jobs value

    Raises:
        UsageError: jobs < 1
    """
    if jobs < 1:
        raise UsageError(f"jobs must be at least 1, got {jobs}")

    logger.info("verifying %s up to %d with %d job(s)", task.value, bound, jobs)
    with stopwatch() as timing:
        ranges = partition_range(1, bound, jobs) if bound >= 1 else []
        if len(ranges) <= 1:
            results = [_run_scan(task, lo, hi) for lo, hi in ranges]
        else:
            with multiprocessing.Pool(processes=worker_count(len(ranges))) as pool:
                results = pool.starmap(_run_scan, [(task, lo, hi) for lo, hi in ranges])
        merged = reduce(ScanResult.merge, results, ScanResult())

    if merged.counterexamples:
        logger.warning("%s: %d counterexample(s) up to %d", task.value, len(merged.counterexamples), bound)
    logger.info("%s: %d states checked in %d ms", task.value, merged.states_checked, timing["elapsed_ms"])
    return SearchReport(
        task=task,
        bound=bound,
        states_checked=merged.states_checked,
        counterexamples=list(merged.counterexamples),
        elapsed_ms=timing["elapsed_ms"],
        jobs=jobs,
    )
