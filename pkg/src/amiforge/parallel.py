"""Deterministic block-partitioned parallelism.

Work is split into contiguous, ordered blocks before any worker starts, the
pool maps over them in order, and the caller merges with a final global sort,
so results are identical for any worker count.
"""

from __future__ import annotations

import multiprocessing


def partition_range(lo: int, hi: int, blocks: int) -> list[tuple[int, int]]:
    """Split [lo, hi) into at most `blocks` near-even contiguous spans."""
    n = hi - lo
    if n <= 0:
        return []
    blocks = max(1, min(blocks, n))
    step, extra = divmod(n, blocks)
    spans = []
    start = lo
    for i in range(blocks):
        end = start + step + (1 if i < extra else 0)
        spans.append((start, end))
        start = end
    return spans


def run_tasks(fn, tasks, workers: int) -> list:
    """Map fn over tasks, preserving task order in the result list."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with multiprocessing.Pool(min(workers, len(tasks))) as pool:
        return pool.map(fn, tasks)
