"""Bounded exhaustive enumeration of every family, plus table verification
and scan harnesses for the open conjecture and question.

Parallel runs block-partition the outer loop, workers emit locally ordered
results over a shared immutable sieve, and the merge applies one global sort,
so reports are identical for any worker count.
"""

from __future__ import annotations

import math
import time
from bisect import bisect_left
from dataclasses import dataclass

from . import tables
from .arith import SigmaSieve, build_sigma_sieve, sigma
from .families import FamilySpec, Mismatch, TupleRecord, check, is_wgm
from .parallel import partition_range, run_tasks

MAX_SEARCH_LIMIT = 10**7  # keeps sigma buckets and tables within memory bounds


class CoverageError(ValueError):
    """The provided sieve does not cover the requested scan."""


@dataclass(frozen=True, eq=False)
class SearchConfig:
    spec: FamilySpec
    limit: int
    workers: int = 1
    sieve: SigmaSieve | None = None


@dataclass
class SearchReport:
    spec: FamilySpec
    limit: int
    workers: int
    records: list[TupleRecord]
    scanned: int
    elapsed: float
    label: str = ""


# Kinds whose outer loop walks 1..limit directly; the rest group by sigma.
_RANGE_KINDS = {
    "perfect",
    "amicable-number",
    "amicable-pair",
    "alpha-beta",
    "cohen-pair",
    "pm",
    "wpm",
    "gm",
    "wgm",
    "hm",
    "whm",
    "feebly",
    "mp",
}
_BUCKET_KINDS = {"multiamicable", "dickson", "yanney"}


@dataclass(frozen=True, eq=False)
class _Task:
    spec: FamilySpec
    limit: int
    sieve: SigmaSieve
    span: tuple[int, int] | None = None
    items: tuple[tuple[int, tuple[int, ...]], ...] | None = None


def _sigma_buckets(sig: list[int], limit: int) -> list[tuple[int, tuple[int, ...]]]:
    """Group 1..limit by sigma value; members ascending, keys ascending."""
    buckets: dict[int, list[int]] = {}
    for n in range(1, limit + 1):
        buckets.setdefault(sig[n], []).append(n)
    return [(s, tuple(ns)) for s, ns in sorted(buckets.items())]


def _solve_bucket(members, alphas, tails, target, strict):
    """All (strictly or weakly) increasing tuples from one sigma bucket with
    weighted element sum equal to target. The last element is solved for
    directly; earlier slots scan with the lower-bound prune
    partial + (sum of remaining alphas) * candidate > target."""
    k = len(alphas)
    mset = set(members)
    last_a = alphas[-1]
    out = []

    def rec(start, chosen, partial):
        i = len(chosen)
        if i == k - 1:
            rem = target - partial
            if rem >= last_a and rem % last_a == 0:
                v = rem // last_a
                if v in mset:
                    if not chosen:
                        out.append((v,))
                    elif (v > chosen[-1]) if strict else (v >= chosen[-1]):
                        out.append(tuple(chosen) + (v,))
            return
        rest = tails[i]
        for idx in range(start, len(members)):
            v = members[idx]
            if partial + rest * v > target:
                break
            chosen.append(v)
            rec(idx + 1 if strict else idx, chosen, partial + alphas[i] * v)
            chosen.pop()

    rec(0, [], 0)
    return out


def _bucket_kernel(task: _Task):
    spec = task.spec
    if spec.kind == "multiamicable":
        alphas, strict = spec.alphas, True
    else:
        alphas, strict = (1,) * spec.k, False
    tails = [sum(alphas[i:]) for i in range(len(alphas))]
    factor = spec.k - 1 if spec.kind == "yanney" else 1
    out = []
    scanned = 0
    for s_value, members in task.items:
        scanned += 1
        out.extend(_solve_bucket(members, alphas, tails, factor * s_value, strict))
    return out, scanned


def _range_kernel(task: _Task):
    spec, limit = task.spec, task.limit
    lo, hi = task.span
    sig = task.sieve.table.tolist()
    tab_lim = task.sieve.limit
    kind = spec.kind
    out = []
    scanned = hi - lo

    def sx(v: int) -> int:
        return sig[v] if v <= tab_lim else sigma(v)

    if kind == "perfect":
        for n in range(lo, hi):
            if sig[n] == 2 * n:
                out.append((n,))
    elif kind == "amicable-number":
        for n in range(max(lo, 2), hi):
            sn = sig[n]
            if sn == 2 * n:
                continue
            if sx(sn - n) == sn:
                out.append((n,))
    elif kind == "amicable-pair":
        for m in range(lo, hi):
            n = sig[m] - m
            if m <= n <= limit and sig[n] == sig[m]:
                out.append((m, n))
    elif kind == "alpha-beta":
        a, b = spec.alphas
        for n in range(lo, hi):
            an = a * n
            m = sx(an) - an
            if m < 1 or m > limit:
                continue
            if a == b and m > n:
                continue
            bm = b * m
            if sx(bm) - bm == n:
                out.append((m, n))
    elif kind == "cohen-pair":
        a, b = spec.alphas
        for m in range(lo, hi):
            r = sig[m] - m
            if r < a:
                continue
            n, rem = divmod(r, a)
            if rem or n > limit:
                continue
            if a == b and n < m:
                continue
            if sig[n] - n == b * m:
                out.append((m, n))
    else:
        return _mean_family_kernel(task, sig)
    return out, scanned


def _mean_family_kernel(task: _Task, sig: list[int]):
    """Non-decreasing k-tuple scan for the mean-equation families.

    Prefix aggregates are carried exactly; for pm with p=1 and for mp the
    defining equation isolates the last element, which is then resolved by a
    precomputed key index instead of a scan.
    """
    spec, limit = task.spec, task.limit
    lo, hi = task.span
    kind, k, p, q = spec.kind, spec.k, spec.p, spec.q
    sieve = task.sieve
    out = []
    scanned = 0

    index: dict[int, list[int]] | None = None
    key = None
    if kind == "pm" and p == 1:
        index = {}
        for n in range(1, limit + 1):
            index.setdefault(sig[n] - q * n, []).append(n)

        def key(st):
            return q * st[1] - st[0]

    elif kind == "mp":
        index = {}
        for n in range(1, limit + 1):
            index.setdefault(sig[n] ** p - q * n**p, []).append(n)

        def key(st):
            return q * st[1] - st[0]

    if kind == "pm":
        init = (0, 0)  # (sum sigma^p, sum n)

        def push(st, v):
            return (st[0] + sig[v] ** p, st[1] + v)

        def test(st, v, prefix):
            return st[0] + sig[v] ** p == q * (st[1] + v) ** p

    elif kind == "mp":
        init = (0, 0)  # (sum sigma^p, sum n^p)

        def push(st, v):
            return (st[0] + sig[v] ** p, st[1] + v**p)

        def test(st, v, prefix):
            return st[0] + sig[v] ** p == q * (st[1] + v**p)

    elif kind == "wpm":
        init = (0, 0)  # (sum n*sigma^p, sum n)

        def push(st, v):
            return (st[0] + v * sig[v] ** p, st[1] + v)

        def test(st, v, prefix):
            return st[0] + v * sig[v] ** p == (st[1] + v) ** (p + 1)

    elif kind == "gm":
        init = (1, 0)  # (prod sigma, sum n)

        def push(st, v):
            return (st[0] * sig[v], st[1] + v)

        def test(st, v, prefix):
            return st[0] * sig[v] == (st[1] + v) ** k

    elif kind == "wgm":
        logsig = [0.0] * (limit + 1)
        for n in range(1, limit + 1):
            logsig[n] = math.log(sig[n])
        init = (0.0, 0)  # (sum n*log sigma, sum n)

        def push(st, v):
            return (st[0] + v * logsig[v], st[1] + v)

        def test(st, v, prefix):
            # cheap log filter, then the exact prime-exponent comparison
            s = st[1] + v
            if abs(st[0] + v * logsig[v] - s * math.log(s)) > 1e-6:
                return False
            return is_wgm(prefix + (v,), sieve)

    elif kind == "hm":
        init = (1, 0, 0)  # (prod sigma^p, sum of products excluding one, sum n)

        def push(st, v):
            svp = sig[v] ** p
            return (st[0] * svp, st[1] * svp + st[0], st[2] + v)

        def test(st, v, prefix):
            svp = sig[v] ** p
            return (st[2] + v) ** p * (st[1] * svp + st[0]) == q * st[0] * svp

    elif kind == "whm":
        init = (1, 0, 0, 0)  # (prod sigma^p, weighted excl-one sum, sum n^p, sum n)

        def push(st, v):
            svp = sig[v] ** p
            vp = v**p
            return (st[0] * svp, st[1] * svp + vp * st[0], st[2] + vp, st[3] + v)

        def test(st, v, prefix):
            svp = sig[v] ** p
            vp = v**p
            return (st[3] + v) ** p * (st[1] * svp + vp * st[0]) == (st[2] + vp) * st[0] * svp

    elif kind == "feebly":
        init = (1, 0)  # (prod sigma, weighted excl-one sum)

        def push(st, v):
            sv = sig[v]
            return (st[0] * sv, st[1] * sv + v * st[0])

        def test(st, v, prefix):
            sv = sig[v]
            return st[1] * sv + v * st[0] == st[0] * sv

    else:
        raise AssertionError(f"unexpected kind {kind!r}")

    def close(prefix, st, start, stop):
        nonlocal scanned
        if index is not None:
            scanned += 1
            lst = index.get(key(st))
            if lst:
                i = bisect_left(lst, start)
                while i < len(lst) and lst[i] < stop:
                    out.append(prefix + (lst[i],))
                    i += 1
        else:
            for v in range(start, stop):
                scanned += 1
                if test(st, v, prefix):
                    out.append(prefix + (v,))

    def rec(depth, prev, prefix, st):
        if depth == k - 1:
            start = lo if depth == 0 else prev
            stop = hi if depth == 0 else limit + 1
            close(prefix, st, start, stop)
            return
        rng = range(lo, hi) if depth == 0 else range(prev, limit + 1)
        for v in rng:
            rec(depth + 1, v, prefix + (v,), push(st, v))

    rec(0, 1, (), init)
    return out, scanned


def _run_task(task: _Task):
    if task.items is not None:
        return _bucket_kernel(task)
    return _range_kernel(task)


def _needed_coverage(spec: FamilySpec, limit: int) -> int:
    if spec.kind == "alpha-beta":
        return max(spec.alphas) * limit
    return limit


def enumerate_family(config: SearchConfig) -> SearchReport:
    """Every tuple of the family with all elements <= config.limit."""
    t0 = time.perf_counter()
    spec, limit = config.spec, config.limit
    if limit < 1:
        raise ValueError("search limit must be >= 1")
    if limit > MAX_SEARCH_LIMIT:
        raise ValueError(f"search limit {limit} exceeds the cap of {MAX_SEARCH_LIMIT}")
    workers = max(1, config.workers)
    sieve = config.sieve
    if sieve is None:
        sieve = build_sigma_sieve(_needed_coverage(spec, limit))
    elif sieve.limit < limit:
        raise CoverageError(
            f"sieve covers 1..{sieve.limit} but the scan needs sigma up to {limit}"
        )

    if spec.kind in _BUCKET_KINDS:
        items = _sigma_buckets(sieve.table[: limit + 1].tolist(), limit)
        spans = partition_range(0, len(items), workers)
        tasks = [_Task(spec, limit, sieve, items=tuple(items[a:b])) for a, b in spans]
    else:
        spans = partition_range(1, limit + 1, workers)
        tasks = [_Task(spec, limit, sieve, span=span) for span in spans]

    results = run_tasks(_run_task, tasks, workers)
    found = [t for tuples, _ in results for t in tuples]
    scanned = sum(count for _, count in results)
    found.sort()

    records = []
    for t in found:
        outcome = check(spec, t, sieve, provenance="found")
        if isinstance(outcome, Mismatch):
            raise RuntimeError(f"search produced a non-member: {outcome.describe()}")
        records.append(outcome)
    return SearchReport(spec, limit, workers, records, scanned, time.perf_counter() - t0)


@dataclass
class TableRowResult:
    group: str
    spec: FamilySpec
    members: tuple[int, ...]
    passed: bool
    sigmas: tuple[int, ...]
    detail: str


@dataclass
class TableReport:
    rows: list[TableRowResult]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failures(self) -> list[TableRowResult]:
        return [r for r in self.rows if not r.passed]


def verify_tables(sieve: SigmaSieve | None = None) -> TableReport:
    """Check every stored reference tuple against its family predicate."""
    rows = []
    for group, spec, members in tables.all_rows():
        outcome = check(spec, members, sieve, provenance="table")
        if isinstance(outcome, TupleRecord):
            rows.append(TableRowResult(group, spec, members, True, outcome.sigmas, ""))
        else:
            sigmas = tuple(sigma(n, sieve) for n in members)
            rows.append(TableRowResult(group, spec, members, False, sigmas, outcome.describe()))
    return TableReport(rows)


def scan_open_question(limit: int, sieve: SigmaSieve | None = None) -> SearchReport:
    """Pairs m <= n <= limit with sigma(m) = sigma(n) and sigma(m)^2 = m^2 + n^2.

    Such a pair would answer the open question on mp(2,2) pairs with equal
    sigma; every scan so far comes back empty.
    """
    t0 = time.perf_counter()
    if limit < 1:
        raise ValueError("scan limit must be >= 1")
    if sieve is None:
        sieve = build_sigma_sieve(limit)
    elif sieve.limit < limit:
        raise CoverageError(
            f"sieve covers 1..{sieve.limit} but the scan needs sigma up to {limit}"
        )
    sig = sieve.table[: limit + 1].tolist()
    spec = FamilySpec("mp", 2, p=2, q=2)
    found = []
    scanned = 0
    for _, members in _sigma_buckets(sig, limit):
        for i, m in enumerate(members):
            target = sig[m] * sig[m] - m * m
            for n in members[i:]:
                scanned += 1
                if n * n == target:
                    found.append((m, n))
    found.sort()
    records = []
    for t in found:
        outcome = check(spec, t, sieve, provenance="found")
        if isinstance(outcome, Mismatch):
            raise RuntimeError(f"scan produced a non-member: {outcome.describe()}")
        records.append(outcome)
    return SearchReport(
        spec,
        limit,
        1,
        records,
        scanned,
        time.perf_counter() - t0,
        label="equal-sigma mp(2,2) pairs",
    )


def conjecture_census(
    alphas,
    limits,
    sieve: SigmaSieve | None = None,
    workers: int = 1,
) -> list[tuple[int, int]]:
    """Counts of multiamicable tuples (every element within the limit) for an
    increasing list of limits. Evidence for the infinitude conjecture only;
    proves nothing."""
    alphas = tuple(alphas)
    limits = list(limits)
    if not limits:
        raise ValueError("limits must be non-empty")
    if any(b <= a for a, b in zip(limits, limits[1:])):
        raise ValueError("limits must be strictly increasing")
    spec = FamilySpec("multiamicable", len(alphas), alphas=alphas)
    report = enumerate_family(SearchConfig(spec, limits[-1], workers=workers, sieve=sieve))
    counts = []
    for bound in limits:
        counts.append((bound, sum(1 for r in report.records if r.members[-1] <= bound)))
    return counts
