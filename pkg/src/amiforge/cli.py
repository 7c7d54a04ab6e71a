"""Command-line surface with machine-readable JSON/CSV output.

Envelope keys are stable (command, params, results, timing, version) and all
payload arrays are canonically ordered, so identical invocations produce
byte-identical JSON apart from the timing block.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__, density
from .arith import DEFAULT_SIEVE_BUDGET, build_sigma_sieve, parse_factored
from .construct import construct_multiamicable, find_seed_tuples
from .families import FamilySpec, Mismatch, check
from .search import (
    CoverageError,
    SearchConfig,
    _needed_coverage,
    enumerate_family,
    scan_open_question,
    verify_tables,
)

ENV_SIEVE_LIMIT = "AMIFORGE_SIEVE_LIMIT"
ENV_WORKERS = "AMIFORGE_WORKERS"
DEFAULT_SIEVE_LIMIT = 10**6

# Families reachable from the command line.
CLI_FAMILIES = (
    "amicable-pair",
    "perfect",
    "dickson",
    "yanney",
    "cohen-pair",
    "multiamicable",
    "alpha-beta",
    "pm",
    "wpm",
    "gm",
    "wgm",
    "hm",
    "whm",
    "feebly",
    "mp",
)

_FIXED_K = {"perfect": 1, "amicable-pair": 2, "cohen-pair": 2, "alpha-beta": 2}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amiforge",
        description="Search, verify, construct and count generalized amicable tuples.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    common.add_argument(
        "--sieve-limit",
        type=int,
        default=None,
        help=f"sigma table size (default: sized to the command, env {ENV_SIEVE_LIMIT})",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"worker processes (default: available parallelism, env {ENV_WORKERS})",
    )
    common.add_argument("--sieve-budget", type=int, default=None, help="sieve memory budget in bytes")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", parents=[common], help="tabulate sigma(n)")
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("check", parents=[common], help="test one tuple against a family")
    p.add_argument("family", choices=CLI_FAMILIES)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--alphas", default=None, help="comma-separated weights")
    p.add_argument("--tuple", required=True, dest="tuple_text", help="comma-separated members; factored forms like 2^3*13 accepted")

    p = sub.add_parser("search", parents=[common], help="enumerate a family up to a limit")
    p.add_argument("family", choices=CLI_FAMILIES)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--alphas", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--limit", type=int, required=True)

    p = sub.add_parser("construct", parents=[common], help="build multiamicable tuples from seeds")
    p.add_argument("--alphas", required=True)
    p.add_argument("--ns", default=None, help="seed tuple N1,N2,...; factored forms accepted")
    p.add_argument("--seed-limit", type=int, default=None, help="search seeds up to this bound")
    p.add_argument("--a-bound", type=int, required=True, dest="a_bound")

    p = sub.add_parser("density", parents=[common], help="counting functions and bound checks")
    p.add_argument("mode", choices=("amicable", "multi", "lemma", "pomerance"))
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--checkpoints", required=True)

    p = sub.add_parser("scan-question", parents=[common], help="scan for equal-sigma mp(2,2) pairs")
    p.add_argument("--limit", type=int, required=True)

    sub.add_parser("verify-tables", parents=[common], help="check every stored reference tuple")
    return parser


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed {what}: {text!r}") from None


def _parse_tuple(text: str) -> tuple[int, ...]:
    return tuple(parse_factored(tok) for tok in text.split(","))


def _env_int(name: str):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}") from None


def _resolve_workers(args) -> int:
    workers = args.workers if args.workers is not None else _env_int(ENV_WORKERS)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError("workers must be >= 1")
    return workers


def _resolve_sieve_limit(args):
    limit = args.sieve_limit if args.sieve_limit is not None else _env_int(ENV_SIEVE_LIMIT)
    if limit is not None and limit < 1:
        raise ValueError("sieve limit must be >= 1")
    return limit


def _build_sieve(size: int, args):
    budget = args.sieve_budget if args.sieve_budget is not None else DEFAULT_SIEVE_BUDGET
    return build_sigma_sieve(size, budget)


def _spec_params(spec: FamilySpec) -> dict:
    params = {"kind": spec.kind, "k": spec.k}
    if spec.p is not None:
        params["p"] = spec.p
    if spec.q is not None:
        params["q"] = spec.q
    if spec.alphas is not None:
        params["alphas"] = list(spec.alphas)
    return params


def _params_text(spec: FamilySpec) -> str:
    parts = [f"k={spec.k}"]
    if spec.p is not None:
        parts.append(f"p={spec.p}")
    if spec.q is not None:
        parts.append(f"q={spec.q}")
    if spec.alphas is not None:
        parts.append("alphas=" + "/".join(str(a) for a in spec.alphas))
    return ",".join(parts)


def _family_spec(family: str, k, p, q, alphas_text, tuple_len=None) -> FamilySpec:
    alphas = tuple(_parse_int_list(alphas_text, "alphas")) if alphas_text else None
    if k is None:
        if tuple_len is not None:
            k = tuple_len
        elif family in _FIXED_K:
            k = _FIXED_K[family]
        elif family == "multiamicable" and alphas:
            k = len(alphas)
        else:
            k = 2
    return FamilySpec(family, k, p=p, q=q, alphas=alphas)


def _record_row(record) -> dict:
    return {
        "tuple": list(record.members),
        "sigmas": list(record.sigmas),
        "provenance": record.provenance,
    }


def _search_payload(report) -> dict:
    return {
        "family": report.spec.kind,
        "params": _spec_params(report.spec),
        "limit": report.limit,
        "workers": report.workers,
        "count": len(report.records),
        "records": [_record_row(r) for r in report.records],
        "scanned": report.scanned,
    }


def _search_csv(report) -> str:
    lines = ["tuple;sigmas;family;params"]
    for r in report.records:
        lines.append(
            ";".join(
                (
                    ",".join(str(n) for n in r.members),
                    ",".join(str(s) for s in r.sigmas),
                    report.spec.kind,
                    _params_text(report.spec),
                )
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_sieve(args):
    size = args.limit if args.limit is not None else _resolve_sieve_limit(args) or DEFAULT_SIEVE_LIMIT
    sieve = _build_sieve(size, args)
    values = sieve.as_list()
    params = {"limit": size}
    results = {"limit": size, "sigma": values}
    csv_lines = ["n,sigma"]
    csv_lines.extend(f"{n},{s}" for n, s in enumerate(values, start=1))
    return params, results, "\n".join(csv_lines) + "\n", 0


def _cmd_check(args):
    members = _parse_tuple(args.tuple_text)
    spec = _family_spec(args.family, None, args.p, args.q, args.alphas, tuple_len=len(members))
    outcome = check(spec, members)
    params = {"family": spec.kind, "params": _spec_params(spec), "tuple": list(members)}
    if isinstance(outcome, Mismatch):
        results = {
            "verdict": False,
            "equation": outcome.equation,
            "lhs": outcome.lhs,
            "rhs": outcome.rhs,
        }
        detail = outcome.describe()
    else:
        results = {"verdict": True, "sigmas": list(outcome.sigmas)}
        detail = "sigmas " + ",".join(str(s) for s in outcome.sigmas)
    csv_text = "family;params;tuple;verdict;detail\n" + ";".join(
        (
            spec.kind,
            _params_text(spec),
            ",".join(str(n) for n in members),
            str(results["verdict"]).lower(),
            detail,
        )
    ) + "\n"
    return params, results, csv_text, 0


def _cmd_search(args):
    spec = _family_spec(args.family, args.k, args.p, args.q, args.alphas)
    workers = _resolve_workers(args)
    size = _resolve_sieve_limit(args) or _needed_coverage(spec, args.limit)
    sieve = _build_sieve(size, args)
    report = enumerate_family(SearchConfig(spec, args.limit, workers=workers, sieve=sieve))
    params = {
        "family": spec.kind,
        "params": _spec_params(spec),
        "limit": args.limit,
        "workers": workers,
        "sieve_limit": size,
    }
    return params, _search_payload(report), _search_csv(report), 0


def _cmd_construct(args):
    alphas = tuple(_parse_int_list(args.alphas, "alphas"))
    if (args.ns is None) == (args.seed_limit is None):
        raise ValueError("construct requires exactly one of --ns or --seed-limit")
    workers = _resolve_workers(args)
    if args.ns is not None:
        seeds = [_parse_tuple(args.ns)]
        params = {"alphas": list(alphas), "ns": list(seeds[0]), "a_bound": args.a_bound}
    else:
        sieve = _build_sieve(args.seed_limit, args)
        seeds = [s.ns for s in find_seed_tuples(alphas, args.seed_limit, sieve)]
        params = {"alphas": list(alphas), "seed_limit": args.seed_limit, "a_bound": args.a_bound}
    rows = []
    for ns in seeds:
        for built in construct_multiamicable(alphas, ns, args.a_bound, workers=workers):
            rows.append(built)
    results = [
        {
            "seed": {"alphas": list(b.seed.alphas), "ns": list(b.seed.ns)},
            "target": f"{b.seed.target.numerator}/{b.seed.target.denominator}",
            "a": b.a,
            "tuple": list(b.members),
        }
        for b in rows
    ]
    csv_lines = ["alphas;ns;target;a;tuple"]
    for b in rows:
        csv_lines.append(
            ";".join(
                (
                    ",".join(str(a) for a in b.seed.alphas),
                    ",".join(str(n) for n in b.seed.ns),
                    f"{b.seed.target.numerator}/{b.seed.target.denominator}",
                    str(b.a),
                    ",".join(str(n) for n in b.members),
                )
            )
        )
    return params, results, "\n".join(csv_lines) + "\n", 0


def _series_payload(series) -> list[dict]:
    return [
        {"x": x, "count": c, "ratio": f"{r.numerator}/{r.denominator}"}
        for x, c, r in zip(series.checkpoints, series.counts, series.ratios)
    ]


def _series_csv(series) -> str:
    lines = ["x,count,ratio,bound"]
    for x, c in zip(series.checkpoints, series.counts):
        lines.append(f"{x},{c},{c / x!r},")
    return "\n".join(lines) + "\n"


def _cmd_density(args):
    mode = args.mode
    if mode == "pomerance":
        try:
            pts = [float(tok) for tok in args.checkpoints.split(",")]
        except ValueError:
            raise ValueError(f"malformed checkpoints: {args.checkpoints!r}") from None
    else:
        pts = _parse_int_list(args.checkpoints, "checkpoints")
    params = {"mode": mode, "checkpoints": pts}
    explicit = _resolve_sieve_limit(args)

    if mode == "lemma":
        params["k"] = args.k
        top = int(max(pts))
        sieve = _build_sieve(explicit or top, args)
        reports = [density.lemma_sum_check(x, args.k, sieve) for x in pts]
        results = [
            {
                "x": r.x,
                "k": r.k,
                "lhs": float(r.lhs),
                "rhs": r.rhs,
                "margin": r.margin,
                "holds": r.holds,
                "exact": r.exact,
            }
            for r in reports
        ]
        lines = ["x,k,lhs,rhs,margin,holds,exact"]
        lines.extend(
            f"{r.x},{r.k},{float(r.lhs)!r},{r.rhs!r},{r.margin!r},{r.holds},{r.exact}"
            for r in reports
        )
        return params, results, "\n".join(lines) + "\n", 0

    if mode == "pomerance":
        top = int(max(pts))
        sieve = _build_sieve(explicit or max(top, 1), args)
        rows = density.pomerance_curve(pts, sieve)
        results = [
            {"x": x, "count": c, "bound": bound, "ratio": ratio} for x, c, bound, ratio in rows
        ]
        lines = ["x,count,ratio,bound"]
        lines.extend(f"{x!r},{c},{ratio!r},{bound!r}" for x, c, bound, ratio in rows)
        return params, results, "\n".join(lines) + "\n", 0

    top = max(pts)
    sieve = _build_sieve(explicit or top, args)
    if mode == "multi":
        params["alpha"], params["beta"] = args.alpha, args.beta
        series = density.count_multiamicable_pairs(args.alpha, args.beta, pts, sieve)
    else:
        series = density.count_amicable(pts, sieve)
    return params, _series_payload(series), _series_csv(series), 0


def _cmd_scan_question(args):
    explicit = _resolve_sieve_limit(args)
    sieve = _build_sieve(explicit or args.limit, args)
    report = scan_open_question(args.limit, sieve)
    params = {"limit": args.limit}
    payload = _search_payload(report)
    payload["label"] = report.label
    return params, payload, _search_csv(report), 0


def _cmd_verify_tables(args):
    explicit = _resolve_sieve_limit(args)
    sieve = _build_sieve(explicit, args) if explicit else None
    report = verify_tables(sieve)
    rows = [
        {
            "group": r.group,
            "family": r.spec.kind,
            "params": _spec_params(r.spec),
            "tuple": list(r.members),
            "sigmas": list(r.sigmas),
            "pass": r.passed,
            "detail": r.detail,
        }
        for r in report.rows
    ]
    results = {
        "rows": rows,
        "total": len(rows),
        "failed": len(report.failures),
        "all_pass": report.all_pass,
    }
    lines = ["group;family;params;tuple;verdict;sigmas;detail"]
    for r in report.rows:
        lines.append(
            ";".join(
                (
                    r.group,
                    r.spec.kind,
                    _params_text(r.spec),
                    ",".join(str(n) for n in r.members),
                    "pass" if r.passed else "FAIL",
                    ",".join(str(s) for s in r.sigmas),
                    r.detail,
                )
            )
        )
    return {}, results, "\n".join(lines) + "\n", 0 if report.all_pass else 1


_HANDLERS = {
    "sieve": _cmd_sieve,
    "check": _cmd_check,
    "search": _cmd_search,
    "construct": _cmd_construct,
    "density": _cmd_density,
    "scan-question": _cmd_scan_question,
    "verify-tables": _cmd_verify_tables,
}


def run(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    t0 = time.perf_counter()
    try:
        params, results, csv_text, code = _HANDLERS[args.command](args)
    except (CoverageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - t0

    if args.format == "csv":
        text = csv_text
    else:
        envelope = {
            "command": args.command,
            "params": params,
            "results": results,
            "timing": {"seconds": round(elapsed, 6)},
            "version": __version__,
        }
        text = json.dumps(envelope, indent=2, sort_keys=True) + "\n"

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    raise SystemExit(run())
