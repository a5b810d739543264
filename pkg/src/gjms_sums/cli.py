"""Command-line front end.

Commands::

    verify-op      closed form of the composition sum M_{2N} (+ structural checks)
    verify-q       polynomial identity for the Q-sum with exact divisions
    qtable         Q-curvature sums on S^q x S^p and the w_{2N} relation
    verify-lemmas  basis products, partial sums, finite differences, summations
    bench          memoised vs naive evaluation of M_{2N}

Exit status: 0 when no record failed, 1 on any failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import IO, Sequence

from . import suites
from .exact_arith import render_rational
from .records import FAIL, PASS, SKIPPED, CheckRecord
from .poch_poly import evaluate
from .verifier import m_sum_with_stats, q_curvature_point, q_curvature_rhs, q_sum_poly, vw_coeffs

PER_RECORD_LINES = 200


@dataclass
class RunConfig:
    command: str
    n_min: int = 1
    n_max: int = 16
    q_values: tuple[int, ...] = ()
    p_values: tuple[int, ...] = ()
    trials: int | None = None
    seed: int = 42
    fmt: str = "table"
    parallel: int = 1
    out: str | None = None
    timing: bool = True
    skip_naive: bool = False


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _int_list(text: str) -> tuple[int, ...]:
    """``3``, ``1,2,5`` or ``1-8``."""
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if "-" in chunk:
            lo, hi = chunk.split("-", 1)
            out.extend(range(_positive(lo), _positive(hi) + 1))
        else:
            out.append(_positive(chunk))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjms-sums",
        description="Exact verification of GJMS composition sums on S^q x S^p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, n_max: int) -> None:
        p.add_argument("--n-min", type=_positive, default=1)
        p.add_argument("--n-max", type=_positive, default=n_max)
        p.add_argument("--format", dest="fmt", choices=("table", "records"), default="table")
        p.add_argument("--out", help="write records (one JSON object per line) to this path")
        p.add_argument("--parallel", type=_positive, default=1, help="worker processes")
        p.add_argument("--no-timing", dest="timing", action="store_false",
                       help="emit elapsed_ms as null so output is byte-reproducible")

    common(sub.add_parser("verify-op", help="composition sum closed form"), 16)
    common(sub.add_parser("verify-q", help="Q-sum polynomial identity"), 12)
    qt = sub.add_parser("qtable", help="Q-curvature sums over a (q, p, N) grid")
    common(qt, 8)
    qt.add_argument("--q", dest="q_values", type=_int_list, default=tuple(range(1, 9)))
    qt.add_argument("--p", dest="p_values", type=_int_list, default=tuple(range(1, 9)))
    lem = sub.add_parser("verify-lemmas", help="lemmas and classical summations")
    common(lem, 12)
    lem.add_argument("--trials", type=_positive, default=None,
                     help="random cases per family (default: 1000 for the summation "
                          "formulas, 500 for products and finite differences, 200 for the 3F2 transform)")
    lem.add_argument("--seed", type=int, default=42)
    bench = sub.add_parser("bench", help="time memoised vs naive M_{2N}")
    bench.add_argument("--n", dest="n_max", type=_positive, default=16)
    bench.add_argument("--format", dest="fmt", choices=("table", "records"), default="table")
    bench.add_argument("--skip-naive", action="store_true")
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(command=ns.command, n_max=ns.n_max, fmt=ns.fmt)
    for key in ("n_min", "q_values", "p_values", "trials", "seed", "parallel", "out", "timing", "skip_naive"):
        if hasattr(ns, key):
            setattr(cfg, key, getattr(ns, key))
    if cfg.n_min > cfg.n_max:
        parser.error(f"--n-min {cfg.n_min} exceeds --n-max {cfg.n_max}")
    return cfg


def tasks_for(cfg: RunConfig) -> list[suites.Task]:
    if cfg.command == "verify-op":
        return suites.verify_op_tasks(cfg.n_max, cfg.n_min)
    if cfg.command == "verify-q":
        return suites.verify_q_tasks(cfg.n_max, cfg.n_min)
    if cfg.command == "qtable":
        return suites.qtable_tasks(cfg.q_values, cfg.p_values, cfg.n_max, cfg.n_min)
    if cfg.command == "verify-lemmas":
        return suites.lemma_tasks(cfg.trials, cfg.seed, cfg.n_max)
    raise ValueError(cfg.command)


def write_records(records: Sequence[CheckRecord], stream: IO[str], timing: bool = True) -> None:
    for rec in records:
        stream.write(json.dumps(rec.to_dict(timing), sort_keys=False, separators=(", ", ": ")) + "\n")


def summarize(records: Sequence[CheckRecord]) -> str:
    counts = Counter(r.status for r in records)
    return (
        f"total {len(records)}: {counts.get(PASS, 0)} pass, "
        f"{counts.get(FAIL, 0)} fail, {counts.get(SKIPPED, 0)} skipped"
    )


def _table(records: Sequence[CheckRecord], stream: IO[str]) -> None:
    if len(records) <= PER_RECORD_LINES:
        for rec in records:
            stream.write(rec.short() + "\n")
        return
    by_name: dict[str, Counter] = {}
    for rec in records:
        by_name.setdefault(rec.name, Counter())[rec.status] += 1
    width = max(len(n) for n in by_name)
    stream.write(f"{'check':<{width}}  {'total':>6} {'pass':>6} {'fail':>6} {'skip':>6}\n")
    for name, c in by_name.items():
        total = sum(c.values())
        stream.write(f"{name:<{width}}  {total:>6} {c[PASS]:>6} {c[FAIL]:>6} {c[SKIPPED]:>6}\n")
    for rec in records:
        if rec.status != PASS:
            stream.write(rec.short() + "\n")


def _qtable(cfg: RunConfig, records: Sequence[CheckRecord], stream: IO[str]) -> None:
    verdict = {}
    for rec in records:
        key = (rec.params["N"], rec.params["q"], rec.params["p"])
        verdict[key] = verdict.get(key, True) and rec.passed
    header = f"{'q':>3} {'p':>3} {'N':>3}  {'Q-sum':>24}  {'closed form':>24}  {'N!(N-1)!4^N w_2N':>24}  status"
    stream.write(header + "\n")
    for q in cfg.q_values:
        for p in cfg.p_values:
            x0, y0 = q_curvature_point(q, p)
            for N in range(cfg.n_min, cfg.n_max + 1):
                lhs = evaluate(q_sum_poly(N), x0, y0)
                rhs = q_curvature_rhs(N, q, p)
                w = factorial(N) * factorial(N - 1) * 4**N * vw_coeffs(q, p, N)[1][N]
                ok = "pass" if verdict.get((N, q, p), False) else "FAIL"
                stream.write(
                    f"{q:>3} {p:>3} {N:>3}  {render_rational(lhs):>24}  {render_rational(rhs):>24}  "
                    f"{render_rational(w):>24}  {ok}\n"
                )


def bench(n: int, skip_naive: bool = False) -> dict:
    """Time M_{2n} with and without suffix-product sharing."""
    memo_poly, memo = m_sum_with_stats(n, "memo")
    report = {
        "n": n,
        "terms": 2 ** (n - 1),
        "memo": {"seconds": round(memo.seconds, 4), "mults": memo.mults, "peak_bits": memo.peak_bits},
        "result": memo_poly.render(),
    }
    if not skip_naive:
        naive_poly, naive = m_sum_with_stats(n, "naive")
        report["naive"] = {"seconds": round(naive.seconds, 4), "mults": naive.mults, "peak_bits": naive.peak_bits}
        report["agree"] = naive_poly == memo_poly
        report["fewer_mults"] = memo.mults < naive.mults
    return report


def _run_bench(cfg: RunConfig, stdout: IO[str]) -> int:
    report = bench(cfg.n_max, cfg.skip_naive)
    if cfg.fmt == "records":
        stdout.write(json.dumps(report) + "\n")
    else:
        stdout.write(f"M_{{2N}} for N={report['n']}: {report['terms']} compositions\n")
        stdout.write(f"  result      {report['result']}\n")
        for key in ("memo", "naive"):
            if key in report:
                r = report[key]
                stdout.write(
                    f"  {key:<6} {r['seconds']:>10.3f} s  {r['mults']:>10} polynomial mults  "
                    f"peak {r['peak_bits']} bits\n"
                )
        if "agree" in report:
            stdout.write(f"  strategies agree: {report['agree']}; memo uses fewer mults: {report['fewer_mults']}\n")
    return 0 if report.get("agree", True) else 1


def run(cfg: RunConfig, stdout: IO[str] | None = None) -> int:
    stdout = stdout or sys.stdout
    if cfg.command == "bench":
        return _run_bench(cfg, stdout)
    records = suites.execute(tasks_for(cfg), cfg.parallel)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            write_records(records, fh, cfg.timing)
    elif cfg.fmt == "records":
        write_records(records, stdout, cfg.timing)
    if cfg.fmt == "table":
        if cfg.command == "qtable":
            _qtable(cfg, records, stdout)
        else:
            _table(records, stdout)
        stdout.write(summarize(records) + "\n")
    else:
        counts = Counter(r.status for r in records)
        summary = {"total": len(records), **{k: counts.get(k, 0) for k in (PASS, FAIL, SKIPPED)}}
        stdout.write(json.dumps({"summary": summary}) + "\n")
    return 1 if any(r.failed for r in records) else 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
