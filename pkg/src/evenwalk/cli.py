"""Command-line entry point.

    evenwalk ck --max-k 16 --method dp --verify-table
    evenwalk oracle --steps 8
    evenwalk moments --exact --n 12 --k 2
    evenwalk moments --mc --n 50 --k 1 --samples 1000 --seed 7

Data goes to stdout as CSV (default) or a single JSON document with keys
``schema_version``, ``rows`` and ``meta``.  Exact counts are written as
decimal strings in JSON.  Ratios and growth estimates are rounded to 12
significant digits for display only.

Exit codes: 0 success, 2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import counting, moments, walks
from .series import PUBLISHED_CK, SeriesTable, mismatches

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
THREADS_ENV = "EVENWALK_THREADS"

log = logging.getLogger("evenwalk")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    k_max: int = 0
    method: str = "dp"
    verify_table: bool = False
    steps: int = 0
    step_cap: int = walks.DEFAULT_STEP_CAP
    mode: str = "exact"
    n: int = 0
    k: int = 0
    samples: int = 1000
    seed: int = 0
    exhaustive_cap: int = moments.DEFAULT_EXHAUSTIVE_CAP
    fmt: str = "csv"
    threads: int = 1

    def validate(self) -> None:
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        if self.subcommand == "ck":
            if self.k_max < 0:
                raise UsageError("--max-k must be >= 0")
            if self.method not in ("dp", "compose"):
                raise UsageError(f"unknown method {self.method!r}")
        elif self.subcommand == "oracle":
            if self.steps < 0:
                raise UsageError("--steps must be >= 0")
            if self.steps > self.step_cap:
                raise UsageError(f"--steps {self.steps} exceeds the enumeration cap {self.step_cap}")
        elif self.subcommand == "moments":
            if self.n < 2:
                raise UsageError("--n must be >= 2")
            if self.k < 0:
                raise UsageError("--k must be >= 0")
            if self.mode == "exact" and self.n > self.exhaustive_cap:
                raise UsageError(f"--n {self.n} exceeds the exhaustive cap {self.exhaustive_cap}")
            if self.mode == "mc" and self.samples < 2:
                raise UsageError("--samples must be >= 2")


def _sig(x: float | None) -> float | None:
    if x is None:
        return None
    return float(f"{x:.12g}")


def render(rows: list[dict[str, Any]], meta: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "rows": rows,
            "meta": meta,
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys() if rows else [])
    for row in rows:
        writer.writerow("" if v is None else (f"{v:.12g}" if isinstance(v, float) else v) for v in row.values())
    return buf.getvalue()


def series_rows(table: SeriesTable) -> list[dict[str, Any]]:
    return [
        {
            "k": r.k,
            "c_k": str(r.ck),
            "ratio": _sig(None if r.ratio is None else float(r.ratio)),
            "growth_estimate": _sig(r.growth),
        }
        for r in table.rows
    ]


def cmd_ck(cfg: RunConfig) -> tuple[list[dict], dict, int]:
    log.info("computing c_0..c_%d by %s", cfg.k_max, cfg.method)
    counting.prepare_binomials(cfg.k_max)
    table = moments.resolvent_series(
        cfg.k_max, lambda kmax: counting.ck_series(kmax, cfg.method, cfg.threads)
    )
    meta: dict[str, Any] = {"command": "ck", "k_max": cfg.k_max, "method": cfg.method}
    status = EXIT_OK
    if cfg.verify_table:
        bad = mismatches(table.values)
        meta["verified_through"] = min(cfg.k_max, len(PUBLISHED_CK) - 1)
        meta["verification"] = "MISMATCH" if bad else "MATCH"
        if bad:
            meta["mismatched_k"] = bad
            log.error("table mismatch at k=%s", bad)
            status = EXIT_MISMATCH
    return series_rows(table), meta, status


def cmd_oracle(cfg: RunConfig) -> tuple[list[dict], dict, int]:
    L = cfg.steps
    log.info("enumerating closed walks of %d steps", L)
    closed, even = walks.count_closed_and_even(L, cfg.step_cap, cfg.threads)
    formula = counting.ck_fast(L // 4) if L % 4 == 0 else 0
    verdict = "MATCH" if formula == even else "MISMATCH"
    rows = [{
        "steps": L,
        "closed_walks": str(closed),
        "brute_force": str(even),
        "formula": str(formula),
        "verdict": verdict,
    }]
    meta = {"command": "oracle", "steps": L, "cap": cfg.step_cap}
    return rows, meta, EXIT_OK if verdict == "MATCH" else EXIT_MISMATCH


def cmd_moments(cfg: RunConfig) -> tuple[list[dict], dict, int]:
    ck = counting.ck_fast(cfg.k)
    meta: dict[str, Any] = {"command": "moments", "mode": cfg.mode, "n": cfg.n, "k": cfg.k}
    if cfg.mode == "exact":
        log.info("averaging over 2^%d sign configurations", cfg.n)
        est = moments.exact_moment(cfg.n, cfg.k, cfg.exhaustive_cap, cfg.threads)
        if not est.winding_free:
            verdict = "UNCHECKED_N_BELOW_4K_PLUS_2"
        else:
            verdict = "EQUAL" if est.value == ck else "NOT_EQUAL"
        rows = [{
            "n": cfg.n,
            "k": cfg.k,
            "power": est.power,
            "value": str(est.value),
            "c_k": str(ck),
            "verdict": verdict,
        }]
        return rows, meta, EXIT_MISMATCH if verdict == "NOT_EQUAL" else EXIT_OK
    log.info("sampling %d sign configurations (seed %d)", cfg.samples, cfg.seed)
    est = moments.mc_moment(cfg.n, cfg.k, cfg.samples, cfg.seed, cfg.threads)
    z = est.z_score(ck)
    rows = [{
        "n": cfg.n,
        "k": cfg.k,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "mean": est.value,
        "stderr": est.stderr,
        "z_score": z if math.isfinite(z) else None,
        "c_k": str(ck),
    }]
    meta.update(samples=cfg.samples, seed=cfg.seed)
    return rows, meta, EXIT_OK


COMMANDS = {"ck": cmd_ck, "oracle": cmd_oracle, "moments": cmd_moments}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker count (falls back to ${THREADS_ENV}, then 1)")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    parser = argparse.ArgumentParser(prog="evenwalk", description="Even-visiting walk counts.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ck", parents=[common], help="coefficient table c_0..c_k")
    p.add_argument("--max-k", dest="k_max", type=int, required=True)
    p.add_argument("--method", choices=("dp", "compose"), default="dp")
    p.add_argument("--verify-table", action="store_true",
                   help="compare k <= 16 against the published values; exit 3 on mismatch")

    p = sub.add_parser("oracle", parents=[common], help="brute-force walk count vs formula")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--cap", dest="step_cap", type=int, default=walks.DEFAULT_STEP_CAP)

    p = sub.add_parser("moments", parents=[common], help="random ring matrix moments")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--mc", dest="mode", action="store_const", const="mc")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", dest="exhaustive_cap", type=int, default=moments.DEFAULT_EXHAUSTIVE_CAP)
    return parser


def _threads(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(THREADS_ENV)
    if not env:
        return 1
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"${THREADS_ENV} must be an integer, got {env!r}") from None


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    opts = {k: v for k, v in vars(args).items() if k not in ("verbose",)}
    try:
        opts["threads"] = _threads(opts["threads"])
        cfg = RunConfig(**opts)
        cfg.validate()
    except UsageError as exc:
        print(f"evenwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows, meta, status = COMMANDS[cfg.subcommand](cfg)
    sys.stdout.write(render(rows, meta, cfg.fmt))
    return status


if __name__ == "__main__":
    sys.exit(main())
