"""Command-line front end.

Subcommands emit the reference operation-count tables and the relative
savings sweep as CSV or aligned text, and run validation and cost
comparisons.  Identical flags (including the seed) always produce byte
identical output.  Exit codes: 0 pass, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .approx import approx_expected_counts, relative_additions_sweep
from .convolution import cost_compare, xor_convolve_direct, xor_convolve_wht
from .exact import exact_expected_counts, exact_table, expansion_rows
from .messages import DenseVector, is_power_of_two
from .montecarlo import run_trials
from .wht import PatternMask, count_only

TABLE2_ROWS = tuple(range(1, 25)) + (32, 64)
FIG3_RANGE = (16, 65536)


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: int | None = None
    q_prime: int | None = None
    trials: int | None = None
    seed: int | None = None
    dc: int | None = None
    fmt: str = "text"
    output_path: str | None = None
    mask_hex: str | None = None


def _csv(rows: list[list[str]]) -> str:
    return "".join(",".join(row) + "\n" for row in rows)


def _aligned(rows: list[list[str]], indent: str = "") -> str:
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append((indent + "  ".join(cells)).rstrip())
    return "\n".join(lines) + "\n"


def _num(value: float) -> str:
    return f"{value:.15g}"


def cmd_table1(config: RunConfig) -> str:
    """Base counts for length 2 plus both length-4 expansion tables."""
    base = exact_table(2)
    base_rows = [
        ["block", "metric", "q_prime", "q_left", "q_right", "weight", "left", "right", "extra", "total"]
    ]
    for q_prime in range(3):
        add, neg = base.entries[(2, q_prime)]
        base_rows.append(["length2", "additions", str(q_prime), "", "", "", "", "", "", str(add)])
        base_rows.append(["length2", "negations", str(q_prime), "", "", "", "", "", "", str(neg)])
    for metric in ("additions", "negations"):
        for q_prime in range(5):
            total_add, total_neg = exact_expected_counts(4, q_prime)
            total = total_add if metric == "additions" else total_neg
            for row in expansion_rows(4, q_prime):
                left, right, extra = (
                    (row.add_left, row.add_right, row.add_extra)
                    if metric == "additions"
                    else (row.neg_left, row.neg_right, row.neg_extra)
                )
                base_rows.append(
                    [
                        "length4",
                        metric,
                        str(q_prime),
                        str(row.q_left),
                        str(row.q_right),
                        str(row.weight),
                        str(left),
                        str(right),
                        str(extra),
                        str(total),
                    ]
                )
    if config.fmt == "csv":
        return _csv(base_rows)
    header, *data = base_rows
    blocks = []
    length2 = [r for r in data if r[0] == "length2"]
    rows = [["q'", "E[A]", "E[M]"]]
    for q_prime in range(3):
        add = next(r[9] for r in length2 if r[1] == "additions" and r[2] == str(q_prime))
        neg = next(r[9] for r in length2 if r[1] == "negations" and r[2] == str(q_prime))
        rows.append([str(q_prime), add, neg])
    blocks.append("exact expected counts, transform length 2\n" + _aligned(rows))
    for metric, symbol in (("additions", "E[A]"), ("negations", "E[M]")):
        rows = [["q'", "qL", "qR", "weight", "left", "right", "extra", symbol]]
        for r in data:
            if r[0] == "length4" and r[1] == metric:
                rows.append([r[2], r[3], r[4], r[5], r[6], r[7], r[8], r[9]])
        blocks.append(f"expected {metric} by half-split, transform length 4\n" + _aligned(rows))
    return "\n".join(blocks)


def cmd_table2(config: RunConfig) -> str:
    """Approximate and exact expected counts for a length-64 transform."""
    if config.fmt == "csv":
        rows = [["q_prime", "approx_additions", "approx_negations", "exact_additions", "exact_negations"]]
        for q_prime in TABLE2_ROWS:
            approx_add, approx_neg = approx_expected_counts(64, q_prime)
            exact_add, exact_neg = exact_expected_counts(64, q_prime)
            rows.append(
                [str(q_prime), _num(approx_add), _num(approx_neg), _num(float(exact_add)), _num(float(exact_neg))]
            )
        return _csv(rows)
    rows = [["q'", "approx E[A]", "approx E[M]", "exact E[A]", "exact E[M]"]]
    for q_prime in TABLE2_ROWS:
        approx_add, approx_neg = approx_expected_counts(64, q_prime)
        exact_add, exact_neg = exact_expected_counts(64, q_prime)
        rows.append(
            [
                str(q_prime),
                f"{approx_add:.1f}",
                f"{approx_neg:.1f}",
                f"{float(exact_add):.1f}",
                f"{float(exact_neg):.1f}",
            ]
        )
    return "expected operation counts, transform length 64\n" + _aligned(rows)


def cmd_fig3(config: RunConfig) -> str:
    """Relative additions sweep over alphabet sizes 16..2^16."""
    q_prime = 12 if config.q_prime is None else config.q_prime
    points = relative_additions_sweep(FIG3_RANGE[0], FIG3_RANGE[1], q_prime)
    if config.fmt == "csv":
        rows = [["q", "log2_q", "ratio"]]
        rows += [[str(p.q), str(p.log2_q), _num(p.ratio)] for p in points]
        return _csv(rows)
    rows = [["q", "log2(q)", "ratio"]]
    rows += [[str(p.q), str(p.log2_q), f"{p.ratio:.4f}"] for p in points]
    return f"approximate additions relative to dense cost, {q_prime} non-zero inputs\n" + _aligned(rows)


def cmd_count(config: RunConfig) -> str:
    """Structural operation count for one explicit non-zero pattern."""
    mask = PatternMask.from_hex(config.q, config.mask_hex)
    ops = count_only(mask)
    if config.fmt == "csv":
        return _csv([["additions", "negations"], [str(ops.additions), str(ops.negations)]])
    return f"additions={ops.additions} negations={ops.negations}\n"


def cmd_validate(config: RunConfig) -> tuple[str, bool]:
    """Compare averaged structural counts against the exact expectations."""
    stats = run_trials(config.q, config.q_prime, config.trials, config.seed)
    exact_add, exact_neg = exact_expected_counts(config.q, config.q_prime)
    lines = [
        f"q={config.q} q_prime={config.q_prime} trials={stats.trials} "
        f"seed={stats.seed} mode={'exhaustive' if stats.exhaustive else 'sampled'}"
    ]
    passed = True
    for name, mean, stderr, exact in (
        ("additions", stats.mean_additions, stats.stderr_additions, exact_add),
        ("negations", stats.mean_negations, stats.stderr_negations, exact_neg),
    ):
        diff = abs(mean - float(exact))
        bound = 0.0 if stats.exhaustive else 3.0 * stderr
        ok = diff <= bound
        passed = passed and ok
        lines.append(
            f"{name}: mean={_num(mean)} exact={_num(float(exact))} ({exact}) "
            f"diff={_num(diff)} bound={_num(bound)} {'ok' if ok else 'VIOLATION'}"
        )
    lines.append("result: " + ("pass" if passed else "fail"))
    return "\n".join(lines) + "\n", passed


def cmd_conv_check(config: RunConfig) -> tuple[str, bool]:
    """Check the transform-domain convolution against the direct oracle."""
    rng = np.random.Generator(np.random.PCG64(config.seed))
    worst = 0.0
    for _ in range(config.trials):
        a = DenseVector(rng.uniform(0.0, 1.0, config.q))
        b = DenseVector(rng.uniform(0.0, 1.0, config.q))
        via_wht, _ = xor_convolve_wht(a, b)
        direct = xor_convolve_direct(a, b)
        scale = np.abs(direct.values).max()
        err = np.abs(via_wht.values - direct.values).max() / scale
        worst = max(worst, err)
    passed = worst <= 1e-10
    text = (
        f"q={config.q} trials={config.trials} seed={config.seed}\n"
        f"max relative error={_num(worst)} tolerance=1e-10\n"
        f"result: {'pass' if passed else 'fail'}\n"
    )
    return text, passed


def cmd_cost(config: RunConfig) -> str:
    """Cost models of the three convolution routes for one check node."""
    dc = 1 if config.dc is None else config.dc
    models = cost_compare(config.q, config.q_prime, dc)
    if config.fmt == "csv":
        rows = [["route", "multiplications", "additions", "negations"]]
        rows += [[m.label, _num(m.multiplications), _num(m.additions), _num(m.negations)] for m in models]
        return _csv(rows)
    rows = [["route", "multiplications", "additions", "negations"]]
    rows += [[m.label, f"{m.multiplications:.1f}", f"{m.additions:.1f}", f"{m.negations:.1f}"] for m in models]
    return f"q={config.q} q_prime={config.q_prime} dc={dc}\n" + _aligned(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whtrunc",
        description="Operation-count analysis for sparse-input Walsh-Hadamard transforms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "text"), default="text", dest="fmt")
        p.add_argument("--out", dest="output_path", metavar="PATH")

    add_common(sub.add_parser("table1", help="exact counts for lengths 2 and 4"))
    add_common(sub.add_parser("table2", help="approximate vs exact counts for length 64"))
    p = sub.add_parser("fig3", help="relative additions sweep, lengths 16..65536")
    p.add_argument("--q-prime", type=int, default=12, dest="q_prime")
    add_common(p)
    p = sub.add_parser("count", help="count operations for one hex-encoded pattern")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mask", required=True, metavar="HEX", dest="mask_hex")
    add_common(p)
    p = sub.add_parser("validate", help="Monte-Carlo or exhaustive check of the expectations")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--q-prime", type=int, required=True, dest="q_prime")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p = sub.add_parser("conv-check", help="transform-route convolution vs direct oracle")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p = sub.add_parser("cost", help="cost models for one check node")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--q-prime", type=int, required=True, dest="q_prime")
    p.add_argument("--dc", type=int, default=1)
    add_common(p)
    return parser


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit_code, output_text)."""
    if config.q is not None and not is_power_of_two(config.q):
        raise ValueError(f"--q must be a power of 2, got {config.q}")
    if config.command == "table1":
        return 0, cmd_table1(config)
    if config.command == "table2":
        return 0, cmd_table2(config)
    if config.command == "fig3":
        return 0, cmd_fig3(config)
    if config.command == "count":
        return 0, cmd_count(config)
    if config.command == "validate":
        text, passed = cmd_validate(config)
        return (0 if passed else 1), text
    if config.command == "conv-check":
        text, passed = cmd_conv_check(config)
        return (0 if passed else 1), text
    if config.command == "cost":
        return 0, cmd_cost(config)
    raise ValueError(f"unknown command {config.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        command=args.command,
        q=getattr(args, "q", None),
        q_prime=getattr(args, "q_prime", None),
        trials=getattr(args, "trials", None),
        seed=getattr(args, "seed", None),
        dc=getattr(args, "dc", None),
        fmt=args.fmt,
        output_path=args.output_path,
        mask_hex=getattr(args, "mask_hex", None),
    )
    try:
        code, text = run(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    sys.exit(main())
