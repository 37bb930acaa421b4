"""Command line front end.

Three verbs: `census` tabulates exact comparable-pair counts for n' = 1..n,
`verify` runs one exhaustive check and exits 0/1 by its verdict, and
`estimate` runs seeded Monte Carlo.  Artifacts (CSV or JSON) are byte-stable
for a fixed seed and worker count; progress chatter goes to stderr.

Exit codes: 0 success, 1 a verification found a witness, 2 usage or cap
errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from .limits import CapExceeded
from .posets import verify_bp_sandwich
from .reports import (
    TOOL_VERSION,
    render_csv,
    render_json,
    shard_sizes,
    spawn_stream,
    write_text,
)
from .strong_order import (
    census_strong,
    default_block_parameter,
    family_from_count,
    family_trial_count,
    walk_equivalence_check,
    walk_tail_from_count,
    walk_tail_trial_count,
)
from .tableaux import lis_tail_experiment, lis_tail_report, verify_greene, verify_psi_bound
from .weak_order import (
    WEAK_METHODS,
    census_weak,
    sandwich_from_partials,
    sandwich_terms,
    verify_balancing_exchange,
)

CENSUS_TARGETS = ("weak", "strong")
VERIFY_TARGETS = ("psi", "bp", "greene", "walk-equivalence", "balancing")
ESTIMATE_TARGETS = ("weak-sandwich", "strong-family", "lis-tail", "walk-tail")

_WEAK_CENSUS_COLUMNS = ("n", "count", "method", "log_prob", "normalized_exponent")
_STRONG_CENSUS_COLUMNS = ("n", "count")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhatlab",
        description="census, verification, and Monte Carlo for Bruhat-order comparability",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    census = commands.add_parser("census", help="exact comparable-pair counts for n' = 1..n")
    census.add_argument("target", choices=CENSUS_TARGETS)
    census.add_argument("--n", type=int, required=True, help="largest size to tabulate")
    census.add_argument(
        "--method",
        choices=WEAK_METHODS,
        default="pairwise-scan",
        help="counting route for the weak census",
    )
    _output_flags(census, plot=True)

    verify = commands.add_parser("verify", help="one exhaustive check; exit 0 pass, 1 fail")
    verify.add_argument("target", choices=VERIFY_TARGETS)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--t", type=int, help="part count for the balancing check")
    _output_flags(verify, plot=False)

    estimate = commands.add_parser("estimate", help="seeded Monte Carlo experiments")
    estimate.add_argument("target", choices=ESTIMATE_TARGETS)
    estimate.add_argument("--n", type=int, required=True)
    estimate.add_argument("--t", type=int, help="block size (strong-family, walk-tail)")
    estimate.add_argument("--trials", type=int, default=1000)
    estimate.add_argument("--seed", type=int, default=0)
    estimate.add_argument("--workers", type=int, default=1)
    estimate.add_argument("--k", type=int, help="prefix length (walk-tail), default n//2")
    estimate.add_argument("--kprime", type=int, help="walk horizon (walk-tail), default n//2")
    _output_flags(estimate, plot=True)

    return parser


def _output_flags(sub: argparse.ArgumentParser, plot: bool) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", help="artifact path (default stdout)")
    if plot:
        sub.add_argument(
            "--plot",
            action="store_true",
            help="also render a PNG next to --out",
        )


def _run_shards(worker: Callable, tasks: list) -> list:
    if len(tasks) == 1:
        return [worker(tasks[0])]
    with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
        return list(pool.map(worker, tasks))


def _sandwich_shard(task: tuple) -> object:
    n, samples, seed, index = task
    return sandwich_terms(n, samples, spawn_stream(seed, index))


def _family_shard(task: tuple) -> int:
    n, t, trials, seed, index = task
    return family_trial_count(n, t, trials, spawn_stream(seed, index))


def _lis_shard(task: tuple) -> tuple[int, ...]:
    n, samples, seed, index = task
    return lis_tail_experiment(n, samples, spawn_stream(seed, index)).values


def _walk_tail_shard(task: tuple) -> int:
    n, t, k, kprime, trials, seed, index = task
    return walk_tail_trial_count(n, t, k, kprime, trials, spawn_stream(seed, index))


def _shard_tasks(head: tuple, trials: int, seed: int, workers: int) -> list[tuple]:
    return [
        head + (size, seed, index)
        for index, size in enumerate(shard_sizes(trials, workers))
        if size > 0
    ]


def _handle_census(args: argparse.Namespace):
    if args.n < 1:
        raise ValueError(f"census needs --n >= 1, got {args.n}")
    config = {"command": f"census {args.target}", "n": args.n}
    if args.target == "weak":
        config["method"] = args.method
        rows = [vars(census_weak(m, args.method)) for m in range(1, args.n + 1)]
        columns = _WEAK_CENSUS_COLUMNS
    else:
        rows = [vars(census_strong(m)) for m in range(1, args.n + 1)]
        columns = _STRONG_CENSUS_COLUMNS

    def plot(path: str) -> None:
        from .plotting import plot_census

        plot_census(rows, args.target, path)

    return rows, columns, config, 0, plot


def _handle_verify(args: argparse.Namespace, parser: argparse.ArgumentParser):
    config = {"command": f"verify {args.target}", "n": args.n}
    if args.target == "psi":
        report = verify_psi_bound(args.n)
    elif args.target == "bp":
        report = verify_bp_sandwich(args.n)
    elif args.target == "greene":
        report = verify_greene(args.n)
    elif args.target == "walk-equivalence":
        report = walk_equivalence_check(args.n)
    else:
        if args.t is None:
            parser.error("verify balancing needs --t")
        config["t"] = args.t
        report = verify_balancing_exchange(args.n, args.t)
    payload = report.as_payload()
    return [payload], tuple(payload), config, 0 if report.passed else 1, None


def _handle_estimate(args: argparse.Namespace, parser: argparse.ArgumentParser):
    n, seed, trials, workers = args.n, args.seed, args.trials, args.workers
    if trials < 1:
        raise ValueError(f"need --trials >= 1, got {trials}")
    if workers < 1:
        raise ValueError(f"need --workers >= 1, got {workers}")
    config = {
        "command": f"estimate {args.target}",
        "n": n,
        "seed": seed,
        "trials": trials,
        "workers": workers,
    }

    if args.target == "weak-sandwich":
        partials = _run_shards(_sandwich_shard, _shard_tasks((n,), trials, seed, workers))
        sandwich = sandwich_from_partials(n, partials)
        row = {
            "n": n,
            "samples": sandwich.samples,
            "seed": seed,
            "lower": sandwich.lower_log_mean,
            "upper": sandwich.upper_log_mean,
            "norm_lower": sandwich.norm_lower,
            "norm_upper": sandwich.norm_upper,
        }

        def plot(path: str) -> None:
            from .plotting import plot_weak_sandwich

            plot_weak_sandwich(sandwich, path)

        return [row], tuple(row), config, 0, plot

    if args.target == "strong-family":
        t = args.t if args.t is not None else default_block_parameter(n)
        config["t"] = t
        counts = _run_shards(_family_shard, _shard_tasks((n, t), trials, seed, workers))
        report = family_from_count(n, t, trials, sum(counts))
        if report.hypothesis_warning:
            print(
                f"warning: t={t} is below 3 sqrt(n ln n); the "
                "near-certain-comparability regime is not in force",
                file=sys.stderr,
            )
        row = {
            "n": n,
            "t": t,
            "trials": trials,
            "seed": seed,
            "comparable": report.comparable,
            "fraction": report.fraction,
            "ci_radius": report.ci_radius,
        }

        def plot(path: str) -> None:
            from .plotting import plot_family_experiment

            plot_family_experiment(report, path)

        return [row], tuple(row), config, 0, plot

    if args.target == "lis-tail":
        shards = _run_shards(_lis_shard, _shard_tasks((n,), trials, seed, workers))
        values: list[int] = []
        for shard in shards:
            values.extend(shard)
        report = lis_tail_report(n, values)
        row = {
            "n": n,
            "samples": report.samples,
            "seed": seed,
            "threshold": report.threshold,
            "below": report.below,
            "fraction": report.fraction,
        }

        def plot(path: str) -> None:
            from .plotting import plot_lis_tail

            plot_lis_tail(report, path)

        return [row], tuple(row), config, 0, plot

    if args.t is None:
        parser.error("estimate walk-tail needs --t")
    k = args.k if args.k is not None else n // 2
    kprime = args.kprime if args.kprime is not None else n // 2
    config.update({"t": args.t, "k": k, "kprime": kprime})
    counts = _run_shards(
        _walk_tail_shard, _shard_tasks((n, args.t, k, kprime), trials, seed, workers)
    )
    report = walk_tail_from_count(n, args.t, k, kprime, trials, sum(counts))
    row = {
        "n": n,
        "t": args.t,
        "k": k,
        "kprime": kprime,
        "trials": trials,
        "seed": seed,
        "below_zero": report.below_zero,
        "frequency": report.frequency,
        "ceiling": report.ceiling,
    }

    def plot(path: str) -> None:
        from .plotting import plot_walk_tail

        plot_walk_tail(report, path)

    return [row], tuple(row), config, 0, plot


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "plot", False) and args.out is None:
        parser.error("--plot needs --out to name the artifact")
    started = time.perf_counter()
    try:
        if args.command == "census":
            rows, columns, config, code, plot = _handle_census(args)
        elif args.command == "verify":
            rows, columns, config, code, plot = _handle_verify(args, parser)
        else:
            rows, columns, config, code, plot = _handle_estimate(args, parser)

        if args.format == "json":
            text = render_json(rows, columns, config)
        else:
            text = render_csv(rows, columns, config)
        write_text(text, args.out)

        if getattr(args, "plot", False):
            png = str(Path(args.out).with_suffix(".png"))
            plot(png)
            print(f"plot written to {png}", file=sys.stderr)
    except (CapExceeded, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - started
    print(f"{config['command']} done in {elapsed:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
