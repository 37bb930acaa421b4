"""Optional figure rendering for the CLI's --plot flag.

Everything goes through the Agg backend straight to PNG files; nothing here
opens a window.  The Software metadata field is pinned so identical runs
produce identical bytes.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .numerics import log_factorial
from .reports import TOOL_NAME, TOOL_VERSION
from .strong_order import FamilyExperiment, WalkTailReport
from .tableaux import LisTailReport
from .weak_order import (
    ExponentSandwich,
    hp_reference_bounds,
    weak_lower_bound_exponent,
)

_SOFTWARE = {"Software": f"{TOOL_NAME} {TOOL_VERSION}"}


def save_figure(fig, path: str) -> None:
    fig.savefig(path, format="png", dpi=100, metadata=_SOFTWARE)
    plt.close(fig)


def _norm(value: float, n: int) -> float:
    return 0.0 if n == 1 else value / (n * math.log(n))


def plot_census(
    rows: Sequence[Mapping[str, object]], kind: str, path: str
) -> None:
    """Census curve; the weak flavor carries its reference envelopes."""
    ns = [int(row["n"]) for row in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if kind == "weak":
        ax.plot(
            ns,
            [float(row["normalized_exponent"]) for row in rows],
            "o-",
            label="census",
        )
        ax.plot(
            ns,
            [_norm(weak_lower_bound_exponent(n), n) for n in ns],
            "s--",
            label="factorial-block lower",
        )
        # the references come on the count scale; shift to log probability
        refs = [hp_reference_bounds(n) for n in ns]
        shifts = [2.0 * log_factorial(n) for n in ns]
        ax.plot(
            ns,
            [_norm(lo - s, n) for (lo, _), s, n in zip(refs, shifts, ns)],
            ":",
            label="harmonic reference",
        )
        ax.plot(
            ns,
            [_norm(up - s, n) for (_, up), s, n in zip(refs, shifts, ns)],
            ":",
            label="0.362^n reference",
        )
        ax.set_ylabel("log probability / (n ln n)")
    else:
        ax.semilogy(ns, [int(row["count"]) for row in rows], "o-", label="count")
        ax.set_ylabel("comparable ordered pairs")
    ax.set_xlabel("n")
    ax.set_title(f"{kind} order census")
    ax.legend()
    fig.tight_layout()
    save_figure(fig, path)


def plot_weak_sandwich(sandwich: ExponentSandwich, path: str) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    n = sandwich.n
    lo, hi = sandwich.norm_lower, sandwich.norm_upper
    ax.errorbar(
        [n],
        [(lo + hi) / 2.0],
        yerr=[[(hi - lo) / 2.0], [(hi - lo) / 2.0]],
        fmt="o",
        capsize=6.0,
        label="sampled bracket",
    )
    ax.axhline(
        _norm(weak_lower_bound_exponent(n), n),
        linestyle="--",
        color="gray",
        label="factorial-block lower",
    )
    ax.set_xlabel("n")
    ax.set_ylabel("log probability / (n ln n)")
    ax.set_title(f"weak comparability exponent bracket, {sandwich.samples} samples")
    ax.legend()
    fig.tight_layout()
    save_figure(fig, path)


def plot_family_experiment(report: FamilyExperiment, path: str) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    ax.bar([0], [report.fraction], width=0.5, label="comparable fraction")
    ax.errorbar([0], [report.fraction], yerr=[report.ci_radius], fmt="none", capsize=8.0, color="black")
    ax.axhline(1.0, linestyle=":", color="gray")
    ax.set_xticks([0])
    ax.set_xticklabels([f"n={report.n}, t={report.t}"])
    ax.set_ylim(0.0, 1.05)
    ax.set_ylabel("fraction of comparable pairs")
    ax.set_title(f"block-family comparability, {report.trials} trials")
    ax.legend()
    fig.tight_layout()
    save_figure(fig, path)


def plot_lis_tail(report: LisTailReport, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    lo = min(report.values)
    hi = max(report.values)
    bins = [b - 0.5 for b in range(lo, hi + 2)]
    ax.hist(report.values, bins=bins, label="first-row length")
    ax.axvline(report.threshold, color="red", linestyle="--", label="3 sqrt(n)")
    ax.set_xlabel("longest increasing subsequence")
    ax.set_ylabel("samples")
    ax.set_title(f"Plancherel first row, n={report.n}")
    ax.legend()
    fig.tight_layout()
    save_figure(fig, path)


def plot_walk_tail(report: WalkTailReport, path: str) -> None:
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    ax.bar([0], [report.frequency], width=0.5, label="observed dip frequency")
    ax.axhline(report.ceiling, linestyle="--", color="red", label="exp(-t^2/n) ceiling")
    ax.set_xticks([0])
    ax.set_xticklabels([f"n={report.n}, t={report.t}, k'={report.kprime}"])
    ax.set_ylabel("frequency of endpoint below zero")
    ax.set_title(f"walk tail, {report.trials} trials")
    ax.legend()
    fig.tight_layout()
    save_figure(fig, path)
