"""Census and exponent bounds for comparability in the weak order.

The probability that one uniform permutation sits weakly below another is
count / (n!)^2, and everything here reports its natural log, usually further
normalized by n ln n.  Exact counts are exact integers; only the final
log-domain statistics are floats.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .limits import check_cap
from .numerics import (
    LogSumExp,
    log_factorial,
    log_tables,
    normalized_exponent,
)
from .permutations import all_permutations, inverse, inversion_set, random_permutation
from .posets import build_poset, count_linear_extensions, mirsky_block_sizes
from .tableaux import psi_stream, rsk_shape

WEAK_METHODS = ("pairwise-scan", "extension-sum")


@dataclass(frozen=True)
class WeakCensusRow:
    """One census line: the exact count and its log-domain summaries."""

    n: int
    count: int
    method: str
    log_prob: float
    normalized_exponent: float


def _census_row(n: int, count: int, method: str) -> WeakCensusRow:
    log_prob = math.log(count) - 2.0 * log_factorial(n)
    return WeakCensusRow(n, count, method, log_prob, normalized_exponent(log_prob, n))


def census_weak(n: int, method: str = "pairwise-scan") -> WeakCensusRow:
    """Exact number of weakly comparable ordered pairs in S_n x S_n.

    "pairwise-scan" tests inversion-mask containment over all (n!)^2 pairs
    (vectorized row against table); "extension-sum" adds up the linear
    extensions of every position poset.  The two must agree, and the small
    values 1, 3, 17 pin the convention that the count is ordered pairs
    including the diagonal.
    """
    if n < 1:
        raise ValueError(f"census needs n >= 1, got {n}")
    if method == "pairwise-scan":
        check_cap("WEAK_PAIRWISE", n, "pairwise weak census size")
        masks = np.empty(math.factorial(n), dtype=np.uint64)
        for idx, word in enumerate(all_permutations(n)):
            masks[idx] = inversion_set(inverse(word)).mask
        count = 0
        for upper in masks:
            count += int((masks & ~upper == 0).sum())
        return _census_row(n, count, method)
    if method == "extension-sum":
        check_cap("WEAK_EXTENSION", n, "extension-sum weak census size")
        count = sum(
            count_linear_extensions(build_poset(word))
            for word in all_permutations(n)
        )
        return _census_row(n, count, method)
    raise ValueError(f"unknown method {method!r}; use one of {WEAK_METHODS}")


def weak_lower_bound_exponent(n: int) -> float:
    """ln((q!)^(t-r) ((q+1)!)^r / n!) with t = ceil(3 sqrt n) and n = q t + r.

    The deterministic core of the lower bound: permutations with at most t
    Mirsky levels contribute at least the balanced factorial product.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    t = math.ceil(3.0 * math.sqrt(n))
    q, r = divmod(n, t)
    return (
        (t - r) * log_factorial(q)
        + r * log_factorial(q + 1)
        - log_factorial(n)
    )


def balanced_factorial_min(n: int, t: int) -> int:
    """(q!)^(t-r) ((q+1)!)^r, the minimal factorial product over t-part splits."""
    if n < 0 or t < 1:
        raise ValueError(f"need n >= 0 and t >= 1, got n={n}, t={t}")
    q, r = divmod(n, t)
    return math.factorial(q) ** (t - r) * math.factorial(q + 1) ** r


@dataclass(frozen=True)
class BalancingReport:
    n: int
    t: int
    compositions_checked: int
    exchanges_checked: int
    min_product: int
    argmin: tuple[int, ...]
    balanced_min: int
    passed: bool

    def as_payload(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "compositions": self.compositions_checked,
            "exchanges": self.exchanges_checked,
            "min_product": self.min_product,
            "argmin": ",".join(str(a) for a in self.argmin),
            "balanced_min": self.balanced_min,
            "pass": self.passed,
        }


def verify_balancing_exchange(n: int, t: int) -> BalancingReport:
    """Exhaustively confirm that balancing factorial products never hurts.

    Enumerates every t-tuple of nonnegative integers summing to n, checks
    the balanced tuple minimizes the factorial product, and checks each
    single balancing step (a, b) -> (a - 1, b + 1) with a > b + 1 does not
    increase the product.
    """
    check_cap("BALANCING_N", n, "balancing verification n")
    check_cap("BALANCING_T", t, "balancing verification t")
    fact = [math.factorial(k) for k in range(n + 2)]
    target = balanced_factorial_min(n, t)

    min_product: int | None = None
    argmin: tuple[int, ...] = ()
    compositions = 0
    exchanges = 0
    ok = True

    parts = [0] * t

    def rec(pos: int, remaining: int) -> None:
        nonlocal min_product, argmin, compositions, exchanges, ok
        if pos == t - 1:
            parts[pos] = remaining
            compositions += 1
            product = 1
            for a in parts:
                product *= fact[a]
            if product < target:
                ok = False
            if min_product is None or product < min_product:
                min_product = product
                argmin = tuple(sorted(parts, reverse=True))
            for i in range(t):
                ai = parts[i]
                for j in range(t):
                    if i != j and ai > parts[j] + 1:
                        exchanges += 1
                        stepped = product // fact[ai] // fact[parts[j]]
                        stepped *= fact[ai - 1] * fact[parts[j] + 1]
                        if stepped > product:
                            ok = False
            return
        for a in range(remaining + 1):
            parts[pos] = a
            rec(pos + 1, remaining - a)

    rec(0, n)
    balanced = tuple(sorted((n // t + (1 if i < n % t else 0) for i in range(t)), reverse=True))
    passed = ok and min_product == target and argmin == balanced
    return BalancingReport(
        n, t, compositions, exchanges, min_product or 0, argmin, target, passed
    )


def plancherel_upper_bound(n: int) -> float:
    """ln(n! * sum over partitions of e^-psi), folded by streaming log-sum-exp.

    An exact finite-n ceiling for the weak comparability log-probability; at
    n = 2 it equals ln(3/4) on the nose.
    """
    acc = LogSumExp()
    for _, value in psi_stream(n):
        acc.add(-value)
    return log_factorial(n) + acc.result()


@dataclass(frozen=True)
class ExponentSandwich:
    """Monte Carlo bracket for the weak comparability log-probability."""

    n: int
    samples: int
    lower_log_mean: float
    upper_log_mean: float
    normalization: float

    @property
    def norm_lower(self) -> float:
        return normalized_exponent(self.lower_log_mean, self.n)

    @property
    def norm_upper(self) -> float:
        return normalized_exponent(self.upper_log_mean, self.n)


@dataclass
class SandwichPartial:
    """One worker's accumulators; merged in worker-index order."""

    samples: int
    low: LogSumExp
    up: LogSumExp


def sandwich_terms(n: int, samples: int, rng: random.Random) -> SandwichPartial:
    """Per-sample sandwich terms, folded streaming in draw order.

    For each sampled word: the lower term is the sum of ln b! over Mirsky
    block sizes (a rank-ordered antichain partition, so the product of b!
    counts some of the linear extensions); the upper term is ln n! minus the
    sum of ln c! over the RSK shape.
    """
    if n < 1 or samples < 1:
        raise ValueError(f"need n >= 1 and samples >= 1, got n={n}, samples={samples}")
    _, lf = log_tables(n)
    low = LogSumExp()
    up = LogSumExp()
    for _ in range(samples):
        word = random_permutation(n, rng)
        term_low = 0.0
        for b in mirsky_block_sizes(word):
            term_low += lf[b]
        term_up = lf[n]
        for c in rsk_shape(word):
            term_up -= lf[c]
        low.add(term_low)
        up.add(term_up)
    return SandwichPartial(samples, low, up)


def sandwich_from_partials(
    n: int, partials: Sequence[SandwichPartial]
) -> ExponentSandwich:
    total = 0
    low = LogSumExp()
    up = LogSumExp()
    for part in partials:
        total += part.samples
        low.merge(part.low)
        up.merge(part.up)
    if total == 0:
        raise ValueError("no samples")
    shift = math.log(total) + log_factorial(n)
    return ExponentSandwich(
        n,
        total,
        low.result() - shift,
        up.result() - shift,
        0.0 if n == 1 else n * math.log(n),
    )


def sandwich_monte_carlo(n: int, samples: int, rng: random.Random) -> ExponentSandwich:
    """ln of the sample means of e^term / n!, for both sandwich sides.

    Each side is a genuine bound on the comparability probability in
    expectation; the per-sample terms already satisfy lower <= upper.
    """
    return sandwich_from_partials(n, [sandwich_terms(n, samples, rng)])


def hp_reference_bounds(n: int) -> tuple[float, float]:
    """Classical asymptotic reference envelope, for plotting only.

    Returns (ln(n! * prod H(i)), ln((n!)^2 * 0.362^n)) where H(i) is the
    i-th harmonic number.  These are asymptotic statements; nothing asserts
    them at finite n (the upper one is already false at n = 3).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    harmonic = 0.0
    log_h_sum = 0.0
    for i in range(1, n + 1):
        harmonic += 1.0 / i
        log_h_sum += math.log(harmonic)
    lower = log_factorial(n) + log_h_sum
    upper = 2.0 * log_factorial(n) + n * math.log(0.362)
    return lower, upper
