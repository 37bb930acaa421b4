"""Shared numeric helpers.  Everything here works in the natural-log domain.

Large counts are compared through their logarithms, so the logarithms have
to be trustworthy: ``log_factorial`` is a cumulative table of exact
``math.log`` calls, never a Stirling approximation, and log-sum-exp keeps a
running maximum so the partial sums cannot overflow.
"""

from __future__ import annotations

import math
from typing import Iterable

# ln k! and ln k, grown on demand and shared process-wide.  Index k.
_LOG_FACT: list[float] = [0.0]
_LOG_INT: list[float] = [0.0]  # slot 0 is a placeholder, ln 0 is never asked for


def _grow(k: int) -> None:
    while len(_LOG_INT) <= k:
        _LOG_INT.append(math.log(len(_LOG_INT)))
    while len(_LOG_FACT) <= k:
        _LOG_FACT.append(_LOG_FACT[-1] + _LOG_INT[len(_LOG_FACT)])


def log_factorial(k: int) -> float:
    """ln k! by cumulative summation; 0! = 1 so log_factorial(0) == 0.0."""
    if k < 0:
        raise ValueError(f"factorial of negative {k}")
    if k >= len(_LOG_FACT):
        _grow(k)
    return _LOG_FACT[k]


def log_int(k: int) -> float:
    """ln k for positive integers, from the same shared table."""
    if k < 1:
        raise ValueError(f"log of non-positive integer {k}")
    if k >= len(_LOG_INT):
        _grow(k)
    return _LOG_INT[k]


def log_tables(k: int) -> tuple[list[float], list[float]]:
    """The (ln i, ln i!) tables filled through index k, for tight loops.

    Callers must treat the returned lists as read-only.
    """
    _grow(k)
    return _LOG_INT, _LOG_FACT


class LogSumExp:
    """Streaming ln(sum of e^x) with a running maximum.

    Values are folded in the order they are added, and that order is the
    documented reduction order, so a fixed input sequence reproduces the
    result bit for bit.
    """

    def __init__(self) -> None:
        self._max = -math.inf
        self._sum = 0.0
        self._count = 0

    def add(self, x: float) -> None:
        if self._count == 0 or x > self._max:
            # rescale the accumulated sum to the new maximum
            self._sum = self._sum * math.exp(self._max - x) if self._count else 0.0
            self._sum += 1.0
            self._max = x
        else:
            self._sum += math.exp(x - self._max)
        self._count += 1

    def merge(self, other: "LogSumExp") -> None:
        """Fold another accumulator in (used to reduce worker shards in index order)."""
        if other._count == 0:
            return
        if self._count == 0 or other._max > self._max:
            self._sum = self._sum * math.exp(self._max - other._max) if self._count else 0.0
            self._sum += other._sum
            self._max = other._max
        else:
            self._sum += other._sum * math.exp(other._max - self._max)
        self._count += other._count

    @property
    def count(self) -> int:
        return self._count

    def result(self) -> float:
        """ln(sum of e^x) over everything added; -inf when empty."""
        if self._count == 0 or self._max == -math.inf:
            return -math.inf
        return self._max + math.log(self._sum)


def log_sum_exp(values: Iterable[float]) -> float:
    acc = LogSumExp()
    for v in values:
        acc.add(v)
    return acc.result()


def log_mean_exp(values: Iterable[float]) -> float:
    """ln of the arithmetic mean of e^x; errors on an empty iterable."""
    acc = LogSumExp()
    for v in values:
        acc.add(v)
    if acc.count == 0:
        raise ValueError("log_mean_exp of an empty sequence")
    return acc.result() - math.log(acc.count)


def normalized_exponent(log_value: float, n: int) -> float:
    """log_value / (n ln n), with the n = 1 case pinned to 0.0 by convention."""
    if n < 1:
        raise ValueError(f"normalization needs n >= 1, got {n}")
    if n == 1:
        return 0.0
    return log_value / (n * math.log(n))
