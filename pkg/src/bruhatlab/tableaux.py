"""Integer partitions, hooks, RSK, and the Plancherel-side machinery.

Partitions are tuples of weakly decreasing positive parts.  Counts that are
claimed exact (hook products, standard-tableau counts) are computed in exact
big integers; everything statistical lives in the natural-log domain through
the shared tables in :mod:`bruhatlab.numerics`.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Sequence

from .covers import max_union_sizes, min_cover_numbers
from .limits import check_cap
from .numerics import log_factorial, log_tables
from .permutations import all_permutations, check_permutation, random_permutation

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate weakly decreasing positive parts and return them as a tuple.

    >>> check_partition([4, 2, 1])
    (4, 2, 1)
    """
    p = tuple(parts)
    if not p:
        raise ValueError("empty partition; partitions here have size n >= 1")
    prev = None
    for part in p:
        if not isinstance(part, int) or part < 1:
            raise ValueError(f"parts must be positive integers: {p!r}")
        if prev is not None and part > prev:
            raise ValueError(f"parts must be weakly decreasing: {p!r}")
        prev = part
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form, e.g. "4,2,1"."""
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition text {text!r}") from None
    return check_partition(parts)


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in check_partition(parts))


def conjugate(parts: Sequence[int]) -> Partition:
    """Transpose of the diagram.

    >>> conjugate((4, 2, 1))
    (3, 2, 1, 1)
    """
    p = check_partition(parts)
    return tuple(sum(1 for q in p if q >= j) for j in range(1, p[0] + 1))


def _column_excess(parts: Partition) -> list[int]:
    # d[j] = (number of parts > j) - j for 0-based column j; the hook of box
    # (i, j) is then parts[i] - i - 1 + d[j], both indices 0-based
    width = parts[0]
    counts = [0] * (width + 1)
    for p in parts:
        counts[p] += 1
    d = [0] * width
    acc = 0
    for j in range(width - 1, -1, -1):
        acc += counts[j + 1]
        d[j] = acc - j
    return d


def hook_length(parts: Sequence[int], i: int, j: int) -> int:
    """Hook of the box in row i, column j (both 1-based).

    >>> hook_length((4, 2, 1), 1, 1)
    6
    """
    p = check_partition(parts)
    if not 1 <= i <= len(p) or not 1 <= j <= p[i - 1]:
        raise ValueError(f"box ({i}, {j}) is outside the diagram of {p!r}")
    arm = p[i - 1] - j
    leg = sum(1 for q in p if q >= j) - i
    return arm + leg + 1


def hook_product(parts: Sequence[int]) -> int:
    """Product of all hook lengths, as an exact integer."""
    p = check_partition(parts)
    d = _column_excess(p)
    out = 1
    for i0, m in enumerate(p):
        base = m - i0 - 1
        for dj in d[:m]:
            out *= base + dj
    return out


def _log_hook_product(parts: Partition, ln: list[float]) -> float:
    # callers guarantee a valid partition and ln filled through sum(parts)
    d = _column_excess(parts)
    total = 0.0
    for i0, m in enumerate(parts):
        base = m - i0 - 1
        total += sum(ln[base + dj] for dj in d[:m])
    return total


def log_hook_product(parts: Sequence[int]) -> float:
    """ln of the hook product, summed box by box from the shared ln table."""
    p = check_partition(parts)
    ln, _ = log_tables(sum(p))
    return _log_hook_product(p, ln)


def count_syt(parts: Sequence[int]) -> int:
    """Number of standard fillings, n! / (hook product), exact.

    >>> count_syt((4, 2, 1))
    35
    >>> count_syt((2, 2))
    2
    """
    p = check_partition(parts)
    n = sum(p)
    check_cap("SYT_EXACT", n, "partition size for exact tableau count")
    count, rem = divmod(math.factorial(n), hook_product(p))
    if rem:  # the hook formula divides evenly; anything else is a bug
        raise ArithmeticError(f"hook product does not divide {n}! for {p!r}")
    return count


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order.

    (n) comes first and (1, 1, .., 1) last:

    >>> list(enumerate_partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 1:
        raise ValueError(f"partition size must be >= 1, got {n}")
    check_cap("PARTITION_ENUM", n, "partition enumeration size")

    prefix: list[int] = []

    def rec(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part)
            prefix.pop()

    return rec(n, n)


_PARTITION_COUNTS = [1]  # p(0) = 1


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence (independent of the enumerator)."""
    if n < 0:
        raise ValueError(f"partition count of negative {n}")
    while len(_PARTITION_COUNTS) <= n:
        m = len(_PARTITION_COUNTS)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _PARTITION_COUNTS[m - g1]
            if g2 <= m:
                total += sign * _PARTITION_COUNTS[m - g2]
            k += 1
        _PARTITION_COUNTS.append(total)
    return _PARTITION_COUNTS[n]


def plancherel_log_weight(parts: Sequence[int]) -> float:
    """ln of the Plancherel mass (count_syt^2 / n!) in the log domain."""
    p = check_partition(parts)
    n = sum(p)
    ln, lf = log_tables(n)
    return lf[n] - 2.0 * _log_hook_product(p, ln)


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard filling: entries 1..n, rows and columns increasing."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = self.rows
        if not rows or not all(rows):
            raise ValueError("tableau rows must be nonempty")
        shape = [len(r) for r in rows]
        if any(a < b for a, b in zip(shape, shape[1:])):
            raise ValueError(f"row lengths must weakly decrease: {shape}")
        n = sum(shape)
        seen = bytearray(n + 1)
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if not isinstance(entry, int) or not 1 <= entry <= n or seen[entry]:
                    raise ValueError(f"entries must be exactly 1..{n}")
                seen[entry] = 1
                if c > 0 and row[c - 1] >= entry:
                    raise ValueError(f"row {r + 1} is not increasing")
                if r > 0 and rows[r - 1][c] >= entry:
                    raise ValueError(f"column {c + 1} is not increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)


def rsk(word: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row-insertion RSK: returns the insertion and recording tableaux.

    >>> p, q = rsk((3, 2, 1, 6, 5, 4, 7))
    >>> p.shape
    (3, 2, 2)
    """
    w = check_permutation(word)
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(prows):
                prows.append([x])
                qrows.append([step])
                break
            row = prows[r]
            pos = bisect_left(row, x)
            if pos == len(row):
                row.append(x)
                qrows[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return (
        StandardTableau(tuple(tuple(r) for r in prows)),
        StandardTableau(tuple(tuple(r) for r in qrows)),
    )


def rsk_shape(word: Sequence[int]) -> Partition:
    """Shape of the RSK insertion tableau, without building the tableaux."""
    w = check_permutation(word)
    rows: list[list[int]] = []
    for x in w:
        for row in rows:
            pos = bisect_left(row, x)
            if pos == len(row):
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return tuple(len(r) for r in rows)


def greene_union_bruteforce(word: Sequence[int], k: int) -> int:
    """Largest total size of k disjoint increasing subsequences, by exhaustive search.

    This is the independent oracle for the RSK partial sums: it never looks
    at a tableau.  Positions are vertices, two positions clash when they form
    a descent pair, and the subset-cover DP does the rest.
    """
    w = check_permutation(word)
    n = len(w)
    check_cap("GREENE_ORACLE", n, "exhaustive Greene oracle size")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best = max_union_sizes(min_cover_numbers(adj), n)
    return best[min(k, n)]


@dataclass(frozen=True)
class GreeneReport:
    n: int
    words_checked: int
    mismatches: int
    passed: bool

    def as_payload(self) -> dict:
        return {
            "n": self.n,
            "words": self.words_checked,
            "mismatches": self.mismatches,
            "pass": self.passed,
        }


def verify_greene(n: int) -> GreeneReport:
    """Check RSK shape partial sums against the exhaustive oracle, all of S_n.

    For every word and every k, the sum of the first k shape rows must equal
    the largest union of k increasing subsequences.
    """
    check_cap("GREENE_ORACLE", n, "exhaustive Greene oracle size")
    words = 0
    bad = 0
    for word in all_permutations(n):
        words += 1
        shape = rsk_shape(word)
        padded = list(shape) + [0] * (n - len(shape))
        total = 0
        ok = True
        for k in range(1, n + 1):
            total += padded[k - 1]
            if greene_union_bruteforce(word, k) != total:
                ok = False
        if not ok:
            bad += 1
    return GreeneReport(n, words, bad, bad == 0)


def psi(parts: Sequence[int]) -> float:
    """2 ln(hook product) + sum of ln(part!).

    >>> round(psi((2,)) / math.log(2), 12)
    3.0
    """
    p = check_partition(parts)
    ln, lf = log_tables(sum(p))
    return 2.0 * _log_hook_product(p, ln) + sum(lf[q] for q in p)


def psi_bound(n: int) -> float:
    """The floor 1.5 n ln n - 5 n that every partition's psi must clear."""
    if n < 1:
        raise ValueError(f"bound needs n >= 1, got {n}")
    return 1.5 * n * math.log(n) - 5.0 * n


def psi_stream(n: int) -> Iterator[tuple[Partition, float]]:
    """(partition, psi) for every partition of n, in reverse-lex order."""
    ln, lf = log_tables(n)
    for parts in enumerate_partitions(n):
        value = 2.0 * _log_hook_product(parts, ln)
        for q in parts:
            value += lf[q]
        yield parts, value


@dataclass(frozen=True)
class PsiBoundReport:
    n: int
    min_psi: float
    bound: float
    argmin: Partition
    passed: bool
    partitions_checked: int

    def as_payload(self) -> dict:
        return {
            "n": self.n,
            "min_psi": self.min_psi,
            "bound": self.bound,
            "argmin": format_partition(self.argmin),
            "pass": self.passed,
        }


def verify_psi_bound(n: int) -> PsiBoundReport:
    """Sweep every partition of n and check psi against its floor."""
    best = math.inf
    argmin: Partition = (n,)
    checked = 0
    for parts, value in psi_stream(n):
        checked += 1
        if value < best:
            best = value
            argmin = parts
    bound = psi_bound(n)
    return PsiBoundReport(n, best, bound, argmin, best >= bound, checked)


def sample_plancherel(n: int, rng: random.Random) -> Partition:
    """Plancherel-distributed shape, via RSK on a uniform permutation."""
    return rsk_shape(random_permutation(n, rng))


@dataclass(frozen=True)
class LisTailReport:
    n: int
    samples: int
    threshold: float
    below: int
    fraction: float
    values: tuple[int, ...]


def _first_parts(n: int, samples: int, rng: random.Random) -> list[int]:
    return [sample_plancherel(n, rng)[0] for _ in range(samples)]


def lis_tail_report(n: int, values: Sequence[int], threshold: float | None = None) -> LisTailReport:
    if threshold is None:
        threshold = 3.0 * math.sqrt(n)
    below = sum(1 for v in values if v <= threshold)
    return LisTailReport(
        n, len(values), threshold, below, below / len(values), tuple(values)
    )


def lis_tail_experiment(
    n: int, samples: int, rng: random.Random, threshold: float | None = None
) -> LisTailReport:
    """Frequency of Plancherel samples whose first row stays under the threshold.

    The default threshold 3 sqrt(n) is the classical high-probability ceiling
    for the longest increasing subsequence.
    """
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    return lis_tail_report(n, _first_parts(n, samples, rng), threshold)
