"""Permutations in one-line notation, with the weak and strong comparability tests.

A permutation of size n is a tuple ``w`` of the values 1..n, where ``w[i-1]``
is the image of position i.  Composition follows (s o t)(i) = s(t(i)), so
``compose(s, t)`` applies t first.  All public functions accept any integer
sequence and validate it.

The weak comparability test is containment of inversion sets of the
inverses; the strong test is the Gale comparison of all prefix value-sets,
run through an equivalent dominance-count table for speed.
"""

from __future__ import annotations

import random
from bisect import bisect_left, insort
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Sequence

from .limits import check_cap

Perm = tuple[int, ...]


def check_permutation(word: Sequence[int]) -> Perm:
    """Validate one-line notation and return it as a tuple.

    >>> check_permutation([2, 1, 3])
    (2, 1, 3)
    >>> check_permutation([2, 2, 3])
    Traceback (most recent call last):
        ...
    ValueError: word is not a permutation of 1..3: (2, 2, 3)
    """
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValueError("empty word; permutations here have size n >= 1")
    check_cap("PERM_SIZE", n, "permutation size")
    seen = bytearray(n + 1)
    for v in w:
        if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
            raise ValueError(f"word is not a permutation of 1..{n}: {w!r}")
        seen[v] = 1
    return w


def parse_permutation(text: str) -> Perm:
    """Parse the space-separated text form, e.g. "3 2 1 6 5 4 7"."""
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError:
        raise ValueError(f"cannot parse permutation text {text!r}") from None
    return check_permutation(values)


def format_permutation(word: Sequence[int]) -> str:
    return " ".join(str(v) for v in check_permutation(word))


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    return tuple(range(1, n + 1))


def reversal(n: int) -> Perm:
    """The order-reversing word n, n-1, .., 1 (the maximum of both orders)."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    return tuple(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order of the one-line words."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    return _itertools_permutations(range(1, n + 1))


def compose(s: Sequence[int], t: Sequence[int]) -> Perm:
    """(s o t)(i) = s(t(i)); t acts first.

    >>> compose((2, 3, 1), (2, 1, 3))
    (3, 2, 1)
    """
    s = check_permutation(s)
    t = check_permutation(t)
    if len(s) != len(t):
        raise ValueError(f"size mismatch: {len(s)} vs {len(t)}")
    return tuple(s[v - 1] for v in t)


def inverse(s: Sequence[int]) -> Perm:
    """>>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    s = check_permutation(s)
    out = [0] * len(s)
    for i, v in enumerate(s):
        out[v - 1] = i + 1
    return tuple(out)


def pair_slot(n: int, i: int, j: int) -> int:
    """Bit index of the pair (i, j), i < j, in lexicographic pair order.

    (1,2) -> 0, (1,3) -> 1, ..., (1,n) -> n-2, (2,3) -> n-1, ...
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    i0 = i - 1
    return i0 * n - i0 * (i0 + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class InversionSet:
    """The set of inversions of a permutation, stored as a fixed-width bit mask.

    Bit ``pair_slot(n, i, j)`` is set when positions i < j hold descending
    values.  Containment of such sets is the whole weak-order story, so the
    mask representation makes the order test one integer operation.
    """

    n: int
    mask: int

    @classmethod
    def from_pairs(cls, n: int, pairs: Sequence[tuple[int, int]]) -> "InversionSet":
        mask = 0
        for i, j in pairs:
            mask |= 1 << pair_slot(n, i, j)
        return cls(n, mask)

    def pairs(self) -> frozenset[tuple[int, int]]:
        out = []
        slot = 0
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if self.mask >> slot & 1:
                    out.append((i, j))
                slot += 1
        return frozenset(out)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return bool(self.mask >> pair_slot(self.n, i, j) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def issubset(self, other: "InversionSet") -> bool:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return self.mask & ~other.mask == 0


def inversion_set(s: Sequence[int]) -> InversionSet:
    """All pairs (i, j) with i < j and s(i) > s(j).

    >>> sorted(inversion_set((3, 1, 2)).pairs())
    [(1, 2), (1, 3)]
    """
    s = check_permutation(s)
    n = len(s)
    mask = 0
    slot = 0
    for i in range(n):
        si = s[i]
        for j in range(i + 1, n):
            if si > s[j]:
                mask |= 1 << slot
            slot += 1
    return InversionSet(n, mask)


def weak_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Weak-order comparability: Inv(a^-1) contained in Inv(b^-1).

    >>> weak_leq((2, 1, 3), (2, 3, 1))
    True
    >>> weak_leq((2, 3, 1), (2, 1, 3))
    False
    """
    return inversion_set(inverse(a)).issubset(inversion_set(inverse(b)))


@dataclass(frozen=True)
class PrefixSet:
    """The value set of a length-k prefix, kept sorted ascending."""

    n: int
    k: int
    values: tuple[int, ...]


def prefix_set(s: Sequence[int], k: int) -> PrefixSet:
    s = check_permutation(s)
    if not 1 <= k <= len(s):
        raise ValueError(f"prefix length must be in 1..{len(s)}, got {k}")
    return PrefixSet(len(s), k, tuple(sorted(s[:k])))


def gale_leq(a: PrefixSet, b: PrefixSet) -> bool:
    """Componentwise comparison of the sorted k-sets (the Gale order)."""
    if a.n != b.n or a.k != b.k:
        raise ValueError(
            f"prefix sets not comparable: ({a.n}, {a.k}) vs ({b.n}, {b.k})"
        )
    return all(x <= y for x, y in zip(a.values, b.values))


def strong_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Strong-order comparability via the dominance-count table.

    a <= b iff every prefix value-set of a is Gale-below the matching prefix
    of b, which is equivalent to D_a[k][v] >= D_b[k][v] for all k, v where
    D_w[k][v] counts positions i <= k with w(i) <= v.  The scan runs k
    ascending then v ascending and exits on the first violated pair.

    >>> strong_leq((2, 1, 4, 3), (3, 4, 1, 2))
    True
    >>> strong_leq((1, 3, 2), (2, 1, 3))
    False
    """
    a = check_permutation(a)
    b = check_permutation(b)
    n = len(a)
    if n != len(b):
        raise ValueError(f"size mismatch: {n} vs {len(b)}")
    if n >= 32:
        return _strong_leq_bulk(a, b)
    # delta[v] accumulates point changes; its prefix sums over v are
    # D_a[k][.] - D_b[k][.] for the current k
    delta = [0] * (n + 1)
    for k in range(n):
        x = a[k]
        y = b[k]
        delta[x] += 1
        delta[y] -= 1
        if x <= y:
            # prefix sums only grew on [x, y); they were nonnegative before
            continue
        run = 0
        for v in range(1, n + 1):
            run += delta[v]
            if run < 0:
                return False
    return True


def _strong_leq_bulk(a: Perm, b: Perm) -> bool:
    # full dominance tables via cumulative sums; worth it once n is large
    import numpy as np

    n = len(a)
    da = np.zeros((n, n), dtype=np.int32)
    db = np.zeros((n, n), dtype=np.int32)
    da[np.arange(n), np.fromiter(a, dtype=np.int64) - 1] = 1
    db[np.arange(n), np.fromiter(b, dtype=np.int64) - 1] = 1
    da = da.cumsum(axis=0).cumsum(axis=1)
    db = db.cumsum(axis=0).cumsum(axis=1)
    return bool((da >= db).all())


def strong_leq_via_gale(a: Sequence[int], b: Sequence[int]) -> bool:
    """Strong-order test straight from the definition, prefix by prefix.

    Kept as the slow cross-check for the dominance path.
    """
    a = check_permutation(a)
    b = check_permutation(b)
    n = len(a)
    if n != len(b):
        raise ValueError(f"size mismatch: {n} vs {len(b)}")
    pa: list[int] = []
    pb: list[int] = []
    for k in range(n):
        insort(pa, a[k])
        insort(pb, b[k])
        if any(x > y for x, y in zip(pa, pb)):
            return False
    return True


def longest_increasing_subsequence(s: Sequence[int]) -> int:
    """Length of the longest increasing subsequence, by patience sorting.

    >>> longest_increasing_subsequence((3, 2, 1, 6, 5, 4, 7))
    3
    """
    s = check_permutation(s)
    tails: list[int] = []
    for v in s:
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
    return len(tails)


def shuffle_in_place(values: list, rng: random.Random) -> None:
    """Index-swap (Fisher-Yates) shuffle driven by the given stream.

    Spelled out rather than delegated to rng.shuffle so the draw sequence is
    pinned by this code, not by the stdlib's internals.
    """
    for i in range(len(values) - 1, 0, -1):
        j = rng.randrange(i + 1)
        values[i], values[j] = values[j], values[i]


def random_permutation(n: int, rng: random.Random) -> Perm:
    """Uniform sample from S_n; deterministic given the stream state."""
    if n < 1:
        raise ValueError(f"size must be >= 1, got {n}")
    check_cap("PERM_SIZE", n, "permutation size")
    word = list(range(1, n + 1))
    shuffle_in_place(word, rng)
    return tuple(word)
