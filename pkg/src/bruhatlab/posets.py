"""The natural poset on positions of a permutation, and what it counts.

Position i sits below position j when i < j and the values agree, w(i) < w(j);
chains are increasing subsequences and antichains decreasing ones.  Linear
extensions of these posets are exactly what the weak-order census adds up,
so the counting here is all exact integers.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .covers import max_union_sizes, min_cover_numbers
from .limits import check_cap
from .numerics import log_factorial
from .permutations import (
    Perm,
    all_permutations,
    check_permutation,
    inverse,
    inversion_set,
)
from .tableaux import Partition, rsk_shape


@dataclass(frozen=True)
class PermutationPoset:
    """Dominance table of a permutation's position poset.

    ``below[i]`` and ``above[i]`` are bitmasks over 0-based positions: strict
    predecessors and successors of position i.  The masks are the rows of the
    n x n boolean dominance table, packed.
    """

    n: int
    source: Perm
    below: tuple[int, ...]
    above: tuple[int, ...]

    def less(self, i: int, j: int) -> bool:
        """Is position i strictly below position j (1-based positions)?"""
        if not 1 <= i <= self.n or not 1 <= j <= self.n:
            raise ValueError(f"positions must be in 1..{self.n}, got ({i}, {j})")
        return bool(self.above[i - 1] >> (j - 1) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)


def build_poset(word: Sequence[int]) -> PermutationPoset:
    """Materialize the dominance table of the position poset."""
    w = check_permutation(word)
    n = len(w)
    below = [0] * n
    above = [0] * n
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi < w[j]:
                above[i] |= 1 << j
                below[j] |= 1 << i
    return PermutationPoset(n, w, tuple(below), tuple(above))


def count_linear_extensions(poset: PermutationPoset) -> int:
    """Exact number of linear extensions, by DP over order ideals.

    States are downward-closed position sets as bitmasks, memoized per call;
    the count for an ideal sums the counts after removing each maximal
    element.  Worst case touches every ideal, hence the size cap.
    """
    n = check_cap("EXTENSION_DP", poset.n, "linear-extension DP size")
    above = poset.above
    memo: dict[int, int] = {0: 1}

    def count(ideal: int) -> int:
        cached = memo.get(ideal)
        if cached is not None:
            return cached
        total = 0
        rest = ideal
        while rest:
            low = rest & -rest
            rest ^= low
            # maximal in the ideal: no successor inside it
            if not above[low.bit_length() - 1] & ideal:
                total += count(ideal ^ low)
        memo[ideal] = total
        return total

    return count((1 << n) - 1)


def weak_down_count(word: Sequence[int], method: str = "extensions") -> int:
    """How many permutations sit weakly below ``word``.

    The "extensions" route counts linear extensions of the poset of the
    inverse word; the "scan" route tests every member of S_n directly and is
    the oracle the identity is checked against.

    >>> weak_down_count((2, 3, 1))
    3
    """
    w = check_permutation(word)
    n = len(w)
    if method == "extensions":
        return count_linear_extensions(build_poset(inverse(w)))
    if method == "scan":
        check_cap("WEAK_SCAN", n, "direct weak-order scan size")
        bound = inversion_set(inverse(w)).mask
        total = 0
        for other in all_permutations(n):
            if inversion_set(inverse(other)).mask & ~bound == 0:
                total += 1
        return total
    raise ValueError(f"unknown method {method!r}; use 'extensions' or 'scan'")


def _comparability_masks(poset: PermutationPoset) -> list[int]:
    return [b | a for b, a in zip(poset.below, poset.above)]


def max_union_of_antichains(poset: PermutationPoset, k: int) -> int:
    """Largest union of k antichains, found by the exhaustive subset engine."""
    check_cap("ANTICHAIN_ORACLE", poset.n, "exhaustive antichain search size")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    best = max_union_sizes(min_cover_numbers(_comparability_masks(poset)), poset.n)
    return best[min(k, poset.n)]


def antichain_gkf_params(poset: PermutationPoset) -> tuple[int, ...]:
    """Increments of the maximal k-antichain unions, brute-forced.

    Never derived from the conjugate RSK shape: the two agreeing is an
    observation worth testing, not an assumption worth baking in.
    """
    check_cap("ANTICHAIN_ORACLE", poset.n, "exhaustive antichain search size")
    n = poset.n
    best = max_union_sizes(min_cover_numbers(_comparability_masks(poset)), n)
    params = []
    prev = 0
    for k in range(1, n + 1):
        params.append(best[k] - prev)
        prev = best[k]
        if prev == n:
            break
    return tuple(params)


@dataclass(frozen=True)
class GkfProfile:
    """Chain and antichain profiles of one position poset."""

    n: int
    chain_params: Partition
    antichain_params: tuple[int, ...]


def gkf_profile(poset: PermutationPoset) -> GkfProfile:
    """Chain side from the RSK shape (Greene), antichain side by brute force."""
    return GkfProfile(
        poset.n,
        rsk_shape(poset.source),
        antichain_gkf_params(poset),
    )


def _lis_ranks(word: Perm) -> list[int]:
    # rank = length of the longest increasing subsequence ending here
    tails: list[int] = []
    ranks: list[int] = []
    for v in word:
        pos = bisect_left(tails, v)
        if pos == len(tails):
            tails.append(v)
        else:
            tails[pos] = v
        ranks.append(pos + 1)
    return ranks


def mirsky_partition(poset: PermutationPoset) -> tuple[tuple[int, ...], ...]:
    """Level sets of longest-chain rank: a partition into height many antichains.

    Block ``b`` holds the 1-based positions whose longest chain ending there
    has length b + 1.
    """
    ranks = _lis_ranks(poset.source)
    blocks: list[list[int]] = [[] for _ in range(max(ranks))]
    for pos, r in enumerate(ranks, start=1):
        blocks[r - 1].append(pos)
    return tuple(tuple(b) for b in blocks)


def mirsky_block_sizes(word: Sequence[int]) -> tuple[int, ...]:
    """Sizes of the Mirsky level sets, straight from the word in O(n log n)."""
    w = check_permutation(word)
    ranks = _lis_ranks(w)
    sizes = [0] * max(ranks)
    for r in ranks:
        sizes[r - 1] += 1
    return tuple(sizes)


def bochkov_petrov_bounds(
    poset: PermutationPoset, antichain_sizes: Sequence[int] | None = None
) -> tuple[float, float]:
    """ln lower and upper bounds for the linear-extension count.

    Lower: sum of ln a_i! over an antichain profile (the brute-forced GKF
    parameters unless the caller supplies a surrogate partition such as the
    Mirsky block sizes).  Upper: ln n! minus the sum of ln c_j! over the
    chain profile, which Greene's theorem reads off the RSK shape.
    """
    if antichain_sizes is None:
        a = antichain_gkf_params(poset)
    else:
        a = tuple(antichain_sizes)
        if sum(a) != poset.n or any(x < 1 for x in a):
            raise ValueError(f"antichain sizes must partition {poset.n}: {a!r}")
    chain = rsk_shape(poset.source)
    lower = sum(log_factorial(x) for x in a)
    upper = log_factorial(poset.n) - sum(log_factorial(c) for c in chain)
    return lower, upper


@dataclass(frozen=True)
class BpSandwichReport:
    n: int
    checked: int
    failures: tuple[str, ...]
    passed: bool

    def as_payload(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "failures": len(self.failures),
            "pass": self.passed,
        }


def verify_bp_sandwich(n: int) -> BpSandwichReport:
    """Exact factorial sandwich on every member of S_n.

    For each word: product of a_i! (brute-forced antichain profile) must not
    exceed the linear-extension count, which must not exceed the multinomial
    n! / product of c_j! (RSK chain profile).  All in exact integers.
    """
    check_cap("ANTICHAIN_ORACLE", n, "exhaustive antichain search size")
    check_cap("EXTENSION_DP", n, "linear-extension DP size")
    factorial = math.factorial
    nfact = factorial(n)
    failures: list[str] = []
    checked = 0
    for word in all_permutations(n):
        poset = build_poset(word)
        ext = count_linear_extensions(poset)
        low = 1
        for a in antichain_gkf_params(poset):
            low *= factorial(a)
        denom = 1
        for c in rsk_shape(word):
            denom *= factorial(c)
        high, rem = divmod(nfact, denom)
        # the multinomial is exact; a remainder would be a bug upstream
        if rem:
            raise ArithmeticError(f"non-integer multinomial for {word!r}")
        checked += 1
        if not low <= ext <= high:
            if len(failures) < 10:
                failures.append(" ".join(str(v) for v in word))
    return BpSandwichReport(n, checked, tuple(failures), not failures)
