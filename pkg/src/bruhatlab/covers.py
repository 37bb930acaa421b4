"""Exhaustive minimum-cover numbers over all vertex subsets of a tiny graph.

Used as the independent oracle for both Greene-style profiles: chains are
independent sets of the incomparability graph, antichains are independent
sets of the comparability graph.  The DP below is a plain exhaustive subset
sweep (memoized by construction, every smaller subset is already solved), so
it owes nothing to RSK or to any conjugation identity.
"""

from __future__ import annotations

from typing import Sequence


def min_cover_numbers(adj: Sequence[int]) -> list[int]:
    """chi[S] = least number of independent sets whose union is exactly S.

    ``adj[i]`` is the bitmask of vertices adjacent to vertex i; an
    independent set touches no edge.  chi is returned for every subset mask
    S of the vertex set, chi[0] = 0.  Exponential in len(adj): callers cap n.
    """
    n = len(adj)
    size = 1 << n
    # independent[m] for every mask, by peeling the lowest vertex
    independent = bytearray(size)
    independent[0] = 1
    for m in range(1, size):
        low = m & -m
        rest = m ^ low
        if independent[rest] and not (adj[low.bit_length() - 1] & rest):
            independent[m] = 1

    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        # the class containing v can only recruit non-neighbors inside s
        pool = s & ~adj[v] & ~low
        best = n
        sub = pool
        while True:
            cls = sub | low
            if independent[cls]:
                c = 1 + chi[s ^ cls]
                if c < best:
                    best = c
                    if best == 1:
                        break
            if sub == 0:
                break
            sub = (sub - 1) & pool
        chi[s] = best
    return chi


def max_union_sizes(chi: list[int], n: int) -> list[int]:
    """result[k] = largest |S| coverable by at most k independent sets, k = 0..n."""
    best = [0] * (n + 1)
    for s, c in enumerate(chi):
        pc = s.bit_count()
        if pc > best[c]:
            best[c] = pc
    # coverable by at most k is monotone in k
    for k in range(1, n + 1):
        if best[k] < best[k - 1]:
            best[k] = best[k - 1]
    return best
