"""Subset-cover engine against a brute chromatic oracle."""

from __future__ import annotations

import itertools

from hypothesis import given
from hypothesis import strategies as st

from bruhatlab.covers import max_union_sizes, min_cover_numbers


@st.composite
def graphs(draw, max_n: int = 6):
    """Adjacency bitmasks of a small undirected graph."""
    n = draw(st.integers(1, max_n))
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def brute_min_cover(adj: list[int], subset: int) -> int:
    """Fewest independent classes covering `subset`, by trying colorings."""
    vertices = [v for v in range(len(adj)) if subset >> v & 1]
    if not vertices:
        return 0
    for colors in range(1, len(vertices) + 1):
        for paint in itertools.product(range(colors), repeat=len(vertices)):
            ok = True
            for a, b in itertools.combinations(range(len(vertices)), 2):
                if paint[a] == paint[b] and adj[vertices[a]] >> vertices[b] & 1:
                    ok = False
                    break
            if ok and len(set(paint)) == colors:
                return colors
    raise AssertionError("unreachable: n colors always work")


@given(graphs())
def test_cover_numbers_match_colorings(adj):
    chi = min_cover_numbers(adj)
    for subset in range(1 << len(adj)):
        assert chi[subset] == brute_min_cover(adj, subset), f"subset {subset:b}"


@given(graphs())
def test_union_sizes_match_direct_scan(adj):
    n = len(adj)
    chi = min_cover_numbers(adj)
    best = max_union_sizes(chi, n)
    assert best[0] == 0
    for k in range(1, n + 1):
        want = max(
            bin(subset).count("1")
            for subset in range(1 << n)
            if chi[subset] <= k
        )
        assert best[k] == want
    assert best[n] == n


def test_triangle_plus_isolated():
    # triangle on 0,1,2 plus isolated vertex 3
    adj = [0b0110, 0b0101, 0b0011, 0]
    chi = min_cover_numbers(adj)
    assert chi[0b0111] == 3
    assert chi[0b1111] == 3
    assert chi[0b1001] == 1
    assert max_union_sizes(chi, 4) == [0, 2, 3, 4, 4]
