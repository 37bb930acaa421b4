"""Shared strategies and fixtures."""

from __future__ import annotations

import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def words(draw, min_n: int = 1, max_n: int = 8) -> tuple[int, ...]:
    """A permutation word of 1..n in one-line notation."""
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def word_pairs(draw, min_n: int = 1, max_n: int = 7):
    """Two independent words of the same size."""
    n = draw(st.integers(min_n, max_n))
    base = list(range(1, n + 1))
    return tuple(draw(st.permutations(base))), tuple(draw(st.permutations(base)))


@st.composite
def partitions(draw, max_total: int = 24) -> tuple[int, ...]:
    """A partition with weakly decreasing positive parts."""
    total = draw(st.integers(1, max_total))
    parts: list[int] = []
    bound = total
    while total:
        part = draw(st.integers(1, min(bound, total)))
        parts.append(part)
        bound = part
        total -= part
    return tuple(parts)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xBADA55)
