"""Strong-order census, block families, deviation walks, and tail surrogates."""

from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bruhatlab.limits import CapExceeded
from bruhatlab.numerics import log_factorial
from bruhatlab.permutations import check_permutation, strong_leq
from bruhatlab.strong_order import (
    DeviationWalk,
    SigmaFamilySpec,
    census_strong,
    default_block_parameter,
    deviation_walk,
    enumerate_sigma_family,
    family_comparability_experiment,
    family_from_count,
    family_log_size,
    sample_sigma_family,
    strong_lower_bound_exponent,
    walk_equivalence_check,
    walk_tail_check,
    walk_tail_from_count,
    walk_tail_trial_count,
)
from bruhatlab.weak_order import census_weak
from conftest import word_pairs, words

Z95 = 1.959963984540054


def brute_strong_census(n: int) -> int:
    perms = list(itertools.permutations(range(1, n + 1)))
    count = 0
    for a in perms:
        for b in perms:
            if all(
                x <= y
                for k in range(1, n)
                for x, y in zip(sorted(a[:k]), sorted(b[:k]))
            ):
                count += 1
    return count


class TestCensus:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_definitional_oracle(self, n):
        assert census_strong(n).count == brute_strong_census(n)

    def test_frozen_values(self):
        assert [census_strong(n).count for n in range(1, 6)] == [1, 3, 19, 213, 3781]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_dominates_weak_census(self, n):
        weak = census_weak(n).count
        strong = census_strong(n).count
        assert strong >= weak
        assert (strong == weak) == (n <= 2)

    def test_cap_and_validation(self):
        with pytest.raises(CapExceeded):
            census_strong(8)
        with pytest.raises(ValueError):
            census_strong(0)


class TestSigmaFamily:
    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SigmaFamilySpec(8, 0, "low-first")
        with pytest.raises(ValueError):
            SigmaFamilySpec(8, 5, "low-first")
        with pytest.raises(ValueError):
            SigmaFamilySpec(8, 2, "sideways")

    def test_blocks_cover_values(self):
        spec = SigmaFamilySpec(9, 2, "low-first")
        first, mid, last = spec.blocks()
        assert list(first) == [1, 2]
        assert list(mid) == [3, 4, 5, 6, 7]
        assert list(last) == [8, 9]
        flipped = SigmaFamilySpec(9, 2, "high-first")
        assert list(flipped.blocks()[0]) == [8, 9]
        assert list(flipped.blocks()[2]) == [1, 2]

    def test_enumeration_size_and_membership(self):
        spec = SigmaFamilySpec(6, 2, "low-first")
        members = list(enumerate_sigma_family(spec))
        assert len(members) == math.factorial(2) ** 2 * math.factorial(2)
        assert len(set(members)) == len(members)
        for m in members:
            check_permutation(m)
            assert set(m[:2]) == {1, 2}
            assert set(m[-2:]) == {5, 6}
        assert family_log_size(spec) == pytest.approx(math.log(len(members)))

    def test_sampling_lands_in_family(self, rng):
        spec = SigmaFamilySpec(6, 2, "high-first")
        members = set(enumerate_sigma_family(spec))
        for _ in range(50):
            assert sample_sigma_family(spec, rng) in members

    def test_sampling_deterministic(self):
        spec = SigmaFamilySpec(30, 5, "low-first")
        assert sample_sigma_family(spec, random.Random(3)) == sample_sigma_family(
            spec, random.Random(3)
        )

    def test_opposite_sides_always_comparable_with_big_blocks(self):
        # exhaustive at n = 8: with blocks of 2, 3, or 4 every low-first
        # member sits below every high-first member
        for t in (2, 3, 4):
            low = list(enumerate_sigma_family(SigmaFamilySpec(8, t, "low-first")))
            high = list(enumerate_sigma_family(SigmaFamilySpec(8, t, "high-first")))
            assert all(strong_leq(a, b) for a in low for b in high), f"t={t}"

    def test_tiny_blocks_do_fail(self):
        # with t = 1 the middle can push the walk below zero; count the misses
        low = list(enumerate_sigma_family(SigmaFamilySpec(8, 1, "low-first")))
        high = list(enumerate_sigma_family(SigmaFamilySpec(8, 1, "high-first")))
        misses = sum(1 for a in low for b in high if not strong_leq(a, b))
        assert misses == 77632


class TestDeviationWalk:
    def test_known_tiny_walk(self):
        walk = deviation_walk((1, 2), (2, 1), 1)
        assert walk == DeviationWalk(2, 1, (0, 1, 0), 0)

    @given(word_pairs(max_n=7), st.data())
    def test_walk_shape(self, pair, data):
        a, b = pair
        n = len(a)
        k = data.draw(st.integers(0, n))
        walk = deviation_walk(a, b, k)
        assert walk.heights[0] == 0
        assert walk.heights[-1] == 0
        assert len(walk.heights) == n + 1
        assert walk.min_height == min(walk.heights)
        assert all(abs(x - y) <= 1 for x, y in zip(walk.heights, walk.heights[1:]))

    def test_validation(self):
        with pytest.raises(ValueError):
            deviation_walk((1, 2), (1, 2, 3), 1)
        with pytest.raises(ValueError):
            deviation_walk((1, 2), (2, 1), 3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_equivalence_small(self, n):
        report = walk_equivalence_check(n)
        assert report.passed
        assert report.pairs_checked == math.factorial(n) ** 2

    def test_cap(self):
        with pytest.raises(CapExceeded):
            walk_equivalence_check(7)


class TestFamilyExperiment:
    def test_block_parameter_values(self):
        assert default_block_parameter(200) == 98
        assert default_block_parameter(500) == 168
        with pytest.raises(ValueError):
            default_block_parameter(1)

    def test_wilson_radius_closed_form(self):
        report = family_from_count(500, 168, 50, 50)
        want = (Z95 * Z95 / (2 * 50)) / (1 + Z95 * Z95 / 50)
        assert report.ci_radius == pytest.approx(want)
        assert report.fraction == 1.0
        assert not report.hypothesis_warning

    def test_warning_flag(self):
        assert family_from_count(500, 100, 10, 10).hypothesis_warning
        assert not family_from_count(500, 168, 10, 10).hypothesis_warning

    def test_deterministic(self):
        a = family_comparability_experiment(60, 10, 40, random.Random(2))
        b = family_comparability_experiment(60, 10, 40, random.Random(2))
        assert a == b

    def test_large_n_regime(self):
        report = family_comparability_experiment(500, 168, 20, random.Random(0))
        assert report.fraction == 1.0


class TestWalkTail:
    def test_validation(self):
        with pytest.raises(ValueError):
            walk_tail_check(400, 80, 79, 200, 10, random.Random(0))
        with pytest.raises(ValueError):
            walk_tail_check(400, 80, 321, 200, 10, random.Random(0))
        with pytest.raises(ValueError):
            walk_tail_check(400, 80, 200, 80, 10, random.Random(0))
        with pytest.raises(ValueError):
            walk_tail_check(400, 80, 200, 321, 10, random.Random(0))
        with pytest.raises(ValueError):
            walk_tail_from_count(400, 80, 200, 200, 0, 0)

    def test_deterministic_both_paths(self):
        # p = 0.5 hits the bit-count fast path, p != 0.5 the generic one
        fast = walk_tail_check(400, 80, 200, 200, 500, random.Random(6))
        assert fast == walk_tail_check(400, 80, 200, 200, 500, random.Random(6))
        slow = walk_tail_check(9, 2, 4, 5, 500, random.Random(6))
        assert slow == walk_tail_check(9, 2, 4, 5, 500, random.Random(6))

    def test_report_fields(self):
        report = walk_tail_from_count(400, 80, 200, 200, 1000, 3)
        assert report.frequency == pytest.approx(0.003)
        assert report.ceiling == pytest.approx(math.exp(-16.0))
        assert report.sigma == pytest.approx(
            math.sqrt(report.ceiling * (1 - report.ceiling) / 1000)
        )

    def test_zero_offset_start(self):
        report = walk_tail_check(10, 0, 5, 5, 200, random.Random(1))
        assert report.ceiling == 1.0
        # started at zero, every strictly negative endpoint counts
        assert 0 <= report.below_zero <= 200

    def test_counts_are_plausible_binomial(self):
        # generic path, small start height: endpoint below zero happens often
        count = walk_tail_trial_count(9, 1, 4, 5, 4000, random.Random(3))
        # W = 1 + X1..X4 - Y1..Y4 with p = 3/7; P(W < 0) is about 0.20
        assert 0.12 <= count / 4000 <= 0.28


class TestLowerBoundExponent:
    def test_formula_routes_agree(self):
        for n in (200, 500, 2000):
            t = default_block_parameter(n)
            spec = SigmaFamilySpec(n, t, "low-first")
            want = 2.0 * (family_log_size(spec) - log_factorial(n))
            exact, _ = strong_lower_bound_exponent(n)
            assert exact == pytest.approx(want)

    def test_reference_shape(self):
        _, reference = strong_lower_bound_exponent(500)
        assert reference == pytest.approx(-6.0 * math.sqrt(500) * math.log(500) ** 1.5)

    def test_feasibility_boundary(self):
        strong_lower_bound_exponent(190)
        strong_lower_bound_exponent(192)
        with pytest.raises(ValueError, match="190"):
            strong_lower_bound_exponent(50)
        with pytest.raises(ValueError, match="192"):
            strong_lower_bound_exponent(191)
