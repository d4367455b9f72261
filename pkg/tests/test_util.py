"""
Tests for the utility modules.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import binomtest

from turannical.errors import CountOverflowError, ParameterError
from turannical.util import bitset, combinatorics, digest, numeric, rng, stats


class TestBitset:
    """Test bitset helpers."""

    def test_mask_and_members(self):
        """Test building a mask and reading it back."""
        mask = bitset.mask_of([5, 0, 3])
        assert mask == 0b101001
        assert bitset.members(mask) == (0, 3, 5)
        assert bitset.popcount(mask) == 3

    def test_above(self):
        """Test that above(i) keeps exactly the larger indices."""
        assert bitset.full_mask(8) & bitset.above(2) == 0b11111000


class TestCombinatorics:
    """Test binomials, count guards and subset unranking."""

    def test_binomial_out_of_range(self):
        """Test that C(n, k) is zero outside 0 <= k <= n."""
        assert combinatorics.binomial(5, 7) == 0
        assert combinatorics.binomial(5, -1) == 0
        assert combinatorics.binomial(6, 3) == 20

    def test_checked_int64(self):
        """Test the 64-bit guard."""
        assert combinatorics.checked_int64(2**63 - 1, "x") == 2**63 - 1
        with pytest.raises(CountOverflowError):
            combinatorics.checked_int64(combinatorics.binomial(100, 50), "C(100,50)")

    def test_overflow_is_overflow_error(self):
        """Test that overflow errors can be caught as OverflowError."""
        with pytest.raises(OverflowError):
            combinatorics.checked_int64(2**64, "x")

    @given(st.integers(1, 10), st.data())
    def test_unrank_is_lexicographic(self, n, data):
        """Test that unranking follows lexicographic order."""
        r = data.draw(st.integers(1, n))
        subsets = list(combinations(range(n), r))
        index = data.draw(st.integers(0, len(subsets) - 1))
        subset = combinatorics.unrank_combination(index, n, r)
        assert subset == subsets[index]

    def test_unrank_out_of_range(self):
        """Test that ranks beyond C(n, r) are rejected."""
        with pytest.raises(ParameterError):
            combinatorics.unrank_combination(10, 5, 3)


class TestNumeric:
    """Test rational conversion."""

    def test_float_snaps_to_rational(self):
        """Test that 0.1 and 1/3 become exact fractions."""
        assert numeric.as_fraction(0.1) == Fraction(1, 10)
        assert numeric.as_fraction(1 / 3) == Fraction(1, 3)

    def test_strings(self):
        """Test decimal and num/den strings."""
        assert numeric.as_fraction("1/4") == Fraction(1, 4)
        assert numeric.as_fraction(" 0.25 ") == Fraction(1, 4)
        with pytest.raises(ParameterError):
            numeric.as_fraction("a quarter")

    def test_rejects_non_numbers(self):
        """Test that bools, NaN and infinity are rejected."""
        for value in (True, float("nan"), float("inf"), None):
            with pytest.raises(ParameterError):
                numeric.as_fraction(value)

    def test_floor_and_text(self):
        """Test floor and text rendering of rationals."""
        assert numeric.floor_fraction(Fraction(27, 2)) == 13
        assert numeric.floor_fraction(Fraction(-1, 2)) == -1
        assert numeric.fraction_text(Fraction(27, 2)) == "27/2"
        assert numeric.fraction_text(Fraction(6)) == "6"


class TestStats:
    """Test interval estimates."""

    def test_wilson_no_trials(self):
        """Test that zero decided trials give the uninformative interval."""
        assert stats.wilson_interval(0, 0) == (0.0, 1.0)

    def test_wilson_contains_estimate(self):
        """Test that the interval brackets the observed proportion."""
        low, high = stats.wilson_interval(30, 100)
        assert low < 0.3 < high
        assert high - low < 0.2

    def test_wilson_extremes(self):
        """Test that all-success intervals stay within [0, 1]."""
        low, high = stats.wilson_interval(50, 50)
        assert 0.9 < low < 1.0
        assert high == 1.0

    @pytest.mark.parametrize("trials", [1, 3, 50, 400])
    def test_wilson_boundaries_are_exact(self, trials):
        """Test that no successes give 0.0 and all successes give 1.0 exactly."""
        assert stats.wilson_interval(0, trials)[0] == 0.0
        assert stats.wilson_interval(trials, trials)[1] == 1.0

    def test_wilson_matches_scipy(self):
        """Test interior intervals against the reference Wilson interval."""
        reference = binomtest(37, 120).proportion_ci(0.95, method="wilson")
        low, high = stats.wilson_interval(37, 120, level=0.95)
        assert low == pytest.approx(reference.low)
        assert high == pytest.approx(reference.high)

    def test_mean_interval(self):
        """Test the t interval and its degenerate cases."""
        mean, low, high = stats.mean_interval([1.0, 2.0, 3.0, 4.0])
        assert mean == 2.5
        assert low < 2.5 < high
        assert stats.mean_interval([5.0, 5.0]) == (5.0, 5.0, 5.0)
        assert stats.mean_interval([7.0]) == (7.0, 7.0, 7.0)


class TestRng:
    """Test counter-based streams."""

    def test_same_key_same_stream(self):
        """Test that a (seed, trial, stream) triple is reproducible."""
        first = rng.trial_generator(42, 3).random(8)
        second = rng.trial_generator(42, 3).random(8)
        assert np.array_equal(first, second)

    def test_streams_differ(self):
        """Test that trials and streams give different draws."""
        base = rng.trial_generator(42, 3).random(8)
        assert not np.array_equal(base, rng.trial_generator(42, 4).random(8))
        assert not np.array_equal(base, rng.trial_generator(43, 3).random(8))
        other = rng.trial_generator(42, 3, rng.STREAM_GRAPH).random(8)
        assert not np.array_equal(base, other)

    def test_swapped_seed_and_trial_differ(self):
        """Test that (seed 1, trial 0) and (seed 0, trial 1) are separate streams."""
        first = rng.trial_generator(1, 0).random(8)
        second = rng.trial_generator(0, 1).random(8)
        assert not np.array_equal(first, second)

    def test_seed_range(self):
        """Test that seeds must fit in 64 bits."""
        with pytest.raises(ParameterError):
            rng.trial_generator(2**64, 0)
        with pytest.raises(ParameterError):
            rng.trial_generator(-1, 0)


class TestDigest:
    """Test digests."""

    def test_text_and_file_agree(self, tmp_path):
        """Test that a file digest equals the digest of its text."""
        path = tmp_path / "out.csv"
        path.write_text("n,p\n5,0.5\n", encoding="utf-8")
        assert digest.sha256_file(path) == digest.sha256_text("n,p\n5,0.5\n")
        assert digest.sha256_bytes(b"") == (
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        )
