"""End-to-end detection, the exact oracle, and the baseline detector."""

import math

import numpy as np
import pytest

from seasonlen.core import DetectionConfig, TooShortError, validate_series
from seasonlen.pipeline import (
    baseline_periodogram,
    detect_season_length,
    exact_season_oracle,
    is_repetition_of_shorter,
    repeats_with_period,
)
from seasonlen.zerocross import estimate_from_zeros

PATTERN = [0, 2, 1, 2]


def sine_series(period, n, noise=0.0, seed=0, trend=None, amplitude=1.0):
    t = np.arange(n, dtype=float)
    values = amplitude * np.sin(2 * np.pi * t / period)
    if trend is not None:
        values = values + trend(t)
    if noise:
        values = values + np.random.default_rng(seed).normal(0, noise, n)
    return validate_series(values)


def admitting_config(period, **overrides):
    return DetectionConfig(filter_cutoff=0.2 * 2 * math.pi / period, **overrides)


class TestDetectSeasonLength:
    def test_clean_sinusoid(self):
        result = detect_season_length(
            sine_series(20, 800), DetectionConfig(filter_cutoff=0.05 * math.pi)
        )
        assert result.is_seasonal
        assert 19 <= result.unscaled_length <= 21

    def test_quadratic_has_no_season(self):
        t = np.arange(500, dtype=float)
        rng = np.random.default_rng(0)
        result = detect_season_length(validate_series(t * t + rng.normal(0, 0.05, 500)))
        assert not result.is_seasonal
        assert result.trend_degree == 2

    def test_tiled_pattern(self):
        series = validate_series(np.tile(PATTERN, 40))
        result = detect_season_length(series, admitting_config(4))
        assert result.is_seasonal
        assert 3.2 <= result.unscaled_length <= 4.8

    def test_delta_scales_only_the_report(self):
        series = validate_series(np.tile(PATTERN, 40), delta=0.25)
        result = detect_season_length(series, admitting_config(4))
        assert result.season_length == pytest.approx(result.unscaled_length * 0.25)

    def test_constant_series_is_no_season(self):
        result = detect_season_length(validate_series([3.0] * 100))
        assert not result.is_seasonal

    def test_white_noise_is_no_season(self):
        noise = np.random.default_rng(12).normal(0, 1, 600)
        result = detect_season_length(validate_series(noise))
        assert not result.is_seasonal

    def test_too_short_propagates(self):
        with pytest.raises(TooShortError):
            detect_season_length(validate_series([1.0, 2.0, 3.0, 4.0][:3]))

    def test_min_zero_count_gate(self):
        config = DetectionConfig(
            filter_cutoff=0.05 * math.pi, min_zero_count=10_000
        )
        result = detect_season_length(sine_series(20, 800), config)
        assert not result.is_seasonal

    def test_quadratic_false_positive_mechanism(self):
        # Dense zeros one lag apart: every distance fails the "longer than
        # one lag" rule, so nothing survives to the averaging step. This is
        # the guard that keeps a perfectly detrended polynomial series from
        # reporting a two-sample season.
        dense = np.arange(1.0, 400.0)
        season, analysis = estimate_from_zeros(dense, 0.5, 1)
        assert season is None
        assert analysis.raw_distances.mean() == 1.0
        assert analysis.distances.size == 0

        # Full pipeline on the noiseless quadratic: zeros are found but no
        # usable interval remains.
        t = np.arange(500, dtype=float)
        result = detect_season_length(validate_series(t * t))
        assert not result.is_seasonal
        assert result.trend_degree == 2
        assert result.diagnostics.zero_count > 0
        assert result.diagnostics.interval is None

    def test_determinism_bit_for_bit(self):
        series = sine_series(250, 2500, noise=0.2, seed=3)
        a = detect_season_length(series)
        b = detect_season_length(series)
        assert a.unscaled_length == b.unscaled_length
        assert a.season_length == b.season_length
        assert a.diagnostics == b.diagnostics

    @pytest.mark.parametrize("power", [-2, 1, 6])
    def test_amplitude_invariance_exact_for_binary_scales(self, power):
        series = sine_series(250, 2500, noise=0.2, seed=5)
        scaled = validate_series(series.values * 2.0**power)
        a = detect_season_length(series)
        b = detect_season_length(scaled)
        assert a.unscaled_length == b.unscaled_length

    def test_amplitude_invariance_general(self):
        series = sine_series(250, 2500, noise=0.1, seed=6)
        scaled = validate_series(series.values * 3.7)
        a = detect_season_length(series)
        b = detect_season_length(scaled)
        assert b.unscaled_length == pytest.approx(a.unscaled_length, rel=1e-6)

    def test_offset_invariance(self):
        series = sine_series(250, 2500, noise=0.1, seed=7)
        shifted = validate_series(series.values + 1000.0)
        a = detect_season_length(series)
        b = detect_season_length(shifted)
        assert b.unscaled_length == pytest.approx(a.unscaled_length, rel=1e-6)

    def test_time_reversal(self):
        series = sine_series(240, 2400)
        reversed_series = validate_series(series.values[::-1])
        a = detect_season_length(series)
        b = detect_season_length(reversed_series)
        assert a.is_seasonal and b.is_seasonal
        assert abs(a.unscaled_length - b.unscaled_length) <= 1.0

    @pytest.mark.parametrize("period", [4, 7, 12, 25, 50])
    def test_oracle_consistency_on_tiled_patterns(self, period):
        rng = np.random.default_rng(period)
        block = np.round(rng.normal(0, 1, period), 3)
        tiled = np.tile(block, 4)
        if exact_season_oracle(tiled) != period:
            pytest.skip("degenerate random block")
        n = 20 * period
        series = validate_series(np.tile(block, n // period + 1)[:n])
        oracle = exact_season_oracle(series.values)
        assert oracle == period
        result = detect_season_length(series, admitting_config(period))
        assert result.is_seasonal
        assert abs(result.unscaled_length - oracle) / oracle <= 0.2


class TestExactSeasonOracle:
    def test_reference_pattern(self):
        assert exact_season_oracle(np.tile(PATTERN, 4)) == 4

    def test_longer_candidate_rejected_as_divisible(self):
        y = np.tile(PATTERN, 4)
        assert repeats_with_period(y, 8)
        assert is_repetition_of_shorter(y[:8])
        assert exact_season_oracle(y) == 4

    def test_wrong_length_candidate(self):
        y = np.tile(PATTERN, 4)
        assert not repeats_with_period(y, 5)

    def test_constant_sequence(self):
        assert exact_season_oracle([1, 1, 1, 1]) is None

    def test_no_repetition(self):
        assert exact_season_oracle([1, 2, 3, 4, 5, 6]) is None

    def test_period_beyond_half_length(self):
        assert exact_season_oracle([0, 1, 2, 0, 1]) is None


class TestBaselinePeriodogram:
    def test_pure_tone(self):
        period = baseline_periodogram(
            validate_series(np.sin(2 * np.pi * np.arange(1000) / 25))
        )
        assert abs(period - 25) <= 1

    def test_white_noise_returns_value_or_none(self):
        noise = np.random.default_rng(0).normal(0, 1, 1000)
        period = baseline_periodogram(validate_series(noise))
        assert period is None or period > 0

    def test_constant_returns_none(self):
        assert baseline_periodogram(validate_series([2.0] * 100)) is None

    def test_too_short(self):
        with pytest.raises(TooShortError):
            baseline_periodogram(validate_series([1.0, 2.0, 3.0, 4.0]))

    def test_detrends_before_transform(self):
        t = np.arange(1000, dtype=float)
        series = validate_series(np.sin(2 * np.pi * t / 25) + 0.05 * t)
        assert abs(baseline_periodogram(series) - 25) <= 1
