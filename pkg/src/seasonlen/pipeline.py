"""End-to-end season length detection, plus reference detectors.

The detection flow is: upsample, low-pass, pick and remove the trend,
autocorrelate, detrend the autocorrelation, and segment the distances
between its zeros. Absence of seasonality is a regular outcome carried
by the result object; only invalid input raises.

Two auxiliary detectors support testing and benchmarking: a brute-force
oracle that finds the exact repetition length of noiseless discrete
patterns, and a deliberately simple periodogram detector used as a
comparison baseline by the evaluation harness.
"""

from __future__ import annotations

import numpy as np

from seasonlen.autocorr import autocorrelation, detrend_acf
from seasonlen.core import (
    DetectionConfig,
    DetectionDiagnostics,
    DetectionResult,
    MIN_DETECTION_LENGTH,
    TimeSeries,
    TooShortError,
    ZeroVarianceError,
)
from seasonlen.detrend import fit_polynomial, remove_trend, select_trend_degree
from seasonlen.preprocess import (
    apply_filter,
    design_butterworth_lowpass,
    interpolate_linear,
)
from seasonlen.zerocross import ZeroAnalysis, estimate_from_zeros, find_zeros

__all__ = [
    "detect_season_length",
    "exact_season_oracle",
    "repeats_with_period",
    "is_repetition_of_shorter",
    "baseline_periodogram",
]

#: Shortest season a result may report, in original samples.
MIN_SEASON = 2.0


def _no_season(trend_degree: int, diagnostics: DetectionDiagnostics) -> DetectionResult:
    return DetectionResult(
        season_length=None,
        unscaled_length=None,
        trend_degree=trend_degree,
        diagnostics=diagnostics,
    )


def _diagnostics(zero_count: int, analysis: ZeroAnalysis | None) -> DetectionDiagnostics:
    if analysis is None:
        return DetectionDiagnostics(zero_count=zero_count)
    return DetectionDiagnostics(
        zero_count=zero_count,
        interval=analysis.interval,
        member_count=analysis.member_count,
        low_confidence=analysis.low_confidence,
    )


def detect_season_length(
    series: TimeSeries, config: DetectionConfig | None = None
) -> DetectionResult:
    """Detect the dominant season length of a series.

    Returns a no-season result when the filtered series is constant,
    too few autocorrelation zeros exist, no usable zero distance
    survives, or the estimate would be shorter than two observations.
    The result is deterministic: identical input and configuration give
    an identical result.

    Raises:
        TooShortError: fewer than 4 observations.
        SeriesTooShortForFilterError: too short for the filter edges.
    """
    if config is None:
        config = DetectionConfig()
    if len(series) < MIN_DETECTION_LENGTH:
        raise TooShortError(
            f"detection needs at least {MIN_DETECTION_LENGTH} observations, got {len(series)}"
        )

    upsampled = interpolate_linear(series, config.interp_factor)
    filter_spec = design_butterworth_lowpass(config.filter_order, config.filter_cutoff)
    filtered = apply_filter(upsampled, filter_spec)

    if np.ptp(filtered.values) == 0.0:
        return _no_season(1, DetectionDiagnostics())

    degree = select_trend_degree(filtered, config.trend_log_threshold)
    detrended = remove_trend(filtered, fit_polynomial(filtered, degree))

    try:
        acf = autocorrelation(detrended)
    except ZeroVarianceError:
        return _no_season(degree, DetectionDiagnostics())
    acf = detrend_acf(acf)

    zeros = find_zeros(acf, config.zero_tolerance_rel)
    if zeros.size < config.min_zero_count:
        return _no_season(degree, DetectionDiagnostics(zero_count=int(zeros.size)))

    season, analysis = estimate_from_zeros(
        zeros, config.quotient_threshold, config.interp_factor
    )
    diagnostics = _diagnostics(int(zeros.size), analysis)
    if season is None or season < MIN_SEASON:
        return _no_season(degree, diagnostics)
    return DetectionResult(
        season_length=season * series.delta,
        unscaled_length=season,
        trend_degree=degree,
        diagnostics=diagnostics,
    )


def repeats_with_period(values: np.ndarray, period: int) -> bool:
    """Whether every value equals the value one period later, exactly."""
    v = np.asarray(values)
    if period < 1 or period >= v.size:
        return False
    return bool(np.array_equal(v[:-period], v[period:]))


def is_repetition_of_shorter(block: np.ndarray) -> bool:
    """Whether a block is some shorter block repeated whole."""
    b = np.asarray(block)
    n = b.size
    for d in range(1, n):
        if n % d == 0 and np.array_equal(np.tile(b[:d], n // d), b):
            return True
    return False


def exact_season_oracle(values) -> int | None:
    """Exact repetition length of a discrete sequence, by brute force.

    Returns the smallest period p >= 2 such that the sequence repeats
    every p values and its leading p values are not themselves a
    shorter block repeated whole. Periods beyond half the length cannot
    be confirmed and yield None. Comparison is exact, so this is only
    meaningful for noiseless discrete patterns.
    """
    v = np.asarray(values)
    for period in range(2, v.size // 2 + 1):
        if repeats_with_period(v, period) and not is_repetition_of_shorter(v[:period]):
            return period
    return None


def baseline_periodogram(series: TimeSeries) -> float | None:
    """Spectral-peak period estimate used as a benchmark baseline.

    Removes a linear trend, takes the discrete power spectrum, and
    converts the strongest bin into a period. Intentionally simple: it
    exists to give the evaluation harness a second column, not to be a
    competitive detector.
    """
    x = series.values
    if x.size < 16:
        raise TooShortError(f"baseline needs at least 16 observations, got {x.size}")
    if np.ptp(x) == 0.0:
        return None
    residual = remove_trend(series, fit_polynomial(series, 1)).values
    power = np.abs(np.fft.rfft(residual)) ** 2
    peak = int(np.argmax(power))
    if peak == 0:
        return None
    return x.size / peak
