"""
三重対角ソルバとLDOSのテスト
"""

import math

import numpy as np
import pytest

from hspectra.clock.hamiltonian import uniform_chain
from hspectra.domain.errors import SiteOutOfRangeError, UndefinedGapError
from hspectra.spectra.dynamics import recover_spectrum, return_amplitude_series
from hspectra.spectra.solver import (
    analytic_gap,
    analytic_uniform_spectrum,
    chain_gap,
    eigenvalues,
    ground_gap,
    ldos,
    lowest_eigenvalues,
    spectrum_report,
)


@pytest.mark.parametrize("length", [*range(1, 65), 100, 1000, 2048])
def test_eigenvalues_match_closed_form(length):
    """一様鎖の固有値は -2cos(jπ/(L+1))"""
    np.testing.assert_allclose(
        eigenvalues(uniform_chain(length)), analytic_uniform_spectrum(length), atol=1e-8
    )


@pytest.mark.parametrize("length", [1, 2, 7, 100, 2048])
def test_spectrum_is_symmetric_about_zero(length):
    """λ が固有値なら -λ も固有値"""
    values = eigenvalues(uniform_chain(length))
    np.testing.assert_allclose(np.sort(-values), values, atol=1e-8)


def test_eigenvalues_are_ascending_and_sum_to_trace():
    values = eigenvalues(uniform_chain(40))
    assert np.all(np.diff(values) > 0)
    assert math.isclose(float(values.sum()), 0.0, abs_tol=1e-9)
    assert math.isclose(float(np.sum(values**2)), uniform_chain(40).frobenius_squared())


def test_single_site_chain():
    np.testing.assert_array_equal(eigenvalues(uniform_chain(1)), [0.0])
    with pytest.raises(UndefinedGapError):
        chain_gap(uniform_chain(1))
    report = spectrum_report(uniform_chain(1))
    assert report.ground_gap is None
    with pytest.raises(UndefinedGapError):
        ground_gap(report)


def test_champion_chain_gap():
    """長さ7の鎖のギャップは 2(cos(π/8) - cos(π/4))"""
    expected = 2 * (math.cos(math.pi / 8) - math.cos(math.pi / 4))
    assert math.isclose(chain_gap(uniform_chain(7)), expected, abs_tol=1e-10)
    assert math.isclose(analytic_gap(7), expected, abs_tol=1e-12)


def test_gap_decreases_strictly_with_length():
    gaps = [chain_gap(uniform_chain(length)) for length in range(2, 60)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


def test_lowest_eigenvalues_agree_with_full_spectrum():
    h = uniform_chain(200)
    np.testing.assert_allclose(lowest_eigenvalues(h, 2), eigenvalues(h)[:2], atol=1e-10)


def test_tolerance_range():
    with pytest.raises(ValueError):
        eigenvalues(uniform_chain(5), tol=1e-3)
    with pytest.raises(ValueError):
        eigenvalues(uniform_chain(5), tol=0.0)


def test_ldos_weights():
    """端のサイトの重みは (2/(L+1)) sin²(jπ/(L+1))、和は1"""
    length = 9
    weights = ldos(uniform_chain(length), 0)
    j = np.arange(1, length + 1)
    expected = 2.0 / (length + 1) * np.sin(j * np.pi / (length + 1)) ** 2

    np.testing.assert_allclose(weights, expected, atol=1e-10)
    assert math.isclose(float(weights.sum()), 1.0, abs_tol=1e-10)


def test_ldos_site_out_of_range():
    with pytest.raises(SiteOutOfRangeError):
        ldos(uniform_chain(4), 4)
    with pytest.raises(SiteOutOfRangeError):
        ldos(uniform_chain(4), -1)


def test_spectrum_report():
    report = spectrum_report(uniform_chain(7), site=3)
    assert report.dimension == 7
    assert report.site == 3
    assert report.level_spacings.size == 6
    assert math.isclose(report.ground_gap, analytic_gap(7), abs_tol=1e-10)


def test_return_amplitude_starts_at_one():
    series = return_amplitude_series(uniform_chain(8), 0, 16)
    assert series.shape == (16,)
    assert abs(series[0] - 1.0) <= 1e-12
    assert np.all(np.abs(series) <= 1.0 + 1e-12)


def test_two_site_return_amplitude_is_cosine():
    """L = 2 では a(t) = cos(t)"""
    series = return_amplitude_series(uniform_chain(2), 0, 64)
    np.testing.assert_allclose(series, np.cos(np.arange(64)), atol=1e-10)



def test_fourier_recovery_of_eigenvalues():
    """戻り振幅のフーリエ解析で固有エネルギーを分解能以内に復元できる"""
    length = 8
    steps = 4096
    series = return_amplitude_series(uniform_chain(length), 0, steps)
    recovered = recover_spectrum(series, length)

    np.testing.assert_allclose(
        recovered, analytic_uniform_spectrum(length), atol=2 * np.pi / steps
    )


def test_recover_spectrum_rejects_short_series():
    with pytest.raises(ValueError):
        recover_spectrum(np.ones(2), 1)


if __name__ == "__main__":
    pytest.main([__file__])
