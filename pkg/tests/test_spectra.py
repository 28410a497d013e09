"""Probe spectra: sum rule, line shapes, peak analysis."""

import math

import numpy as np
import pytest

from latticepolariton import (
    DampingSpec,
    NoPeaksError,
    Peak,
    PoleOnAxisError,
    branches,
    default_probe_grid,
    peak_report,
    polariton_response,
    probe_spectra,
    sum_rule_check,
)

OMEGA_X = 3.0e15
F0 = -1j * 3.67e11


def _modes(delta=0.0, gamma_ex=1.5e9):
    return branches(OMEGA_X, OMEGA_X + 2.0 * delta, F0, gamma_ex=gamma_ex)


def test_damping_validation():
    with pytest.raises(ValueError):
        DampingSpec(gamma_u=-1.0, gamma_l=0.0)
    spec = DampingSpec(gamma_u=1.5e11, gamma_l=7.5e10)
    assert spec.gamma_mean == pytest.approx(1.125e11)
    assert spec.gamma_diff == pytest.approx(3.75e10)


def test_kernel_negative_imaginary():
    modes = _modes(delta=3e11)
    grid = np.linspace(OMEGA_X - 5e12, OMEGA_X + 5e12, 4001)
    kernel = polariton_response(grid, modes)
    assert np.all(kernel.imag <= 0.0)


def test_kernel_pole_on_axis():
    upper, lower = _modes(gamma_ex=0.0)
    grid = np.array([lower.omega])  # exactly on the undamped pole
    with pytest.raises(PoleOnAxisError):
        polariton_response(grid, (upper, lower))


def test_default_grid_margin():
    modes = _modes()
    damping = DampingSpec(gamma_u=7.5e10, gamma_l=7.5e10, gamma_ex=1.5e9)
    grid = default_probe_grid(modes, damping, samples=501)
    gamma_tot = damping.gamma_mean + damping.gamma_ex
    assert grid.size == 501
    assert grid[0] == pytest.approx(min(m.omega for m in modes) - 10 * gamma_tot)
    assert grid[-1] == pytest.approx(max(m.omega for m in modes) + 10 * gamma_tot)


def test_sum_rule_symmetric_mirrors():
    modes = _modes()
    damping = DampingSpec(gamma_u=7.5e10, gamma_l=7.5e10, gamma_ex=1.5e9)
    response = probe_spectra(default_probe_grid(modes, damping, 10000), modes, damping)
    assert sum_rule_check(response) < 1e-12


def test_sum_rule_asymmetric_mirrors():
    modes = _modes(delta=2e11)
    damping = DampingSpec(gamma_u=1.5e11, gamma_l=7.5e10, gamma_ex=1.5e9)
    response = probe_spectra(default_probe_grid(modes, damping, 10000), modes, damping)
    assert sum_rule_check(response) < 1e-12


def test_sum_rule_one_sided_mirror():
    modes = _modes()
    damping = DampingSpec(gamma_u=1.0e11, gamma_l=0.0, gamma_ex=1.5e9)
    response = probe_spectra(default_probe_grid(modes, damping, 5000), modes, damping)
    # no transmission channel at all, but R + A still closes the budget
    assert np.all(response.transmission == 0.0)
    assert sum_rule_check(response) < 1e-12


def test_bounds():
    modes = _modes(delta=1e11)
    damping = DampingSpec(gamma_u=1.5e11, gamma_l=7.5e10, gamma_ex=1.5e9)
    response = probe_spectra(default_probe_grid(modes, damping, 4001), modes, damping)
    assert np.all(response.transmission >= 0.0)
    assert np.all(response.absorption >= 0.0)
    assert np.all(response.reflection >= 0.0)
    assert np.all(response.reflection <= 1.0 + 1e-12)


def test_twin_peaks_at_resonance():
    modes = _modes()
    damping = DampingSpec(gamma_u=7.5e10, gamma_l=7.5e10, gamma_ex=1.5e9)
    response = probe_spectra(default_probe_grid(modes, damping, 2001), modes, damping)
    peaks = peak_report(response.omega, response.transmission)
    assert len(peaks) == 2
    split = peaks[1].frequency - peaks[0].frequency
    assert split == pytest.approx(2.0 * abs(F0), rel=1e-3)
    assert peaks[0].height == pytest.approx(peaks[1].height, rel=1e-4)


def test_mirror_symmetric_response_at_resonance():
    # with delta = 0 both branches carry equal photon weight and equal
    # widths, so every spectrum is even about the mean branch frequency
    modes = _modes()
    damping = DampingSpec(gamma_u=7.5e10, gamma_l=7.5e10, gamma_ex=1.5e9)
    response = probe_spectra(default_probe_grid(modes, damping, 2001), modes, damping)
    for series in (response.transmission, response.reflection, response.absorption):
        assert np.max(np.abs(series - series[::-1])) < 1e-9


def test_single_pole_width():
    # far detuned: the photon-like line has FWHM 2*(Gamma_r + gamma*|Y|^2)
    delta = 1.5e13
    modes = _modes(delta=delta)
    upper = modes[0]
    damping = DampingSpec(gamma_u=7.5e10, gamma_l=7.5e10, gamma_ex=1.5e9)
    width_guess = upper.gamma + damping.gamma_mean * upper.photon_weight
    grid = np.linspace(upper.omega - 12 * width_guess, upper.omega + 12 * width_guess, 4001)
    response = probe_spectra(grid, modes, damping)
    peaks = peak_report(response.omega, response.transmission)
    assert len(peaks) == 1
    assert peaks[0].fwhm == pytest.approx(2.0 * width_guess, rel=0.02)


def test_regulator_for_lossless_exciton():
    modes = _modes(gamma_ex=0.0)
    damping = DampingSpec(gamma_u=7.5e10, gamma_l=7.5e10, gamma_ex=0.0)
    response = probe_spectra(default_probe_grid(modes, damping, 2001), modes, damping)
    assert response.metadata["regulator_radps"] == pytest.approx(7.5e4)
    assert np.all(response.absorption >= 0.0)
    assert sum_rule_check(response) < 1e-12


def test_closed_mirrors_flagged():
    modes = _modes()
    damping = DampingSpec(gamma_u=0.0, gamma_l=0.0, gamma_ex=1.5e9)
    grid = np.linspace(OMEGA_X - 2e12, OMEGA_X + 2e12, 801)
    response = probe_spectra(grid, modes, damping)
    assert response.metadata["closed_mirrors"] is True
    assert np.all(response.transmission == 0.0)
    assert np.all(response.absorption == 0.0)
    assert np.allclose(response.reflection, 1.0, atol=1e-14)


def test_peak_report_lorentzian_oracle():
    # synthetic single Lorentzian: refined position, height, width known
    center = 5.0e14
    half_width = 3.0e10
    height = 0.8
    grid = np.linspace(center - 20 * half_width, center + 20 * half_width, 3001)
    curve = height / (1.0 + ((grid - center) / half_width) ** 2)
    peaks = peak_report(grid, curve)
    assert len(peaks) == 1
    peak = peaks[0]
    assert peak.frequency == pytest.approx(center, abs=half_width * 1e-3)
    assert peak.height == pytest.approx(height, rel=1e-4)
    assert peak.fwhm == pytest.approx(2.0 * half_width, rel=1e-3)


def test_peak_report_two_lorentzians():
    grid = np.linspace(0.0, 1.0, 5001)
    curve = 1.0 / (1.0 + ((grid - 0.3) / 0.01) ** 2) + 0.5 / (
        1.0 + ((grid - 0.7) / 0.02) ** 2
    )
    peaks = peak_report(grid, curve)
    assert len(peaks) == 2
    assert peaks[0].frequency == pytest.approx(0.3, abs=1e-3)
    assert peaks[1].frequency == pytest.approx(0.7, abs=1e-3)
    assert peaks[0].height > peaks[1].height


def test_peak_report_plateau():
    grid = np.linspace(0.0, 1.0, 11)
    curve = np.array([0.0, 1.0, 2.0, 2.0, 2.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    peaks = peak_report(grid, curve)
    assert len(peaks) == 1


def test_peak_report_monotone_raises():
    grid = np.linspace(0.0, 1.0, 101)
    with pytest.raises(NoPeaksError):
        peak_report(grid, grid * 2.0)


def test_peak_report_edge_half_height_nan():
    # peak too close to the grid edge: half crossing runs off the window
    grid = np.linspace(0.0, 1.0, 101)
    curve = 1.0 / (1.0 + ((grid - 0.02) / 0.05) ** 2)
    peaks = peak_report(grid, curve)
    assert math.isnan(peaks[0].fwhm)


def test_peak_is_frozen_record():
    peak = Peak(frequency=1.0, height=2.0, fwhm=0.5)
    with pytest.raises(Exception):
        peak.height = 3.0
