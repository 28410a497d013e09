"""Linear optical response of the coupled cavity through input-output theory.

A weak probe enters through the upper mirror, drives the intracavity
field, and leaks out of both mirrors.  The polariton branches enter
through a single complex response kernel; transmission, reflection and
absorption follow from it algebraically and sum to one at every
frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoPeaksError, PoleOnAxisError
from .polariton import PolaritonMode

# Relative size of the width regulator used when the exciton is lossless.
_REGULATOR_SCALE = 1e-6


@dataclass(frozen=True)
class DampingSpec:
    """Loss channels: mirror leakage rates and exciton nonradiative rate.

    gamma_u is the upper (probe-side) mirror rate, gamma_l the lower one,
    gamma_ex the exciton width fed to the branches; all rad/s.
    """

    gamma_u: float
    gamma_l: float
    gamma_ex: float = 0.0

    def __post_init__(self) -> None:
        if self.gamma_u < 0.0 or self.gamma_l < 0.0 or self.gamma_ex < 0.0:
            raise ValueError("damping rates must be >= 0")

    @property
    def gamma_mean(self) -> float:
        """Mean mirror rate (gamma_u + gamma_l) / 2."""
        return 0.5 * (self.gamma_u + self.gamma_l)

    @property
    def gamma_diff(self) -> float:
        """Mirror asymmetry (gamma_u - gamma_l) / 2."""
        return 0.5 * (self.gamma_u - self.gamma_l)


@dataclass(frozen=True)
class SpectralResponse:
    """Probe spectra on a frequency grid for one in-plane wavevector."""

    k: float
    omega: np.ndarray
    transmission: np.ndarray
    reflection: np.ndarray
    absorption: np.ndarray
    metadata: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Peak:
    """One spectral feature: refined position, height, and width (rad/s)."""

    frequency: float
    height: float
    fwhm: float


def polariton_response(omega, modes: tuple[PolaritonMode, ...]) -> np.ndarray:
    """Complex response kernel of the branch doublet, units of seconds.

    Each branch contributes a photon-weighted pole:

        Lambda(omega) = sum_r |Y_r|**2 / (omega - Omega_r + i*Gamma_r).

    Im(Lambda) <= 0 for all real omega, which keeps the absorption
    nonnegative.  Evaluating exactly at an undamped, photon-weighted pole
    raises PoleOnAxisError.
    """
    omega = np.asarray(omega, dtype=float)
    total = np.zeros(omega.shape, dtype=complex)
    for mode in modes:
        weight = mode.photon_weight
        if mode.gamma == 0.0 and weight > 0.0 and np.any(omega == mode.omega):
            raise PoleOnAxisError(
                f"response evaluated at the undamped pole omega = {mode.omega!r}"
            )
        total += weight / (omega - mode.omega + 1j * mode.gamma)
    return total


def default_probe_grid(
    modes: tuple[PolaritonMode, ...], damping: DampingSpec, samples: int = 2001
) -> np.ndarray:
    """Uniform grid spanning both branches with a 10-total-linewidth margin."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    gamma_tot = damping.gamma_mean + damping.gamma_ex
    low = min(m.omega for m in modes)
    high = max(m.omega for m in modes)
    return np.linspace(low - 10.0 * gamma_tot, high + 10.0 * gamma_tot, samples)


def probe_spectra(
    omega, modes: tuple[PolaritonMode, ...], damping: DampingSpec, k: float = 0.0
) -> SpectralResponse:
    """Transmission, reflection and absorption of a weak probe.

    With gamma = (gamma_u + gamma_l)/2, gbar = (gamma_u - gamma_l)/2 and
    Lambda the branch response kernel, the denominator D = 1 + i*gamma*Lambda
    gives

        T = gamma_u * gamma_l * |Lambda|**2 / |D|**2
        R = (1 + 2*gbar*Im(Lambda) + gbar**2 * |Lambda|**2) / |D|**2
        A = -2 * gamma_u * Im(Lambda) / |D|**2

    and T + R + A = 1 identically (the cross terms cancel through
    gamma**2 - gbar**2 = gamma_u*gamma_l).  For a lossless exciton the
    branch widths can vanish; a regulator 1e-6 * gamma is then added to
    every pole and recorded in the metadata, leaving line shapes
    unchanged on any realistic grid while keeping the kernel finite.
    """
    omega = np.asarray(omega, dtype=float)
    gamma = damping.gamma_mean
    gbar = damping.gamma_diff

    metadata: dict = {}
    if damping.gamma_ex == 0.0 and gamma > 0.0:
        eta = _REGULATOR_SCALE * gamma
        modes = tuple(
            PolaritonMode(
                branch=m.branch,
                omega=m.omega,
                exciton_amp=m.exciton_amp,
                photon_amp=m.photon_amp,
                gamma=m.gamma + eta,
            )
            for m in modes
        )
        metadata["regulator_radps"] = eta
    if gamma == 0.0:
        metadata["closed_mirrors"] = True

    kernel = polariton_response(omega, modes)
    re = kernel.real
    im = kernel.imag
    mod2 = re * re + im * im
    denom = (1.0 - gamma * im) ** 2 + (gamma * re) ** 2

    transmission = damping.gamma_u * damping.gamma_l * mod2 / denom
    reflection = (1.0 + 2.0 * gbar * im + gbar * gbar * mod2) / denom
    absorption = -2.0 * damping.gamma_u * im / denom
    return SpectralResponse(
        k=k,
        omega=omega,
        transmission=transmission,
        reflection=reflection,
        absorption=absorption,
        metadata=metadata,
    )


def sum_rule_check(response: SpectralResponse) -> float:
    """Largest deviation of T + R + A from one over the grid."""
    total = response.transmission + response.reflection + response.absorption
    return float(np.max(np.abs(total - 1.0)))


def peak_report(omega, values) -> list[Peak]:
    """Locate spectral peaks and their widths on a sampled curve.

    A peak is an interior sample strictly above both neighbors (plateaus
    count once, at their left edge).  The position and height are refined
    by a parabola through the three surrounding samples; the width is the
    distance between the linearly interpolated crossings of half the
    refined height.  A half-height crossing that leaves the grid gives
    fwhm = nan for that peak.  Raises NoPeaksError when the curve has no
    interior maximum.
    """
    omega = np.asarray(omega, dtype=float)
    values = np.asarray(values, dtype=float)
    if omega.ndim != 1 or omega.shape != values.shape:
        raise ValueError("omega and values must be matching 1D arrays")
    peaks: list[Peak] = []
    n = omega.size
    i = 1
    while i < n - 1:
        if not (values[i] > values[i - 1]):
            i += 1
            continue
        j = i
        while j + 1 < n - 1 and values[j + 1] == values[j]:
            j += 1
        if not (values[j] > values[j + 1]):
            i = j + 1
            continue

        freq, height = _parabolic_vertex(
            omega[i - 1 : i + 2], values[i - 1 : i + 2]
        )
        half = 0.5 * height
        left = _cross_down(omega, values, i, half, step=-1)
        right = _cross_down(omega, values, j, half, step=+1)
        fwhm = right - left if math.isfinite(left) and math.isfinite(right) else math.nan
        peaks.append(Peak(frequency=freq, height=height, fwhm=fwhm))
        i = j + 1
    if not peaks:
        raise NoPeaksError("no interior local maximum on the sampled curve")
    return peaks


def _parabolic_vertex(x3, y3) -> tuple[float, float]:
    """Vertex of the parabola through three samples; falls back to the center."""
    x0, x1, x2 = (float(v) for v in x3)
    y0, y1, y2 = (float(v) for v in y3)
    denom = (y0 - 2.0 * y1 + y2)
    if denom >= 0.0:
        return x1, y1
    h = x1 - x0
    shift = 0.5 * h * (y0 - y2) / denom
    height = y1 - 0.25 * (y0 - y2) * shift / h
    return x1 + shift, height


def _cross_down(omega, values, start: int, level: float, step: int) -> float:
    """Frequency where the curve first drops through level, walking from start."""
    i = start
    while 0 <= i + step < omega.size:
        j = i + step
        if values[j] <= level:
            frac = (values[i] - level) / (values[i] - values[j])
            return float(omega[i] + frac * (omega[j] - omega[i]))
        i = j
    return math.nan
