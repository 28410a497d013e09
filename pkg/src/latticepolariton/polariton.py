"""Two-mode exciton-photon diagonalization: branches and Hopfield weights.

At each in-plane wavevector the exciton at omega_x and the photon at
omega_c mix through the coupling f.  Diagonalizing the 2x2 block gives
the upper and lower polariton branches and the exciton/photon content
of each.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateModesError


@dataclass(frozen=True)
class PolaritonMode:
    """One polariton branch at one wavevector.

    exciton_amp and photon_amp are the Hopfield amplitudes (X, Y); their
    squared moduli sum to one.  gamma is the nonradiative width inherited
    from the exciton, gamma_ex * |X|**2, rad/s.
    """

    branch: str
    omega: float
    exciton_amp: complex
    photon_amp: complex
    gamma: float

    @property
    def exciton_weight(self) -> float:
        return abs(self.exciton_amp) ** 2

    @property
    def photon_weight(self) -> float:
        return abs(self.photon_amp) ** 2


def detuning(omega_c: float, omega_x: float) -> float:
    """Half the photon-exciton splitting, delta = (omega_c - omega_x) / 2."""
    return 0.5 * (omega_c - omega_x)


def branches(
    omega_x: float, omega_c: float, f: complex, gamma_ex: float = 0.0
) -> tuple[PolaritonMode, PolaritonMode]:
    """Upper and lower polariton modes for one (omega_x, omega_c, f) triple.

    Branch frequencies:

        Omega_pm = (omega_c + omega_x) / 2 +/- Delta,
        Delta = sqrt(delta**2 + |f|**2),  delta = (omega_c - omega_x) / 2.

    Hopfield weights use |X_pm|**2 = (Delta -/+ delta) / (2*Delta) and
    |Y_pm|**2 = (Delta +/- delta) / (2*Delta).  The small one of
    (Delta - delta, Delta + delta) is evaluated as |f|**2 / (Delta + |delta|)
    instead of by subtraction; at |delta| >> |f| the direct difference
    loses enough digits to break weight normalization at the 1e-8 level.

    The photon amplitude keeps the phase of f; the exciton amplitude is
    real, positive for the upper branch and negative for the lower one.
    Requires Delta > 0; degenerate uncoupled modes have no unique basis.
    """
    if gamma_ex < 0.0:
        raise ValueError("gamma_ex must be >= 0")
    delta = detuning(omega_c, omega_x)
    f_mag = abs(f)
    big = math.hypot(delta, f_mag)
    if big == 0.0:
        raise DegenerateModesError(
            "delta = 0 and f = 0: branches are degenerate and uncoupled"
        )
    mean = 0.5 * (omega_c + omega_x)

    # Stable pair (Delta - delta, Delta + delta): compute the larger one
    # directly, recover the smaller from (Delta-delta)(Delta+delta) = |f|**2.
    if delta >= 0.0:
        sum_side = big + delta
        diff_side = (f_mag * f_mag) / sum_side if sum_side > 0.0 else 0.0
    else:
        diff_side = big - delta
        sum_side = (f_mag * f_mag) / diff_side

    phase = f / f_mag if f_mag > 0.0 else 1.0 + 0.0j

    # Upper branch: |X|**2 = diff_side/(2 Delta), |Y|**2 = sum_side/(2 Delta).
    x_up = math.sqrt(diff_side / (2.0 * big))
    y_up = phase * math.sqrt(sum_side / (2.0 * big))
    upper = PolaritonMode(
        branch="upper",
        omega=mean + big,
        exciton_amp=complex(x_up),
        photon_amp=y_up,
        gamma=gamma_ex * x_up * x_up,
    )
    x_lo = math.sqrt(sum_side / (2.0 * big))
    y_lo = phase * math.sqrt(diff_side / (2.0 * big))
    lower = PolaritonMode(
        branch="lower",
        omega=mean - big,
        exciton_amp=complex(-x_lo),
        photon_amp=y_lo,
        gamma=gamma_ex * x_lo * x_lo,
    )
    return upper, lower


def diagonalize_numeric(
    omega_x: float, omega_c: float, f: complex
) -> tuple[np.ndarray, np.ndarray]:
    """Independent cross-check: numerically diagonalize the 2x2 block.

    Returns (eigenvalues ascending, |amplitude| matrix) where column r of
    the amplitude matrix holds (|X|, |Y|) of eigenvector r in the
    (exciton, photon) basis.  Used to validate branches() on random draws.
    """
    block = np.array([[omega_x, np.conj(f)], [f, omega_c]], dtype=complex)
    values, vectors = np.linalg.eigh(block)
    return values, np.abs(vectors)
