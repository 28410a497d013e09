"""Planar cavity photon mode and its coupling to the lattice excitation.

The cavity is two mirrors a distance L apart filled with a medium of
dielectric constant epsilon.  Photon motion along the mirrors is free,
so each longitudinal mode index m gives a 2D dispersion with a rest
frequency set by the mirror spacing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C, EPS0, HBAR
from .dipole import AtomSpec
from .lattice import LatticeSpec


@dataclass(frozen=True)
class CavitySpec:
    """Planar cavity: mirror spacing, mode index, dielectric, mirror rates.

    omega0 is the in-plane rest frequency (c / sqrt(epsilon)) * m*pi / L.
    It is stored rather than recomputed so a cavity built to be resonant
    with a given frequency hits it exactly at q = 0; when omitted it is
    derived from the length.  gamma_u and gamma_l are the photon leakage
    rates through the upper (illuminated) and lower mirrors, rad/s.
    """

    length: float
    mode_index: int = 1
    epsilon: float = 1.0
    gamma_u: float = 0.0
    gamma_l: float = 0.0
    omega0: float | None = None

    def __post_init__(self) -> None:
        if not self.length > 0.0:
            raise ValueError("cavity length must be > 0")
        if self.mode_index < 1:
            raise ValueError("mode_index must be >= 1")
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be > 0")
        if self.gamma_u < 0.0 or self.gamma_l < 0.0:
            raise ValueError("mirror rates must be >= 0")
        if self.omega0 is None:
            rest = (C / math.sqrt(self.epsilon)) * self.mode_index * math.pi / self.length
            object.__setattr__(self, "omega0", rest)
        elif not self.omega0 > 0.0:
            raise ValueError("omega0 must be > 0")

    @classmethod
    def resonant(
        cls,
        omega0: float,
        mode_index: int = 1,
        epsilon: float = 1.0,
        gamma_u: float = 0.0,
        gamma_l: float = 0.0,
    ) -> "CavitySpec":
        """Cavity whose q = 0 frequency equals omega0 exactly.

        The mirror spacing is derived, L = m*pi*c / (sqrt(epsilon)*omega0),
        but omega0 itself is stored untouched, so zero detuning at zone
        center survives floating-point round-trips.
        """
        if not omega0 > 0.0:
            raise ValueError("omega0 must be > 0")
        length = mode_index * math.pi * C / (math.sqrt(epsilon) * omega0)
        return cls(
            length=length,
            mode_index=mode_index,
            epsilon=epsilon,
            gamma_u=gamma_u,
            gamma_l=gamma_l,
            omega0=omega0,
        )

    def photon_dispersion(self, q):
        """Photon frequency (rad/s) at in-plane wavenumber q (rad/m).

        hypot keeps omega(0) == omega0 exactly and is monotonic in |q|.
        """
        return np.hypot(self.omega0, (C / math.sqrt(self.epsilon)) * np.asarray(q, dtype=float))


def coupling_strength(
    cavity: CavitySpec, atom: AtomSpec, lattice: LatticeSpec, q
) -> complex:
    """Collective exciton-photon coupling f (rad/s, complex) at wavenumber q.

    The collective dipole of N sites couples to the mode volume L * S with
    S = N * a**2, so N cancels and

        |f| = sqrt( omega_c(q) * mu**2 / (2 * hbar * L * a**2 * eps0) ).

    The amplitude carries the -i phase of the field operator.  Independent
    of nx, ny by construction; grows like sqrt(omega_c) at large q.
    """
    omega_c = cavity.photon_dispersion(q)
    modulus = np.sqrt(
        omega_c * atom.mu * atom.mu
        / (2.0 * HBAR * cavity.length * lattice.a * lattice.a * EPS0)
    )
    return -1j * modulus
