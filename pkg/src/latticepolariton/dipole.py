"""Retarded dipole-dipole excitation transfer between lattice sites.

A ground-state atom next to an excited one can absorb the excitation
through the retarded dipole-dipole interaction.  The transfer amplitude
depends on both dipole orientations, the separation vector, and the
resonance wavenumber of the transition, and it oscillates with distance
once the separation is comparable to the optical wavelength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C, EPS0, HBAR
from .errors import SingularSeparationError
from .lattice import LatticeSpec, neighbor_shells

GEOMETRY_MODES = ("collinear", "perpendicular")


@dataclass(frozen=True)
class AtomSpec:
    """Two-level atom: transition frequency, dipole moment, radiative width.

    omega_a is the bare transition frequency in rad/s, mu the transition
    dipole magnitude in C*m, gamma_a the free-space radiative linewidth in
    rad/s (zero for an idealized non-decaying transition).
    """

    omega_a: float
    mu: float
    gamma_a: float = 0.0

    def __post_init__(self) -> None:
        if not self.omega_a > 0.0:
            raise ValueError("omega_a must be > 0")
        if self.mu < 0.0:
            raise ValueError("mu must be >= 0")
        if self.gamma_a < 0.0:
            raise ValueError("gamma_a must be >= 0")

    @property
    def resonance_wavenumber(self) -> float:
        """Free-space wavenumber omega_a / c of the transition, rad/m."""
        return self.omega_a / C


@dataclass(frozen=True)
class TransferCouplings:
    """Hopping rates (rad/s) for the two nearest shells of a square lattice.

    j1 couples the four side neighbors, j2 the four diagonal neighbors.
    Positive values lower the band bottom at zone center.
    """

    j1: float
    j2: float = 0.0


def dipole_coupling_tensor(mu1, mu2, r, wavenumber: float) -> float:
    """Retarded dipole-dipole transfer energy between two sites.

    Parameters
    ----------
    mu1, mu2 : array_like, shape (3,)
        Transition dipole vectors of the two atoms, C*m.
    r : array_like, shape (3,)
        Separation vector between the sites, m.  Must be nonzero.
    wavenumber : float
        Resonance wavenumber omega_a / c, rad/m.  Must be >= 0.

    Returns
    -------
    float
        Transfer energy hbar*J in joules.  The static limit
        (wavenumber -> 0) recovers the familiar 1/r**3 dipole tensor;
        at finite wavenumber the result oscillates in sign with r.

    Notes
    -----
    With R = |r|, u = wavenumber * R and unit vector n = r / R:

        hbar*J = (1 / (4*pi*eps0*R**3)) * (
            (mu1.mu2 - 3 (mu1.n)(mu2.n)) * (cos u + u sin u)
            - (mu1.mu2 - (mu1.n)(mu2.n)) * u**2 cos u )
    """
    mu1 = np.asarray(mu1, dtype=float)
    mu2 = np.asarray(mu2, dtype=float)
    r = np.asarray(r, dtype=float)
    if mu1.shape != (3,) or mu2.shape != (3,) or r.shape != (3,):
        raise ValueError("mu1, mu2 and r must be 3-vectors")
    if wavenumber < 0.0:
        raise ValueError("wavenumber must be >= 0")
    separation = float(np.linalg.norm(r))
    if separation == 0.0:
        raise SingularSeparationError("dipole coupling diverges at zero separation")

    unit = r / separation
    dot = float(mu1 @ mu2)
    proj1 = float(mu1 @ unit)
    proj2 = float(mu2 @ unit)
    u = wavenumber * separation
    near = (dot - 3.0 * proj1 * proj2) * (math.cos(u) + u * math.sin(u))
    far = (dot - proj1 * proj2) * (u * u * math.cos(u))
    return (near - far) / (4.0 * math.pi * EPS0 * separation**3)


def dipole_coupling_collinear(mu: float, separation: float, wavenumber: float) -> float:
    """Transfer energy for dipoles along the separation axis.

    Both dipoles point along r, so only the longitudinal part of the
    tensor survives:

        hbar*J = -(mu**2 / (2*pi*eps0*R**3)) * (cos u + u sin u),  u = wavenumber*R.

    Returns joules.  This is the strongest-coupling orientation and the
    default geometry for in-plane dipoles on the lattice axis.
    """
    if separation <= 0.0:
        raise SingularSeparationError("separation must be > 0")
    if wavenumber < 0.0:
        raise ValueError("wavenumber must be >= 0")
    u = wavenumber * separation
    return -(mu * mu) * (math.cos(u) + u * math.sin(u)) / (
        2.0 * math.pi * EPS0 * separation**3
    )


def transfer_parameters(
    atom: AtomSpec, lattice: LatticeSpec, geometry: str = "collinear"
) -> TransferCouplings:
    """Hopping rates J1, J2 (rad/s) for the first two neighbor shells.

    geometry selects the dipole orientation relative to the lattice plane:

    - "collinear": dipoles in the plane, along the separation axis.  Uses
      the closed longitudinal form for every shell; an approximation for
      the diagonal shell, where the true orientation is 45 degrees off
      axis, but the standard idealization for the strongest coupling.
    - "perpendicular": dipoles normal to the plane.  Uses the full tensor;
      the result is isotropic in the plane, so a single direction per
      shell distance suffices.

    Sign convention: the returned J is minus the transfer energy over
    hbar, so J1 > 0 when the transfer energy at distance a is negative
    (attractive band bottom at zone center).  The result is finite for
    any valid inputs; mu = 0 simply gives zero coupling.
    """
    if geometry not in GEOMETRY_MODES:
        raise ValueError(f"geometry must be one of {GEOMETRY_MODES}, got {geometry!r}")
    wavenumber = atom.resonance_wavenumber
    rates = []
    for shell in neighbor_shells(lattice, max_shell=2):
        if geometry == "collinear":
            energy = dipole_coupling_collinear(atom.mu, shell.distance, wavenumber)
        else:
            mu_vec = np.array([0.0, 0.0, atom.mu])
            r_vec = np.array([shell.distance, 0.0, 0.0])
            energy = dipole_coupling_tensor(mu_vec, mu_vec, r_vec, wavenumber)
        rates.append(-energy / HBAR)
    return TransferCouplings(j1=rates[0], j2=rates[1])
