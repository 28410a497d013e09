"""Physical constants (CODATA 2018, SI) and unit conversions.

Canonical internal units: angular frequencies in rad/s, lengths in m,
dipole moments in C*m.  Conversion helpers are linear and sign-preserving
so they can be applied to detunings and shifts, not just level energies.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable bundle of the SI constants used throughout the package."""

    hbar: float = 1.054_571_817e-34  # J*s (exact in CODATA 2018)
    c: float = 2.997_924_58e8  # m/s (exact)
    eps0: float = 8.854_187_8128e-12  # F/m
    e_charge: float = 1.602_176_634e-19  # C (exact)

    def __post_init__(self) -> None:
        for name in ("hbar", "c", "eps0", "e_charge"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")


CODATA = PhysicalConstants()

HBAR = CODATA.hbar
C = CODATA.c
EPS0 = CODATA.eps0
E_CHARGE = CODATA.e_charge


def ev_to_angular(energy_ev):
    """Photon energy in eV to angular frequency in rad/s."""
    return energy_ev * (E_CHARGE / HBAR)


def angular_to_ev(omega):
    """Angular frequency in rad/s to photon energy in eV."""
    return omega * (HBAR / E_CHARGE)


def angstrom_to_m(length_angstrom):
    """Length in Angstrom to meters."""
    return length_angstrom * 1e-10


def dipole_ea_to_cm(dipole_ea):
    """Dipole moment in units of (elementary charge * Angstrom) to C*m."""
    return dipole_ea * E_CHARGE * 1e-10
