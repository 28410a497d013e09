"""Excitons and cavity polaritons for ultracold atoms on a 2D optical lattice.

The package models a Mott insulator of two-level atoms, one per site of a
square lattice, whose shared electronic excitation hops between sites via
retarded dipole-dipole transfer and hybridizes with a planar-cavity photon.
It provides exciton and polariton dispersions, Hopfield mixing weights, and
linear transmission/reflection/absorption spectra of a weak probe.
"""

__version__ = "0.1.0"

from .cavity import CavitySpec, coupling_strength
from .config import (
    PRESETS,
    Scenario,
    ScenarioConfig,
    load_config_file,
    parse_config,
    preset_config,
)
from .constants import (
    CODATA,
    PhysicalConstants,
    angstrom_to_m,
    angular_to_ev,
    dipole_ea_to_cm,
    ev_to_angular,
)
from .dipole import (
    AtomSpec,
    TransferCouplings,
    dipole_coupling_collinear,
    dipole_coupling_tensor,
    transfer_parameters,
)
from .errors import (
    ConfigError,
    DegenerateModesError,
    DomainError,
    FlatBandError,
    NoPeaksError,
    OracleBudgetError,
    OracleMismatchError,
    PoleOnAxisError,
    SingularSeparationError,
    UnsupportedShellError,
)
from .exciton import ExcitonBand, hopping_matrix_eigenvalues
from .lattice import LatticeSpec, NeighborShell, allowed_wavevectors, neighbor_shells
from .polariton import PolaritonMode, branches, detuning, diagonalize_numeric
from .spectra import (
    DampingSpec,
    Peak,
    SpectralResponse,
    default_probe_grid,
    peak_report,
    polariton_response,
    probe_spectra,
    sum_rule_check,
)

__all__ = [
    "__version__",
    "AtomSpec",
    "CavitySpec",
    "CODATA",
    "ConfigError",
    "DampingSpec",
    "DegenerateModesError",
    "DomainError",
    "ExcitonBand",
    "FlatBandError",
    "LatticeSpec",
    "NeighborShell",
    "NoPeaksError",
    "OracleBudgetError",
    "OracleMismatchError",
    "Peak",
    "PhysicalConstants",
    "PolaritonMode",
    "PoleOnAxisError",
    "PRESETS",
    "Scenario",
    "ScenarioConfig",
    "SingularSeparationError",
    "SpectralResponse",
    "TransferCouplings",
    "UnsupportedShellError",
    "allowed_wavevectors",
    "angstrom_to_m",
    "angular_to_ev",
    "branches",
    "coupling_strength",
    "default_probe_grid",
    "detuning",
    "diagonalize_numeric",
    "dipole_coupling_collinear",
    "dipole_coupling_tensor",
    "dipole_ea_to_cm",
    "ev_to_angular",
    "hopping_matrix_eigenvalues",
    "load_config_file",
    "neighbor_shells",
    "parse_config",
    "peak_report",
    "polariton_response",
    "preset_config",
    "probe_spectra",
    "sum_rule_check",
    "transfer_parameters",
]
