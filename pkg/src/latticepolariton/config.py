"""Configuration schema, presets, and assembly into simulation objects.

Configs are JSON with five blocks: atom, lattice, cavity, exciton, sweep.
Keys carry their unit as a suffix (``omega_a_eV``, ``constant_A``,
``gamma_ex_radps``) because mixing eV, Angstrom and rad/s silently is the
classic failure mode of this kind of calculation.  Unknown keys are
rejected.  Parsing is normalizing: emit(parse(text)) fills every default,
and parsing that output again is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .cavity import CavitySpec, coupling_strength
from .constants import angstrom_to_m, dipole_ea_to_cm, ev_to_angular
from .dipole import GEOMETRY_MODES, AtomSpec, TransferCouplings, transfer_parameters
from .errors import ConfigError
from .exciton import DISPERSION_MODES, ExcitonBand
from .lattice import LatticeSpec
from .polariton import PolaritonMode, branches
from .spectra import DampingSpec, default_probe_grid

DEFAULT_K_MAX = 3.0e7  # rad/m
DEFAULT_K_SAMPLES = 301
DEFAULT_OMEGA_SAMPLES = 2001
DEFAULT_SPECTRA_K = (0.0, 2.0e5, 4.0e5, 8.0e5, 1.6e6)  # rad/m


@dataclass(frozen=True)
class AtomConfig:
    omega_a_eV: float
    dipole_eA: float
    linewidth_eV: float = 0.0


@dataclass(frozen=True)
class LatticeConfig:
    constant_A: float
    nx: int = 32
    ny: int = 32


@dataclass(frozen=True)
class CavityConfig:
    length_A: float | str = "resonant"
    mode_index: int = 1
    epsilon: float = 1.0
    gamma_up_radps: float = 0.0
    gamma_low_radps: float = 0.0


@dataclass(frozen=True)
class ExcitonConfig:
    gamma_ex_radps: float = 0.0
    dispersion_mode: str = "axial-nnn"
    geometry_mode: str = "collinear"
    j1_eV: float | None = None
    j2_eV: float | None = None
    zero_k_eV: float | None = None
    frozen: bool = True


@dataclass(frozen=True)
class SweepConfig:
    k_max_radpm: float = DEFAULT_K_MAX
    k_samples: int = DEFAULT_K_SAMPLES
    omega_min_eV: float | None = None
    omega_max_eV: float | None = None
    omega_samples: int = DEFAULT_OMEGA_SAMPLES
    spectra_k_radpm: tuple[float, ...] = DEFAULT_SPECTRA_K


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated, normalized configuration in input units."""

    atom: AtomConfig
    lattice: LatticeConfig
    cavity: CavityConfig
    exciton: ExcitonConfig
    sweep: SweepConfig

    def to_dict(self) -> dict:
        """Plain-dict form with defaults filled; None-valued keys omitted."""
        out: dict[str, dict] = {}
        for block in ("atom", "lattice", "cavity", "exciton", "sweep"):
            section = {}
            obj = getattr(self, block)
            for key in obj.__dataclass_fields__:
                value = getattr(obj, key)
                if value is None:
                    continue
                if isinstance(value, tuple):
                    value = list(value)
                section[key] = value
            out[block] = section
        return out

    def emit(self) -> str:
        """Canonical JSON text: sorted keys, two-space indent."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def build(self) -> "Scenario":
        return _build_scenario(self)


class _Block:
    """One config section with consumed-key tracking."""

    def __init__(self, name: str, raw: Any):
        if raw is None:
            raw = {}
        if not isinstance(raw, dict):
            raise ConfigError(f"{name}: must be an object")
        self.name = name
        self.raw = dict(raw)

    def take(self, key: str, kind, required: bool = False, default=None):
        if key not in self.raw or self.raw[key] is None:
            if required:
                raise ConfigError(f"{self.name}.{key}: required")
            return default
        value = self.raw.pop(key)
        return self._coerce(key, value, kind)

    def _coerce(self, key: str, value, kind):
        label = f"{self.name}.{key}"
        if kind is float:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"{label}: expected a number, got {value!r}")
            return float(value)
        if kind is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{label}: expected an integer, got {value!r}")
            return value
        if kind is bool:
            if not isinstance(value, bool):
                raise ConfigError(f"{label}: expected true/false, got {value!r}")
            return value
        if kind is str:
            if not isinstance(value, str):
                raise ConfigError(f"{label}: expected a string, got {value!r}")
            return value
        raise AssertionError(kind)

    def finish(self) -> None:
        if self.raw:
            key = sorted(self.raw)[0]
            raise ConfigError(f"{self.name}.{key}: unknown key")


def _positive(label: str, value: float) -> float:
    if not value > 0.0:
        raise ConfigError(f"{label}: must be > 0")
    return value


def _nonnegative(label: str, value: float) -> float:
    if value < 0.0:
        raise ConfigError(f"{label}: must be >= 0")
    return value


def parse_config(data: dict | str) -> ScenarioConfig:
    """Validate a config given as JSON text or an already-loaded dict."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("top level must be an object")
    known = {"atom", "lattice", "cavity", "exciton", "sweep"}
    for key in data:
        if key not in known:
            raise ConfigError(f"{key}: unknown section")
    if "atom" not in data:
        raise ConfigError("atom: required section")
    if "lattice" not in data:
        raise ConfigError("lattice: required section")

    atom_b = _Block("atom", data.get("atom"))
    atom = AtomConfig(
        omega_a_eV=_positive("atom.omega_a_eV", atom_b.take("omega_a_eV", float, required=True)),
        dipole_eA=_nonnegative("atom.dipole_eA", atom_b.take("dipole_eA", float, required=True)),
        linewidth_eV=_nonnegative("atom.linewidth_eV", atom_b.take("linewidth_eV", float, default=0.0)),
    )
    atom_b.finish()

    lat_b = _Block("lattice", data.get("lattice"))
    nx = lat_b.take("nx", int, default=32)
    ny = lat_b.take("ny", int, default=32)
    if nx < 1 or ny < 1:
        raise ConfigError("lattice.nx and lattice.ny must be >= 1")
    lattice = LatticeConfig(
        constant_A=_positive("lattice.constant_A", lat_b.take("constant_A", float, required=True)),
        nx=nx,
        ny=ny,
    )
    lat_b.finish()

    cav_b = _Block("cavity", data.get("cavity"))
    length_raw = cav_b.raw.get("length_A", "resonant")
    if isinstance(length_raw, str):
        if length_raw != "resonant":
            raise ConfigError('cavity.length_A: must be a number or "resonant"')
        cav_b.raw.pop("length_A", None)
        length: float | str = "resonant"
    else:
        length = _positive("cavity.length_A", cav_b.take("length_A", float, required=True))
    mode_index = cav_b.take("mode_index", int, default=1)
    if mode_index < 1:
        raise ConfigError("cavity.mode_index: must be >= 1")
    cavity = CavityConfig(
        length_A=length,
        mode_index=mode_index,
        epsilon=_positive("cavity.epsilon", cav_b.take("epsilon", float, default=1.0)),
        gamma_up_radps=_nonnegative(
            "cavity.gamma_up_radps", cav_b.take("gamma_up_radps", float, default=0.0)
        ),
        gamma_low_radps=_nonnegative(
            "cavity.gamma_low_radps", cav_b.take("gamma_low_radps", float, default=0.0)
        ),
    )
    cav_b.finish()

    exc_b = _Block("exciton", data.get("exciton"))
    dispersion_mode = exc_b.take("dispersion_mode", str, default="axial-nnn")
    if dispersion_mode not in DISPERSION_MODES:
        raise ConfigError(
            f"exciton.dispersion_mode: must be one of {list(DISPERSION_MODES)}"
        )
    geometry_mode = exc_b.take("geometry_mode", str, default="collinear")
    if geometry_mode not in GEOMETRY_MODES:
        raise ConfigError(f"exciton.geometry_mode: must be one of {list(GEOMETRY_MODES)}")
    j1 = exc_b.take("j1_eV", float)
    j2 = exc_b.take("j2_eV", float)
    if (j1 is None) != (j2 is None):
        raise ConfigError("exciton.j1_eV and exciton.j2_eV must be given together")
    zero_k = exc_b.take("zero_k_eV", float)
    if zero_k is not None:
        _positive("exciton.zero_k_eV", zero_k)
    exciton = ExcitonConfig(
        gamma_ex_radps=_nonnegative(
            "exciton.gamma_ex_radps", exc_b.take("gamma_ex_radps", float, default=0.0)
        ),
        dispersion_mode=dispersion_mode,
        geometry_mode=geometry_mode,
        j1_eV=j1,
        j2_eV=j2,
        zero_k_eV=zero_k,
        frozen=exc_b.take("frozen", bool, default=True),
    )
    exc_b.finish()

    sw_b = _Block("sweep", data.get("sweep"))
    k_samples = sw_b.take("k_samples", int, default=DEFAULT_K_SAMPLES)
    omega_samples = sw_b.take("omega_samples", int, default=DEFAULT_OMEGA_SAMPLES)
    if k_samples < 2 or omega_samples < 2:
        raise ConfigError("sweep sample counts must be >= 2")
    omega_min = sw_b.take("omega_min_eV", float)
    omega_max = sw_b.take("omega_max_eV", float)
    if (omega_min is None) != (omega_max is None):
        raise ConfigError("sweep.omega_min_eV and sweep.omega_max_eV must be given together")
    if omega_min is not None and not omega_max > omega_min:
        raise ConfigError("sweep.omega_max_eV must exceed sweep.omega_min_eV")
    k_list_raw = sw_b.raw.pop("spectra_k_radpm", None)
    if k_list_raw is None:
        k_list = DEFAULT_SPECTRA_K
    else:
        if not isinstance(k_list_raw, list) or not k_list_raw:
            raise ConfigError("sweep.spectra_k_radpm: must be a non-empty list")
        cleaned = []
        for item in k_list_raw:
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise ConfigError("sweep.spectra_k_radpm: entries must be numbers")
            if item < 0.0:
                raise ConfigError("sweep.spectra_k_radpm: entries must be >= 0")
            cleaned.append(float(item))
        k_list = tuple(cleaned)
    sweep = SweepConfig(
        k_max_radpm=_positive(
            "sweep.k_max_radpm", sw_b.take("k_max_radpm", float, default=DEFAULT_K_MAX)
        ),
        k_samples=k_samples,
        omega_min_eV=omega_min,
        omega_max_eV=omega_max,
        omega_samples=omega_samples,
        spectra_k_radpm=k_list,
    )
    sw_b.finish()

    return ScenarioConfig(atom=atom, lattice=lattice, cavity=cavity, exciton=exciton, sweep=sweep)


@dataclass(frozen=True)
class Scenario:
    """Fully assembled simulation objects in canonical units."""

    config: ScenarioConfig
    atom: AtomSpec
    lattice: LatticeSpec
    cavity: CavitySpec
    band: ExcitonBand
    damping: DampingSpec
    omega_x: float
    frozen_exciton: bool
    geometry_mode: str

    def exciton_frequency(self, k) -> float:
        """Exciton frequency entering the two-mode block at wavenumber k.

        Frozen (default): the zone-center value for every k, since the
        exciton band varies by ~1e8 rad/s while the photon moves by 1e13
        over the same window.  Unfrozen: the full band along the kx axis.
        """
        if self.frozen_exciton:
            return self.omega_x
        return float(self.band.dispersion(k, 0.0))

    def polariton_at(self, k) -> tuple[PolaritonMode, PolaritonMode]:
        f = coupling_strength(self.cavity, self.atom, self.lattice, k)
        return branches(
            self.exciton_frequency(k),
            float(self.cavity.photon_dispersion(k)),
            f,
            gamma_ex=self.damping.gamma_ex,
        )

    def probe_grid(self, modes) -> np.ndarray:
        sweep = self.config.sweep
        if sweep.omega_min_eV is not None:
            return np.linspace(
                ev_to_angular(sweep.omega_min_eV),
                ev_to_angular(sweep.omega_max_eV),
                sweep.omega_samples,
            )
        return default_probe_grid(modes, self.damping, samples=sweep.omega_samples)


def _build_scenario(config: ScenarioConfig) -> Scenario:
    atom = AtomSpec(
        omega_a=ev_to_angular(config.atom.omega_a_eV),
        mu=dipole_ea_to_cm(config.atom.dipole_eA),
        gamma_a=ev_to_angular(config.atom.linewidth_eV),
    )
    lattice = LatticeSpec(
        a=angstrom_to_m(config.lattice.constant_A),
        nx=config.lattice.nx,
        ny=config.lattice.ny,
    )
    if config.exciton.j1_eV is not None:
        couplings = TransferCouplings(
            j1=ev_to_angular(config.exciton.j1_eV),
            j2=ev_to_angular(config.exciton.j2_eV),
        )
    else:
        couplings = transfer_parameters(atom, lattice, config.exciton.geometry_mode)

    shift = 4.0 * (couplings.j1 + couplings.j2)
    if config.exciton.zero_k_eV is not None:
        omega_x = ev_to_angular(config.exciton.zero_k_eV)
        band_omega_a = omega_x + shift
    else:
        band_omega_a = atom.omega_a
        omega_x = band_omega_a - shift
    band = ExcitonBand(
        omega_a=band_omega_a,
        couplings=couplings,
        a=lattice.a,
        mode=config.exciton.dispersion_mode,
    )

    if config.cavity.length_A == "resonant":
        cavity = CavitySpec.resonant(
            omega_x,
            mode_index=config.cavity.mode_index,
            epsilon=config.cavity.epsilon,
            gamma_u=config.cavity.gamma_up_radps,
            gamma_l=config.cavity.gamma_low_radps,
        )
    else:
        cavity = CavitySpec(
            length=angstrom_to_m(config.cavity.length_A),
            mode_index=config.cavity.mode_index,
            epsilon=config.cavity.epsilon,
            gamma_u=config.cavity.gamma_up_radps,
            gamma_l=config.cavity.gamma_low_radps,
        )

    damping = DampingSpec(
        gamma_u=config.cavity.gamma_up_radps,
        gamma_l=config.cavity.gamma_low_radps,
        gamma_ex=config.exciton.gamma_ex_radps,
    )
    return Scenario(
        config=config,
        atom=atom,
        lattice=lattice,
        cavity=cavity,
        band=band,
        damping=damping,
        omega_x=omega_x,
        frozen_exciton=config.exciton.frozen,
        geometry_mode=config.exciton.geometry_mode,
    )


# Ready-made parameter sets.  "figure4" is the lossless strong-coupling
# benchmark (resonant cavity, 2 eV excitation, 2000 A lattice); "figure7"
# adds realistic mirror and exciton losses; "rb85" and "na23" are the
# bare-exciton observability scenarios with literature hopping rates.
PRESETS: dict[str, dict] = {
    "figure4": {
        "atom": {"omega_a_eV": 2.0, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8},
        "lattice": {"constant_A": 2000.0},
        "cavity": {"length_A": "resonant"},
        "exciton": {"zero_k_eV": 2.0},
    },
    "figure7": {
        "atom": {"omega_a_eV": 2.0, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8},
        "lattice": {"constant_A": 2000.0},
        "cavity": {
            "length_A": "resonant",
            "gamma_up_radps": 7.5e10,
            "gamma_low_radps": 7.5e10,
        },
        "exciton": {"zero_k_eV": 2.0, "gamma_ex_radps": 1.5e9},
    },
    "rb85": {
        "atom": {"omega_a_eV": 1.56, "dipole_eA": 2.0, "linewidth_eV": 2.5e-8},
        "lattice": {"constant_A": 1000.0},
        "cavity": {"length_A": "resonant"},
        "exciton": {"j1_eV": 1.0e-7, "j2_eV": 3.0e-8},
    },
    "na23": {
        "atom": {"omega_a_eV": 2.1, "dipole_eA": 2.0, "linewidth_eV": 4.0e-8},
        "lattice": {"constant_A": 1000.0},
        "cavity": {"length_A": "resonant"},
    },
}


def preset_config(name: str) -> ScenarioConfig:
    """Named preset as a validated config; unknown names raise ConfigError."""
    try:
        raw = PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        ) from None
    return parse_config(json.loads(json.dumps(raw)))


def load_config_file(path) -> ScenarioConfig:
    """Read and validate a JSON config file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config(text)
