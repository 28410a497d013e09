"""High-level runs behind the command-line interface.

Every run is deterministic: floats are written with 12 significant
digits, keys are sorted, and no timestamps or environment details enter
the output, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import io
import json
import math

import numpy as np

from . import __version__
from .cavity import coupling_strength
from .config import Scenario
from .constants import angular_to_ev
from .dipole import transfer_parameters
from .errors import FlatBandError, NoPeaksError, OracleMismatchError
from .exciton import ExcitonBand, hopping_matrix_eigenvalues
from .lattice import LatticeSpec, allowed_wavevectors
from .polariton import branches, diagonalize_numeric
from .spectra import SpectralResponse, peak_report, probe_spectra, sum_rule_check

DISPERSION_TABLES = ("exciton", "photon", "polariton", "hopfield")

_ORACLE_TOL = 1e-10
_ORACLE_SEED = 20240817
_ORACLE_DRAWS = 1000


def _fmt(value) -> str:
    """Fixed 12-significant-digit rendering used in all text output."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    return f"{value:.12g}"


def metadata_dict(scenario: Scenario, extra: dict | None = None) -> dict:
    """Flat parameter echo: config keys, derived quantities, version."""
    flat: dict[str, object] = {"version": __version__}
    for block, section in scenario.config.to_dict().items():
        for key, value in section.items():
            flat[f"{block}.{key}"] = value
    flat["derived.omega_x_radps"] = scenario.omega_x
    flat["derived.cavity_length_A"] = scenario.cavity.length / 1e-10
    flat["derived.j1_radps"] = scenario.band.couplings.j1
    flat["derived.j2_radps"] = scenario.band.couplings.j2
    if extra:
        flat.update(extra)
    return flat


def metadata_lines(scenario: Scenario, extra: dict | None = None) -> list[str]:
    """metadata_dict rendered as '# key = value' lines, keys sorted."""
    flat = metadata_dict(scenario, extra)
    lines = []
    for key in sorted(flat):
        value = flat[key]
        if isinstance(value, list):
            rendered = "[" + ", ".join(_fmt(v) for v in value) + "]"
        elif isinstance(value, (bool, int, float, np.integer, np.floating)):
            rendered = _fmt(value)
        else:
            rendered = str(value)
        lines.append(f"# {key} = {rendered}")
    return lines


def run_check(scenario: Scenario) -> dict:
    """Derived-quantity report: couplings, band, cavity, coupling verdicts."""
    atom = scenario.atom
    lattice = scenario.lattice
    band = scenario.band
    collinear = transfer_parameters(atom, lattice, "collinear")
    perpendicular = transfer_parameters(atom, lattice, "perpendicular")
    if scenario.config.exciton.j1_eV is not None:
        source = "override"
    else:
        source = scenario.geometry_mode

    observable, margin = band.observability(atom)
    try:
        mass = band.effective_mass()
    except FlatBandError:
        mass = math.inf

    f0 = coupling_strength(scenario.cavity, atom, lattice, 0.0)
    rabi = 2.0 * abs(f0)
    gamma_mean = scenario.damping.gamma_mean
    strong_vs_mirrors = rabi > gamma_mean
    strong_vs_exciton = rabi > scenario.damping.gamma_ex

    return {
        "transfer": {
            "j1_collinear_eV": angular_to_ev(collinear.j1),
            "j2_collinear_eV": angular_to_ev(collinear.j2),
            "j1_perpendicular_eV": angular_to_ev(perpendicular.j1),
            "j2_perpendicular_eV": angular_to_ev(perpendicular.j2),
            "j1_effective_radps": band.couplings.j1,
            "j2_effective_radps": band.couplings.j2,
            "source": source,
        },
        "exciton": {
            "zero_k_eV": angular_to_ev(scenario.omega_x),
            "band_shift_radps": 4.0 * (band.couplings.j1 + band.couplings.j2),
            "effective_mass_kg": mass,
            "observable": observable,
            "margin": margin,
        },
        "cavity": {
            "length_A": scenario.cavity.length / 1e-10,
            "omega_c0_radps": scenario.cavity.omega0,
            "omega_c0_eV": angular_to_ev(scenario.cavity.omega0),
            "zone_center_detuning_radps": 0.5 * (scenario.cavity.omega0 - scenario.omega_x),
            "coupling_radps": abs(f0),
            "rabi_splitting_radps": rabi,
        },
        "strong_coupling": {
            "rabi_exceeds_mirror_loss": strong_vs_mirrors,
            "rabi_exceeds_exciton_loss": strong_vs_exciton,
            "strong": strong_vs_mirrors and strong_vs_exciton,
        },
    }


def run_dispersion(scenario: Scenario, what: str = "polariton"):
    """Tabulate branch data along kx in [0, k_max]; returns (columns, rows)."""
    if what not in DISPERSION_TABLES:
        raise ValueError(f"what must be one of {DISPERSION_TABLES}, got {what!r}")
    sweep = scenario.config.sweep
    k_grid = np.linspace(0.0, sweep.k_max_radpm, sweep.k_samples)

    if what == "exciton":
        columns = ["k_radpm", "omega_exciton_radps"]
        rows = np.column_stack([k_grid, np.asarray(scenario.band.dispersion(k_grid, 0.0))])
        return columns, rows
    if what == "photon":
        columns = ["k_radpm", "omega_photon_radps"]
        rows = np.column_stack([k_grid, scenario.cavity.photon_dispersion(k_grid)])
        return columns, rows

    upper_w = np.empty_like(k_grid)
    lower_w = np.empty_like(k_grid)
    x2_up = np.empty_like(k_grid)
    y2_up = np.empty_like(k_grid)
    x2_lo = np.empty_like(k_grid)
    y2_lo = np.empty_like(k_grid)
    for i, k in enumerate(k_grid):
        upper, lower = scenario.polariton_at(k)
        upper_w[i] = upper.omega
        lower_w[i] = lower.omega
        x2_up[i] = upper.exciton_weight
        y2_up[i] = upper.photon_weight
        x2_lo[i] = lower.exciton_weight
        y2_lo[i] = lower.photon_weight

    if what == "hopfield":
        columns = [
            "k_radpm",
            "x2_upper",
            "y2_upper",
            "x2_lower",
            "y2_lower",
        ]
        rows = np.column_stack([k_grid, x2_up, y2_up, x2_lo, y2_lo])
        return columns, rows

    columns = [
        "k_radpm",
        "omega_exciton_radps",
        "omega_photon_radps",
        "omega_upper_radps",
        "omega_lower_radps",
    ]
    exciton = np.array([scenario.exciton_frequency(k) for k in k_grid])
    photon = scenario.cavity.photon_dispersion(k_grid)
    rows = np.column_stack([k_grid, exciton, photon, upper_w, lower_w])
    return columns, rows


def run_spectra(scenario: Scenario, k_values=None) -> tuple[list[SpectralResponse], dict]:
    """Probe spectra at each requested wavevector plus a peak summary.

    Everything is computed before anything is reported, so a failure part
    way through produces no partial output.
    """
    if k_values is None:
        k_values = scenario.config.sweep.spectra_k_radpm
    responses = []
    summaries = []
    extra_meta: dict = {}
    for k in k_values:
        upper, lower = scenario.polariton_at(float(k))
        grid = scenario.probe_grid((upper, lower))
        response = probe_spectra(grid, (upper, lower), scenario.damping, k=float(k))
        responses.append(response)
        extra_meta.update(
            {f"spectra.{key}": value for key, value in response.metadata.items()}
        )
        summaries.append(
            {
                "k_radpm": float(k),
                "omega_upper_radps": upper.omega,
                "omega_lower_radps": lower.omega,
                "sum_rule_residual": sum_rule_check(response),
                "transmission_peaks": _peak_entries(response.omega, response.transmission),
                "absorption_peaks": _peak_entries(response.omega, response.absorption),
                "reflection_dips": _peak_entries(response.omega, 1.0 - response.reflection),
            }
        )
    summary = {"metadata": metadata_dict(scenario, extra_meta), "spectra": summaries}
    return responses, summary


def _peak_entries(omega, values) -> list[dict]:
    try:
        peaks = peak_report(omega, values)
    except NoPeaksError:
        return []
    return [
        {"omega_radps": p.frequency, "height": p.height, "fwhm_radps": p.fwhm}
        for p in peaks
    ]


def run_oracle(scenario: Scenario) -> dict:
    """Cross-check closed forms against brute force; raises on mismatch.

    Two checks: the lattice-sum dispersion against dense diagonalization
    of the real-space hopping matrix on a 6x6 lattice, and the two-mode
    branch formulas against numpy eigh on 1000 seeded random draws.
    """
    oracle_lattice = LatticeSpec(a=scenario.lattice.a, nx=6, ny=6)
    band = ExcitonBand(
        omega_a=scenario.band.omega_a,
        couplings=scenario.band.couplings,
        a=scenario.band.a,
        mode="lattice-sum",
    )
    dense = hopping_matrix_eigenvalues(oracle_lattice, band)
    kvecs = allowed_wavevectors(oracle_lattice)
    closed = np.sort(np.asarray(band.dispersion(kvecs[:, 0], kvecs[:, 1])))
    scale = float(np.max(np.abs(dense)))
    hopping_residual = float(np.max(np.abs(dense - closed)) / scale)

    rng = np.random.default_rng(_ORACLE_SEED)
    omega_x = scenario.omega_x
    f_scale = abs(coupling_strength(scenario.cavity, scenario.atom, scenario.lattice, 0.0))
    if f_scale == 0.0:
        f_scale = 1e-6 * omega_x
    eig_residual = 0.0
    weight_residual = 0.0
    for _ in range(_ORACLE_DRAWS):
        delta = omega_x * 1e-3 * (2.0 * rng.random() - 1.0)
        magnitude = f_scale * (0.1 + 2.9 * rng.random())
        phase = 2.0 * math.pi * rng.random()
        f = magnitude * complex(math.cos(phase), math.sin(phase))
        omega_c = omega_x + 2.0 * delta
        upper, lower = branches(omega_x, omega_c, f)
        values, amps = diagonalize_numeric(omega_x, omega_c, f)
        eig_residual = max(
            eig_residual,
            abs(lower.omega - values[0]) / abs(values[0]),
            abs(upper.omega - values[1]) / abs(values[1]),
        )
        weight_residual = max(
            weight_residual,
            abs(abs(lower.exciton_amp) - amps[0, 0]),
            abs(abs(lower.photon_amp) - amps[1, 0]),
            abs(abs(upper.exciton_amp) - amps[0, 1]),
            abs(abs(upper.photon_amp) - amps[1, 1]),
        )

    report = {
        "hopping_matrix": {
            "lattice": "6x6",
            "max_relative_residual": hopping_residual,
            "tolerance": _ORACLE_TOL,
        },
        "two_mode_block": {
            "draws": _ORACLE_DRAWS,
            "max_relative_eigenvalue_residual": eig_residual,
            "max_hopfield_magnitude_residual": weight_residual,
            "tolerance": _ORACLE_TOL,
        },
    }
    if hopping_residual > _ORACLE_TOL:
        raise OracleMismatchError(
            f"hopping-matrix spectrum residual {hopping_residual:.3e} exceeds {_ORACLE_TOL:.1e}"
        )
    if eig_residual > _ORACLE_TOL or weight_residual > _ORACLE_TOL:
        raise OracleMismatchError(
            f"two-mode residuals ({eig_residual:.3e}, {weight_residual:.3e}) exceed {_ORACLE_TOL:.1e}"
        )
    return report


def table_csv(scenario: Scenario, columns, rows, extra_meta=None) -> str:
    """CSV text: '#' metadata header, column names, 12-digit rows."""
    out = io.StringIO()
    for line in metadata_lines(scenario, extra_meta):
        out.write(line + "\n")
    out.write(",".join(columns) + "\n")
    for row in np.atleast_2d(rows):
        out.write(",".join(_fmt(v) for v in row) + "\n")
    return out.getvalue()


def table_json(scenario: Scenario, columns, rows, extra_meta=None) -> str:
    payload = {
        "metadata": metadata_dict(scenario, extra_meta),
        "columns": list(columns),
        "rows": [[float(v) for v in row] for row in np.atleast_2d(rows)],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def spectra_csv(scenario: Scenario, responses) -> str:
    extra = {}
    for response in responses:
        for key, value in response.metadata.items():
            extra[f"spectra.{key}"] = value
    columns = ["k_radpm", "omega_radps", "transmission", "reflection", "absorption"]
    out = io.StringIO()
    for line in metadata_lines(scenario, extra):
        out.write(line + "\n")
    out.write(",".join(columns) + "\n")
    for response in responses:
        for i in range(response.omega.size):
            out.write(
                ",".join(
                    _fmt(v)
                    for v in (
                        response.k,
                        response.omega[i],
                        response.transmission[i],
                        response.reflection[i],
                        response.absorption[i],
                    )
                )
                + "\n"
            )
    return out.getvalue()


def spectra_json(scenario: Scenario, responses, summary) -> str:
    payload = {
        "metadata": summary["metadata"],
        "columns": ["k_radpm", "omega_radps", "transmission", "reflection", "absorption"],
        "rows": [
            [
                float(response.k),
                float(response.omega[i]),
                float(response.transmission[i]),
                float(response.reflection[i]),
                float(response.absorption[i]),
            ]
            for response in responses
            for i in range(response.omega.size)
        ],
        "peaks": summary["spectra"],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def check_text(report: dict) -> str:
    lines = []
    for section in sorted(report):
        for key in sorted(report[section]):
            value = report[section][key]
            if isinstance(value, str):
                rendered = value
            else:
                rendered = _fmt(value)
            lines.append(f"{section}.{key} = {rendered}")
    return "\n".join(lines) + "\n"


def oracle_text(report: dict) -> str:
    lines = []
    for section in sorted(report):
        for key in sorted(report[section]):
            value = report[section][key]
            rendered = value if isinstance(value, str) else _fmt(value)
            lines.append(f"{section}.{key} = {rendered}")
    lines.append("oracle.status = ok")
    return "\n".join(lines) + "\n"
