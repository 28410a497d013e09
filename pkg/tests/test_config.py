"""Configuration parsing, validation, presets, and scenario assembly."""

import json

import pytest

from latticepolariton import ConfigError, parse_config, preset_config
from latticepolariton.config import PRESETS
from latticepolariton.constants import ev_to_angular

MINIMAL = {
    "atom": {"omega_a_eV": 2.0, "dipole_eA": 2.0},
    "lattice": {"constant_A": 1000.0},
}


def _cfg(**overrides):
    raw = json.loads(json.dumps(MINIMAL))
    for section, entries in overrides.items():
        raw.setdefault(section, {}).update(entries)
    return parse_config(raw)


def test_minimal_defaults():
    config = _cfg()
    assert config.lattice.nx == 32
    assert config.cavity.length_A == "resonant"
    assert config.cavity.mode_index == 1
    assert config.exciton.dispersion_mode == "axial-nnn"
    assert config.exciton.geometry_mode == "collinear"
    assert config.exciton.frozen is True
    assert config.sweep.k_max_radpm == 3.0e7
    assert config.sweep.k_samples == 301
    assert config.sweep.omega_samples == 2001
    assert config.sweep.spectra_k_radpm == (0.0, 2.0e5, 4.0e5, 8.0e5, 1.6e6)


def test_parse_from_text():
    config = parse_config(json.dumps(MINIMAL))
    assert config.atom.omega_a_eV == 2.0


def test_invalid_json_text():
    with pytest.raises(ConfigError):
        parse_config("{not json")


def test_unknown_section():
    raw = json.loads(json.dumps(MINIMAL))
    raw["mirror"] = {}
    with pytest.raises(ConfigError, match="mirror"):
        parse_config(raw)


def test_unknown_key():
    with pytest.raises(ConfigError, match="atom.polarizability"):
        _cfg(atom={"polarizability": 1.0})


def test_missing_required():
    with pytest.raises(ConfigError, match="atom"):
        parse_config({"lattice": {"constant_A": 1000.0}})
    with pytest.raises(ConfigError, match="omega_a_eV"):
        parse_config({"atom": {"dipole_eA": 2.0}, "lattice": {"constant_A": 1000.0}})


def test_type_errors():
    with pytest.raises(ConfigError, match="omega_a_eV"):
        _cfg(atom={"omega_a_eV": "two"})
    with pytest.raises(ConfigError, match="nx"):
        _cfg(lattice={"nx": 2.5})
    with pytest.raises(ConfigError, match="frozen"):
        _cfg(exciton={"frozen": "yes"})


def test_range_errors():
    with pytest.raises(ConfigError):
        _cfg(atom={"omega_a_eV": -2.0})
    with pytest.raises(ConfigError):
        _cfg(lattice={"constant_A": 0.0})
    with pytest.raises(ConfigError):
        _cfg(cavity={"length_A": -3100.0})
    with pytest.raises(ConfigError):
        _cfg(cavity={"gamma_up_radps": -1.0})
    with pytest.raises(ConfigError):
        _cfg(sweep={"k_samples": 1})


def test_bad_mode_strings():
    with pytest.raises(ConfigError, match="dispersion_mode"):
        _cfg(exciton={"dispersion_mode": "quadratic"})
    with pytest.raises(ConfigError, match="geometry_mode"):
        _cfg(exciton={"geometry_mode": "tilted"})
    with pytest.raises(ConfigError, match="length_A"):
        _cfg(cavity={"length_A": "matched"})


def test_override_pair_enforced():
    with pytest.raises(ConfigError, match="j1_eV"):
        _cfg(exciton={"j1_eV": 1e-7})
    config = _cfg(exciton={"j1_eV": 1e-7, "j2_eV": 3e-8})
    assert config.exciton.j1_eV == 1e-7


def test_omega_window_pair_enforced():
    with pytest.raises(ConfigError, match="omega_min_eV"):
        _cfg(sweep={"omega_min_eV": 1.9})
    with pytest.raises(ConfigError, match="omega_max_eV"):
        _cfg(sweep={"omega_min_eV": 2.1, "omega_max_eV": 1.9})


def test_spectra_k_validation():
    with pytest.raises(ConfigError):
        _cfg(sweep={"spectra_k_radpm": []})
    with pytest.raises(ConfigError):
        _cfg(sweep={"spectra_k_radpm": [1e5, -1.0]})
    config = _cfg(sweep={"spectra_k_radpm": [0, 1e6]})
    assert config.sweep.spectra_k_radpm == (0.0, 1e6)


def test_round_trip_identity():
    config = _cfg(exciton={"zero_k_eV": 2.0}, cavity={"gamma_up_radps": 7.5e10})
    text = config.emit()
    again = parse_config(text)
    assert again == config
    assert again.emit() == text


def test_all_presets_parse_and_build():
    for name in PRESETS:
        scenario = preset_config(name).build()
        assert scenario.band.couplings.j1 != 0.0
        assert scenario.cavity.omega0 > 0.0


def test_unknown_preset():
    with pytest.raises(ConfigError, match="unknown preset"):
        preset_config("figure99")


def test_resonant_cavity_exact_through_config():
    scenario = preset_config("figure4").build()
    assert scenario.cavity.omega0 == scenario.omega_x
    assert scenario.omega_x == ev_to_angular(2.0)
    upper, lower = scenario.polariton_at(0.0)
    assert upper.exciton_weight == pytest.approx(0.5, abs=1e-15)
    assert lower.exciton_weight == pytest.approx(0.5, abs=1e-15)


def test_explicit_length_not_resonant():
    config = _cfg(cavity={"length_A": 3100.0}, exciton={"zero_k_eV": 2.0})
    scenario = config.build()
    assert scenario.cavity.length == pytest.approx(3.1e-7)
    assert scenario.cavity.omega0 != scenario.omega_x


def test_coupling_override_bypasses_geometry():
    config = _cfg(exciton={"j1_eV": 1e-7, "j2_eV": 3e-8})
    scenario = config.build()
    assert scenario.band.couplings.j1 == ev_to_angular(1e-7)
    assert scenario.band.couplings.j2 == ev_to_angular(3e-8)


def test_zero_k_override_pins_band_bottom():
    config = _cfg(exciton={"zero_k_eV": 2.0})
    scenario = config.build()
    assert scenario.omega_x == ev_to_angular(2.0)
    # band carries the matching bare frequency: bottom ~ omega_x to 1 ulp
    assert scenario.band.zero_k_frequency == pytest.approx(scenario.omega_x, rel=1e-15)


def test_frozen_flag_changes_polariton_input():
    frozen = _cfg(exciton={"zero_k_eV": 2.0}).build()
    live = _cfg(exciton={"zero_k_eV": 2.0, "frozen": False}).build()
    k = 2.0e7
    assert frozen.exciton_frequency(k) == frozen.omega_x
    assert live.exciton_frequency(k) != live.omega_x


def test_damping_assembled_from_blocks():
    config = _cfg(
        cavity={"gamma_up_radps": 1.5e11, "gamma_low_radps": 7.5e10},
        exciton={"gamma_ex_radps": 1.5e9},
    )
    scenario = config.build()
    assert scenario.damping.gamma_u == 1.5e11
    assert scenario.damping.gamma_l == 7.5e10
    assert scenario.damping.gamma_ex == 1.5e9
