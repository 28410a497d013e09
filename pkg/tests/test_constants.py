"""Unit conversions and the constants bundle."""

import dataclasses

import pytest
from hypothesis import given, strategies as st

from latticepolariton import constants


def test_si_values():
    assert constants.HBAR == 1.054571817e-34
    assert constants.C == 2.99792458e8
    assert constants.EPS0 == 8.8541878128e-12
    assert constants.E_CHARGE == 1.602176634e-19


def test_bundle_frozen_and_positive():
    with pytest.raises(dataclasses.FrozenInstanceError):
        constants.CODATA.hbar = 1.0
    with pytest.raises(ValueError):
        constants.PhysicalConstants(hbar=0.0)
    with pytest.raises(ValueError):
        constants.PhysicalConstants(c=-1.0)


def test_ev_anchor_2ev():
    # frozen reference: 2 eV in angular frequency
    assert constants.ev_to_angular(2.0) == 3038534897619021.0


def test_ev_anchor_rb():
    assert constants.ev_to_angular(1.56) == 2370057220142836.5


def test_angstrom():
    assert constants.angstrom_to_m(1000.0) == pytest.approx(1.0e-7, rel=1e-15)
    assert constants.angstrom_to_m(3100.0) == pytest.approx(3.1e-7, rel=1e-15)


def test_dipole_unit():
    mu = constants.dipole_ea_to_cm(2.0)
    assert mu == 2.0 * 1.602176634e-19 * 1e-10


def test_sign_preserving():
    assert constants.ev_to_angular(-1.0) == -constants.ev_to_angular(1.0)
    assert constants.angular_to_ev(-2.0) == -constants.angular_to_ev(2.0)
    assert constants.ev_to_angular(0.0) == 0.0


@given(st.floats(min_value=1e-12, max_value=1e3))
def test_round_trip(energy_ev):
    back = constants.angular_to_ev(constants.ev_to_angular(energy_ev))
    assert back == pytest.approx(energy_ev, rel=1e-12)


@given(st.floats(min_value=1e-9, max_value=1e3), st.integers(min_value=1, max_value=8))
def test_linearity(energy_ev, factor):
    # scaling by small integers commutes with the conversion to a few ulp
    direct = constants.ev_to_angular(energy_ev * factor)
    scaled = factor * constants.ev_to_angular(energy_ev)
    assert direct == pytest.approx(scaled, rel=1e-14)
