"""Lattice geometry: neighbor shells and allowed wavevectors."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from latticepolariton import (
    LatticeSpec,
    UnsupportedShellError,
    allowed_wavevectors,
    neighbor_shells,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(a=0.0)
    with pytest.raises(ValueError):
        LatticeSpec(a=1e-7, nx=0)
    with pytest.raises(ValueError):
        LatticeSpec(a=1e-7, ny=0)


def test_area():
    spec = LatticeSpec(a=2e-7, nx=4, ny=8)
    assert spec.n_sites == 32
    assert spec.area == pytest.approx(32 * 4e-14)


def test_shell_distances_and_offsets():
    spec = LatticeSpec(a=1e-7)
    shells = neighbor_shells(spec, max_shell=2)
    assert len(shells) == 2
    assert shells[0].distance == 1e-7
    assert shells[1].distance == pytest.approx(math.sqrt(2) * 1e-7, rel=1e-15)
    assert len(shells[0].offsets) == 4
    assert len(shells[1].offsets) == 4
    assert set(shells[0].offsets) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(shells[1].offsets) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_shells_sum_to_zero():
    spec = LatticeSpec(a=1e-7)
    for shell in neighbor_shells(spec, max_shell=2):
        total = np.sum(np.array(shell.offsets), axis=0)
        assert total.tolist() == [0, 0]


def test_unsupported_shell():
    spec = LatticeSpec(a=1e-7)
    with pytest.raises(UnsupportedShellError):
        neighbor_shells(spec, max_shell=3)
    with pytest.raises(UnsupportedShellError):
        neighbor_shells(spec, max_shell=0)


def test_wavevector_count_and_zero():
    spec = LatticeSpec(a=1e-7, nx=4, ny=3)
    kvecs = allowed_wavevectors(spec)
    assert kvecs.shape == (12, 2)
    assert np.any(np.all(kvecs == 0.0, axis=1))


def test_wavevector_spacing():
    spec = LatticeSpec(a=2e-7, nx=4, ny=4)
    kvecs = allowed_wavevectors(spec)
    step = 2.0 * math.pi / (4 * 2e-7)
    ints = kvecs / step
    assert np.allclose(ints, np.round(ints), atol=1e-12)
    # even count: half-open symmetric window [-n/2, n/2)
    assert np.min(np.round(ints[:, 0])) == -2
    assert np.max(np.round(ints[:, 0])) == 1


def test_wavevector_odd_symmetric():
    spec = LatticeSpec(a=1e-7, nx=5, ny=5)
    kvecs = allowed_wavevectors(spec)
    assert kvecs.shape == (25, 2)
    # odd count: closed symmetric window, so the set is inversion symmetric
    as_set = {(round(x, 6), round(y, 6)) for x, y in kvecs}
    flipped = {(-x if x != 0 else 0.0, -y if y != 0 else 0.0) for x, y in as_set}
    assert as_set == flipped


@given(st.integers(min_value=1, max_value=9), st.integers(min_value=1, max_value=9))
def test_wavevector_count_property(nx, ny):
    spec = LatticeSpec(a=1e-7, nx=nx, ny=ny)
    assert allowed_wavevectors(spec).shape == (nx * ny, 2)
