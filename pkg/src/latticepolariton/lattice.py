"""Square-lattice geometry: neighbor shells and the discrete Brillouin zone.

The lattice is a 2D square array of nx * ny sites with spacing a and
periodic boundaries.  Only the first two neighbor shells (side and diagonal)
are ever needed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedShellError

# Offset order inside each shell is fixed so downstream output is reproducible.
_SHELL_OFFSETS = (
    ((1, 0), (-1, 0), (0, 1), (0, -1)),
    ((1, 1), (1, -1), (-1, 1), (-1, -1)),
)


@dataclass(frozen=True)
class LatticeSpec:
    """Square lattice with spacing a (m) and nx * ny sites, periodic."""

    a: float
    nx: int = 32
    ny: int = 32

    def __post_init__(self) -> None:
        if not self.a > 0.0:
            raise ValueError("lattice spacing a must be > 0")
        if self.nx < 1 or self.ny < 1:
            raise ValueError("nx and ny must be >= 1")

    @property
    def n_sites(self) -> int:
        return self.nx * self.ny

    @property
    def area(self) -> float:
        """Quantization area nx * ny * a**2 in m**2."""
        return self.n_sites * self.a * self.a


@dataclass(frozen=True)
class NeighborShell:
    """One shell of equidistant neighbors: common distance plus offsets."""

    distance: float
    offsets: tuple[tuple[int, int], ...]


def neighbor_shells(spec: LatticeSpec, max_shell: int = 2) -> list[NeighborShell]:
    """First max_shell neighbor shells of the square lattice.

    Shell 1 holds the four side neighbors at distance a, shell 2 the four
    diagonal neighbors at distance sqrt(2)*a.  Offsets come in +/- pairs,
    so each shell sums to the zero vector.
    """
    if max_shell not in (1, 2):
        raise UnsupportedShellError(f"max_shell must be 1 or 2, got {max_shell}")
    shells = []
    for index in range(max_shell):
        distance = spec.a * math.sqrt(index + 1)
        shells.append(NeighborShell(distance=distance, offsets=_SHELL_OFFSETS[index]))
    return shells


def allowed_wavevectors(spec: LatticeSpec) -> np.ndarray:
    """Wavevectors compatible with periodic boundaries, shape (n_sites, 2).

    Components are n * 2*pi/(nx*a) with integer n running over a symmetric
    window around zero: for even nx the half-open range [-nx/2, nx/2), for
    odd nx the closed symmetric range.  Zero is always included and the
    count is exactly nx * ny.  Order is row-major over (ix, iy).
    """
    step_x = 2.0 * math.pi / (spec.nx * spec.a)
    step_y = 2.0 * math.pi / (spec.ny * spec.a)
    ix = np.arange(-(spec.nx // 2), spec.nx - spec.nx // 2)
    iy = np.arange(-(spec.ny // 2), spec.ny - spec.ny // 2)
    kx, ky = np.meshgrid(ix * step_x, iy * step_y, indexing="ij")
    return np.column_stack([kx.ravel(), ky.ravel()])
