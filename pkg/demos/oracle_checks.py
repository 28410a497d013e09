"""Brute-force cross-checks of the closed-form results.

Two independent validations, no plots:

1. the closed-form exciton dispersion against full diagonalization of
   the periodic hopping matrix on a finite lattice, and
2. the analytic polariton branches against a dense eigensolver for the
   two-level exciton-photon block, on a batch of randomized inputs.

Both are also wired into the library as ``run_oracle`` (CLI: ``latpol
oracle``), which raises on any residual above 1e-10.
"""

import numpy as np

from latticepolariton import (
    ExcitonBand,
    LatticeSpec,
    TransferCouplings,
    allowed_wavevectors,
    branches,
    diagonalize_numeric,
    hopping_matrix_eigenvalues,
    preset_config,
)
from latticepolariton.runner import oracle_text, run_oracle

# --- check 1: band vs finite-lattice spectrum -------------------------
lattice = LatticeSpec(a=1e-7, nx=6, ny=6)
couplings = TransferCouplings(j1=2.4e8, j2=9.6e7)
band = ExcitonBand(omega_a=3.04e15, couplings=couplings, a=lattice.a,
                   mode="lattice-sum")

dense = np.sort(hopping_matrix_eigenvalues(lattice, band))
k = allowed_wavevectors(lattice)
closed = np.sort(band.dispersion(k[:, 0], k[:, 1]))
worst = np.max(np.abs(dense - closed) / np.abs(closed))
print(f"36-site hopping matrix vs closed form: worst rel residual {worst:.3e}")

# --- check 2: branch formulas vs dense eigensolver --------------------
rng = np.random.default_rng(7)
worst_omega = 0.0
worst_weight = 0.0
for _ in range(500):
    omega_x = 3e15 * (1 + 0.1 * rng.standard_normal())
    omega_c = omega_x + 1e13 * rng.standard_normal()
    f = 1e11 * rng.standard_normal() * np.exp(2j * np.pi * rng.random())
    upper, lower = branches(omega_x, omega_c, f)
    eigvals, weights = diagonalize_numeric(omega_x, omega_c, f)
    worst_omega = max(
        worst_omega,
        abs(lower.omega - eigvals[0]) / abs(eigvals[0]),
        abs(upper.omega - eigvals[1]) / abs(eigvals[1]),
    )
    worst_weight = max(
        worst_weight,
        abs(abs(lower.exciton_amp) - weights[0, 0]),
        abs(abs(upper.exciton_amp) - weights[0, 1]),
    )
print(f"branch frequencies vs eigensolver:     worst rel residual {worst_omega:.3e}")
print(f"Hopfield amplitudes vs eigenvectors:   worst abs residual {worst_weight:.3e}")

# --- the packaged oracle run -----------------------------------------
scenario = preset_config("figure4").build()
report = run_oracle(scenario)
print()
print(oracle_text(report))
