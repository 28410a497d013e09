"""Polariton branches and Hopfield weights across the light cone.

Puts the exciton from exciton_band.py inside a planar cavity tuned to
exact resonance at normal incidence and sweeps the in-plane wavevector
through the avoided crossing.  Saves polariton_dispersion.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from latticepolariton import coupling_strength, preset_config
from latticepolariton.constants import angular_to_ev

HERE = pathlib.Path(__file__).resolve().parent

scenario = preset_config("figure4").build()
cavity = scenario.cavity
print(f"cavity length for exact zero-detuning resonance: "
      f"{cavity.length * 1e10:.4f} A")

f0 = coupling_strength(cavity, scenario.atom, scenario.lattice, 0.0)
print(f"light-matter coupling at k = 0: |f| = {abs(f0):.4e} rad/s")
print(f"vacuum Rabi splitting 2|f| = {angular_to_ev(2 * abs(f0)) * 1e3:.4f} meV")

k = np.linspace(0.0, 3.0e7, 400)
upper = np.empty_like(k)
lower = np.empty_like(k)
wx_up = np.empty_like(k)
wc_up = np.empty_like(k)
exciton = np.empty_like(k)
photon = np.empty_like(k)

for i, ki in enumerate(k):
    up, low = scenario.polariton_at(ki)
    upper[i], lower[i] = up.omega, low.omega
    wx_up[i], wc_up[i] = up.exciton_weight, up.photon_weight
    exciton[i] = scenario.exciton_frequency(ki)
    photon[i] = cavity.photon_dispersion(ki)

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 7), sharex=True,
                               gridspec_kw={"height_ratios": [2, 1]})

to_ev = lambda w: angular_to_ev(np.asarray(w))
ax1.plot(k * 1e-6, to_ev(photon), ":", color="gray", label="bare photon")
ax1.plot(k * 1e-6, to_ev(exciton), "--", color="gray", label="bare exciton")
ax1.plot(k * 1e-6, to_ev(upper), color="tab:blue", label="upper branch")
ax1.plot(k * 1e-6, to_ev(lower), color="tab:red", label="lower branch")
ax1.set_ylabel("frequency  (eV)")
ax1.set_title("avoided crossing at the exciton-photon resonance")
ax1.legend(loc="upper left")
ax1.grid(alpha=0.3)

ax2.plot(k * 1e-6, wx_up, color="tab:blue", label="upper: exciton fraction")
ax2.plot(k * 1e-6, wc_up, color="tab:red", label="upper: photon fraction")
ax2.axhline(0.5, color="gray", lw=0.6)
ax2.set_xlabel("in-plane wavevector  ($\\mu$m$^{-1}$)")
ax2.set_ylabel("Hopfield weight")
ax2.set_ylim(-0.05, 1.05)
ax2.legend()
ax2.grid(alpha=0.3)

fig.tight_layout()
out = HERE / "polariton_dispersion.png"
fig.savefig(out, dpi=150)
print(f"wrote {out}")

# At zero detuning the branches share the excitation equally.
up0, low0 = scenario.polariton_at(0.0)
print(f"\nat k = 0: upper branch exciton weight = {up0.exciton_weight:.12f}")
print(f"          lower branch exciton weight = {low0.exciton_weight:.12f}")
# Far outside the light cone the lower branch is almost pure exciton.
upN, lowN = scenario.polariton_at(3.0e7)
print(f"at k = 3e7 rad/m: lower branch exciton weight = {lowN.exciton_weight:.6f}")
