"""Build one-cycle qubit gates and dial them from dynamic to geometric.

A qubit driven by a rotating transverse field (strength omega0, rotation
rate omega) plus a static longitudinal field (omega1) returns to itself
after one drive period. The pair of cyclic states picks up opposite phases
+-gamma, which splits into a geometric part (half the solid angle swept on
the Bloch sphere) and a dynamic part (the time-integrated energy). Tuning
(omega, omega0, omega1) moves the split continuously while the gate itself
keeps the same functional form.
"""

import numpy as np

from geomgate import (
    DriveParams,
    big_omega,
    chi_angle,
    ideal_gate_u1,
    omega_for_beta,
    one_cycle_gate,
    phases,
    zero_dynamic_omega1,
)

# --- a generic drive point -------------------------------------------------

p = DriveParams(omega=2.0, omega0=1.0, omega1=1.5)
tri = phases(p)
print("generic drive point:", p)
print(f"  Omega = {big_omega(p):.6f}  chi = {chi_angle(p):.6f} rad")
print(f"  gamma = {tri.gamma:+.6f}  geometric {tri.gamma_g:+.6f}  dynamic {tri.gamma_d:+.6f}")
print("  one-cycle gate:")
print(np.array_str(one_cycle_gate(p), precision=6, suppress_small=True))

# the evolved gate coincides with the closed-form gate built from (gamma, chi)
U = one_cycle_gate(p)
V = ideal_gate_u1(tri.gamma, chi_angle(p))
print(f"  max |evolved - closed form| = {np.abs(U - V).max():.2e}")

# --- fixing the total phase --------------------------------------------------
# choose the drive rate so the total phase is exactly -1.5*pi, then slide
# omega1 along the scan axis: the split between geometric and dynamic moves,
# the total stays put.

beta = 1.5
omega0 = 1e5
print(f"\ntotal phase pinned at -{beta}*pi while the split moves:")
print(f"{'omega1/omega0':>14} {'gamma':>10} {'gamma_g':>10} {'gamma_d':>10}")
for offset in (0.0, 0.5, 1.0, 2.0, 4.0):
    omega1 = zero_dynamic_omega1(omega0, beta) + offset * omega0
    omega = omega_for_beta(omega0, omega1, beta)
    tri = phases(DriveParams(omega, omega0, omega1))
    print(f"{omega1 / omega0:14.4f} {tri.gamma:10.4f} {tri.gamma_g:10.4f} {tri.gamma_d:10.4f}")

print("\nthe first row is the purely geometric gate: gamma_d = 0 exactly on")
print("the line omega1 = omega0 * sqrt(eta/(1-eta)) with eta = 2*beta - beta^2.")
