"""Monte Carlo gate fidelity under quasi-static control-field noise.

Each shot freezes one random field deviation for the whole cycle: a single
relative draw u ~ U[-1,1] scales omega0 by (1 + delta0*u) and omega1 by
(1 + delta1*u). Fidelity compares the noisy gate to the nominal one over
random input states. The scan below holds the total phase at -1.5*pi and
moves the gate from geometric (offset 0) toward dynamic (large offset):
with equal noise on both channels the purely geometric point is the most
robust, while with much quieter omega1 noise the dynamic-dominated end
wins - the dip in between is where the gate is most fragile.
"""

import numpy as np

from geomgate import (
    DriveParams,
    NoiseSpec,
    RngStream,
    estimate_single,
    omega_for_beta,
    zero_dynamic_omega1,
)

beta, omega0 = 1.5, 1e5
offsets = np.linspace(0.0, 5.0, 11)
m = n = 300
seed = 42

print(f"average fidelity, m={m} noise shots x n={n} states, seed={seed}")
print(f"{'offset/omega0':>14} {'delta1=0.10':>22} {'delta1=0.01':>22}")
for off in offsets:
    omega1 = zero_dynamic_omega1(omega0, beta) + off * omega0
    p = DriveParams(omega_for_beta(omega0, omega1, beta), omega0, omega1)
    cells = []
    for delta1 in (0.10, 0.01):
        est = estimate_single(p, NoiseSpec(0.10, delta1), m, n, RngStream(seed).child(1))
        cells.append(f"{est.mean:.6f} +- {est.stderr:.1e}")
    print(f"{off:14.1f} {cells[0]:>22} {cells[1]:>22}")

print("""
reading the table:
  delta1=0.10 column peaks at offset 0 (the geometric gate) and decays;
  delta1=0.01 column dips near offset ~ 1 and recovers past its offset-0
  value at large offsets, where the gate is dominated by dynamic phase.
All rows reuse the same draws (common random numbers), so the curves are
smooth and rerunning with the same seed reproduces every digit.""")
