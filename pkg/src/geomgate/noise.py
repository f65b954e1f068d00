"""Seedable, path-keyed sampling of control fluctuations and input states.

Reproducibility contract: every random quantity is drawn from an RngStream
identified by (seed, path). Streams with distinct paths are independent;
the same (seed, path) replays bit-identical draws regardless of evaluation
order, worker count or platform. Streams are built on numpy's counter-based
Philox generator keyed through SeedSequence, so there is no global RNG
state anywhere.

Control noise is quasi-static: one fluctuation per gate run, frozen over
the cycle. The default draw is a single relative deviation u ~ U[-1, 1]
per shot scaled by the per-channel half-widths,

    omega0' = omega0 * (1 + delta0*u),    omega1' = omega1 * (1 + delta1*u),

so each parameter is flatly distributed in [(1-delta)*w, (1+delta)*w] and
the two channels fluctuate in lock-step (one field-amplitude error seen by
both). Setting NoiseSpec(independent=True) draws one u per channel instead.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .qmath import COMPLEX


@dataclass(frozen=True)
class NoiseSpec:
    """Relative half-widths of the flat fluctuation distributions.

    delta0 applies to omega0, delta1 to the longitudinal frequency. With
    independent=False (default) the two channels share one draw per shot.
    """

    delta0: float
    delta1: float
    independent: bool = False

    def __post_init__(self):
        for name, d in (("delta0", self.delta0), ("delta1", self.delta1)):
            if not 0.0 <= d < 1.0:
                raise ValueError(f"{name} must satisfy 0 <= delta < 1, got {d}")

    @property
    def noiseless(self) -> bool:
        return self.delta0 == 0.0 and self.delta1 == 0.0


class RngStream:
    """One reproducible random stream, addressed by (seed, path).

    `child(*indices)` derives an independent sub-stream; drawing from a
    stream advances only that stream. Identical (seed, path) always replays
    the identical sequence.
    """

    __slots__ = ("seed", "path", "_gen")

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.path = tuple(int(i) for i in path)
        self._gen = None

    def child(self, *indices: int) -> "RngStream":
        return RngStream(self.seed, self.path + tuple(int(i) for i in indices))

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            # spawn_key (not entropy) carries the path: entropy tuples are
            # assembled into one integer, which silently drops trailing zeros
            ss = np.random.SeedSequence(entropy=self.seed, spawn_key=self.path)
            self._gen = np.random.Generator(np.random.Philox(ss))
        return self._gen

    def __repr__(self):
        return f"RngStream(seed={self.seed}, path={self.path})"


def float_key(x: float) -> int:
    """IEEE-754 bit pattern of x as an unsigned int, for keying streams by value."""
    return struct.unpack("<Q", struct.pack("<d", float(x)))[0]


def sample_fluctuated(nominal: float, delta: float, rng: RngStream) -> float:
    """One flat draw from [(1-delta)*nominal, (1+delta)*nominal].

    delta=0 returns the nominal exactly without consuming a draw.
    """
    if not 0.0 <= delta < 1.0:
        raise ValueError(f"delta must satisfy 0 <= delta < 1, got {delta}")
    if delta == 0.0:
        return float(nominal)
    u = rng.generator.uniform(-1.0, 1.0)
    return float(nominal) * (1.0 + delta * u)


def relative_draws(rng: RngStream, n: int) -> np.ndarray:
    """n relative deviations u ~ U[-1, 1), one per shot."""
    return rng.generator.uniform(-1.0, 1.0, n)


def _state_from_angles(theta, phi, partner):
    c = np.cos(0.5 * theta)
    s = np.sin(0.5 * theta)
    em = np.exp(-0.5j * phi)
    ep = np.exp(0.5j * phi)
    if partner:
        return np.array([-s * em, c * ep], dtype=COMPLEX)
    return np.array([c * em, s * ep], dtype=COMPLEX)


def sample_input_state(rng: RngStream, haar: bool = False) -> np.ndarray:
    """Random qubit state [cos(t/2)e^{-ip/2}, sin(t/2)e^{ip/2}] or its
    orthogonal partner [-sin(t/2)e^{-ip/2}, cos(t/2)e^{ip/2}].

    theta is uniform on [0, pi] (set haar=True for the cos-weighted sphere
    measure instead), phi uniform on [0, 2*pi], and the partner form is
    taken with probability 1/2. Draw order: theta, phi, form.
    """
    gen = rng.generator
    if haar:
        theta = float(np.arccos(1.0 - 2.0 * gen.random()))
    else:
        theta = gen.uniform(0.0, np.pi)
    phi = gen.uniform(0.0, 2.0 * np.pi)
    partner = bool(gen.integers(0, 2))
    return _state_from_angles(theta, phi, partner)


def sample_two_qubit_input(rng: RngStream, haar: bool = False) -> np.ndarray:
    """Product state (control sample) x (target sample) from one stream.

    Control is drawn first, then the target; both via sample_input_state.
    Basis order |00>, |01>, |10>, |11> with the first bit the control.
    """
    control = sample_input_state(rng, haar=haar)
    target = sample_input_state(rng, haar=haar)
    return np.kron(control, target)
