"""Exact time evolution of the driven qubit and ideal gate construction.

The lab-frame Hamiltonian is

    H(t) = (omega0*sx*cos(omega*t) + omega0*sy*sin(omega*t) + omega1*sz) / 2.

Transforming with R(t) = exp(-i*omega*t*sz/2) removes the time dependence,
leaving the constant generator H_rot = (omega0*sx + (omega1-omega)*sz)/2, so

    U(t) = R(t) * V(t),      V(t) = exp(-i*t*H_rot)
         = R(t) * [cos(Omega*t/2)*I - i*sin(Omega*t/2)*(omega0*sx + (omega1-omega)*sz)/Omega].

At one cycle (t = 2*pi/omega) R = -I and the gate's eigenvectors are the
tilted-axis states [cos(chi/2), sin(chi/2)] and [-sin(chi/2), cos(chi/2)]
with eigenvalues exp(+-i*gamma); no global-phase freedom is left, so evolved
and formula-built gates can be compared entrywise.

The Runge-Kutta and quadrature oracles here exist to cross-check the closed
forms; nothing else depends on them. They integrate in rescaled units
(frequencies divided by omega, one cycle = 2*pi) so that large-magnitude inputs
like omega0 = 1e5 stay well-conditioned.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import simpson

from .model import DriveParams, TwoQubitParams, shifted_target
from .qmath import COMPLEX, block_diag


def _cycle_entries(omega, w0, w1):
    """One-cycle gate entries (u00, u01, u11); u10 == u01.

    Accepts scalars or broadcastable arrays for w0/w1, which is what the
    Monte Carlo estimator leans on.
    """
    det = w1 - omega
    big = np.hypot(w0, det)
    a = np.pi * big / omega
    c, s = np.cos(a), np.sin(a)
    nz = det / big
    nx = w0 / big
    return -c + 1j * s * nz, 1j * s * nx, -c - 1j * s * nz


def _propagator_entries(omega, w0, w1, t):
    """Entries (u00, u01, u10, u11) of U(t) = R(t) V(t); t may be an array."""
    det = w1 - omega
    big = np.hypot(w0, det)
    half_rot = 0.5 * omega * t
    a = 0.5 * big * t
    c, s = np.cos(a), np.sin(a)
    v00 = c - 1j * s * det / big
    v01 = -1j * s * w0 / big
    v11 = c + 1j * s * det / big
    r = np.exp(-1j * half_rot)
    rc = np.conj(r)
    return r * v00, r * v01, rc * v01, rc * v11


def propagator(p: DriveParams, t: float) -> np.ndarray:
    """Evolution operator U(t) from t=0, exact (Rabi formula)."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    u00, u01, u10, u11 = _propagator_entries(p.omega, p.omega0, p.omega1, float(t))
    return np.array([[u00, u01], [u10, u11]], dtype=COMPLEX)


def rotating_frame_propagator(p: DriveParams, t: float) -> np.ndarray:
    """The constant-generator factor V(t) = exp(-i*t*H_rot).

    Satisfies V(t1+t2) = V(t1) @ V(t2); the full propagator is R(t) @ V(t).
    """
    det = p.omega1 - p.omega
    big = math.hypot(p.omega0, det)
    a = 0.5 * big * t
    c, s = math.cos(a), math.sin(a)
    return np.array(
        [
            [c - 1j * s * det / big, -1j * s * p.omega0 / big],
            [-1j * s * p.omega0 / big, c + 1j * s * det / big],
        ],
        dtype=COMPLEX,
    )


def one_cycle_gate(p: DriveParams) -> np.ndarray:
    """Gate after one full drive cycle, t = 2*pi/omega.

    Uses R(2*pi/omega) = -I exactly rather than evaluating exp(-i*pi), so
    the result matches ideal_gate_u1(gamma, chi) to machine precision.
    """
    u00, u01, u11 = _cycle_entries(p.omega, p.omega0, p.omega1)
    return np.array([[u00, u01], [u01, u11]], dtype=COMPLEX)


def ideal_gate_u1(gamma: float, chi: float) -> np.ndarray:
    """Gate with cyclic states on the chi-axis and eigenphases +-gamma.

    Diagonal entries exp(+i*gamma)*cos^2(chi/2) + exp(-i*gamma)*sin^2(chi/2)
    and its chi -> pi-chi partner; off-diagonal i*sin(chi)*sin(gamma).
    Unitary for all real (gamma, chi).
    """
    eg = np.exp(1j * gamma)
    emg = np.exp(-1j * gamma)
    c2 = math.cos(chi / 2.0) ** 2
    s2 = math.sin(chi / 2.0) ** 2
    off = 1j * math.sin(chi) * math.sin(gamma)
    return np.array(
        [[eg * c2 + emg * s2, off], [off, eg * s2 + emg * c2]], dtype=COMPLEX
    )


def ideal_gate_u2(p2: TwoQubitParams) -> np.ndarray:
    """Conditional 4x4 gate: one-cycle target gate per control state.

    Control in |0> applies the block at omega1 - J, control in |1> the block
    at omega1 + J; both run for the same cycle 2*pi/omega.
    """
    return block_diag(
        one_cycle_gate(shifted_target(p2, 0)),
        one_cycle_gate(shifted_target(p2, 1)),
    )


def _hamiltonian_entries(w0, w1, t):
    """Lab-frame H(t) entries (h00, h01); h10 = conj(h01), h11 = -h00."""
    h00 = 0.5 * w1
    h01 = 0.5 * w0 * (np.cos(t) - 1j * np.sin(t))
    return h00, h01


def ode_oracle(p: DriveParams, t: float, steps: int) -> np.ndarray:
    """Classic fixed-step RK4 integration of i dU/dt = H(t) U, U(0) = I.

    Fully independent of the closed forms above: integrates the raw
    time-dependent Hamiltonian (in rescaled units) and converges to
    propagator(p, t) at O(steps^-4).
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    w0 = p.omega0 / p.omega
    w1 = p.omega1 / p.omega
    t_end = p.omega * t
    u = np.eye(2, dtype=COMPLEX)
    dt = t_end / steps

    def rhs(uu, tt):
        h00, h01 = _hamiltonian_entries(w0, w1, tt)
        h = np.array([[h00, h01], [np.conj(h01), -h00]], dtype=COMPLEX)
        return -1j * (h @ uu)

    tt = 0.0
    for _ in range(steps):
        k1 = rhs(u, tt)
        k2 = rhs(u + 0.5 * dt * k1, tt + 0.5 * dt)
        k3 = rhs(u + 0.5 * dt * k2, tt + 0.5 * dt)
        k4 = rhs(u + dt * k3, tt + dt)
        u = u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        tt += dt
    return u


def ode_oracle_cycles(omega, omega0, omega1, steps: int) -> np.ndarray:
    """Batched one-cycle RK4 for many parameter triples at once.

    Same scheme as ode_oracle but vectorized over parameter arrays and fixed
    to t = one cycle; used for bulk validation against one_cycle_gate.
    Returns an array of shape (n, 2, 2).
    """
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    w0 = np.asarray(omega0, dtype=float) / omega
    w1 = np.asarray(omega1, dtype=float) / omega
    n = w0.shape[0]
    dt = 2.0 * np.pi / steps
    # trig of the drive phase on the half-step grid, shared by all triples
    grid = np.arange(2 * steps + 1) * (0.5 * dt)
    cg, sg = np.cos(grid), np.sin(grid)

    h00 = 0.5 * w1
    hx = 0.5 * w0
    u = [np.ones(n, dtype=COMPLEX), np.zeros(n, dtype=COMPLEX),
         np.zeros(n, dtype=COMPLEX), np.ones(n, dtype=COMPLEX)]

    def rhs(u0, u1, u2, u3, c, s):
        h01 = hx * (c - 1j * s)
        h10 = hx * (c + 1j * s)
        return (
            -1j * (h00 * u0 + h01 * u2),
            -1j * (h00 * u1 + h01 * u3),
            -1j * (h10 * u0 - h00 * u2),
            -1j * (h10 * u1 - h00 * u3),
        )

    for k in range(steps):
        c1, s1 = cg[2 * k], sg[2 * k]
        cm, sm = cg[2 * k + 1], sg[2 * k + 1]
        c2, s2 = cg[2 * k + 2], sg[2 * k + 2]
        k1 = rhs(*u, c1, s1)
        k2 = rhs(*(u[i] + 0.5 * dt * k1[i] for i in range(4)), cm, sm)
        k3 = rhs(*(u[i] + 0.5 * dt * k2[i] for i in range(4)), cm, sm)
        k4 = rhs(*(u[i] + dt * k3[i] for i in range(4)), c2, s2)
        u = [u[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
             for i in range(4)]
    return np.stack(u, axis=-1).reshape(n, 2, 2)


def dynamic_phase_oracle(p: DriveParams, steps: int) -> float:
    """Dynamic phase over one cycle by direct quadrature.

    Evaluates -integral of <psi(t)|H(t)|psi(t)> dt along the exact trajectory
    psi(t) = U(t) psi(0) started from the cyclic state
    [cos(chi/2), sin(chi/2)], using composite Simpson on a uniform grid.
    Independent check of the closed-form gamma_d.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    # rescaled units: omega=1, one cycle = 2*pi
    w0 = p.omega0 / p.omega
    w1 = p.omega1 / p.omega
    det = w1 - 1.0
    big = math.hypot(w0, det)
    chi = math.atan2(w0, det)
    psi0 = np.array([math.cos(chi / 2.0), math.sin(chi / 2.0)], dtype=COMPLEX)

    t = np.linspace(0.0, 2.0 * np.pi, steps + 1)
    u00, u01, u10, u11 = _propagator_entries(1.0, w0, w1, t)
    psi_a = u00 * psi0[0] + u01 * psi0[1]
    psi_b = u10 * psi0[0] + u11 * psi0[1]
    h00, h01 = _hamiltonian_entries(w0, w1, t)
    energy = (
        h00 * (np.abs(psi_a) ** 2 - np.abs(psi_b) ** 2)
        + 2.0 * np.real(np.conj(psi_a) * h01 * psi_b)
    )
    return float(-simpson(np.real(energy), x=t))
