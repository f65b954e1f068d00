"""Grid scans over control parameters, with four built-in scan presets.

Each preset resolves its grid into SweepPoints, evaluates the fidelity
estimator at every feasible point, and returns a SweepResult whose rows
carry the fidelity estimate plus the noise-free phases so fidelity/phase
correlations can be plotted without rerunning.

Determinism: a row's values depend only on (seed, point parameters, m, n,
noise spec, estimator options) - never on grid shape, point order, or the
worker count. All points of a sweep share one base random stream (common
random numbers), which makes curves smooth in the scan coordinate and
argmax localization stable.

Presets (default grids; all overridable):

* fig1: single-qubit, total phase fixed at -1.5*pi, axes (omega0,
  Delta/omega0) with omega1 = sqrt(3)*omega0 + Delta; delta0 = delta1 = 0.1.
* fig2: single-qubit, omega0 = 1e5 fixed, one curve per delta1 at
  delta0 = 0.1, axis Delta/omega0.
* fig3: conditional gate, log-spaced (omega0, omega1) plane at
  alpha = sqrt(3), control fixed to |0>, delta0 = delta1 = 0.1.
* fig4: conditional gate, omega1 = 60 fixed, one curve per alpha over an
  omega0 grid, control unfixed, delta0 = delta1 = 0.05.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from .fidelity import estimate_single, estimate_two_qubit
from .model import (
    DriveParams,
    InfeasibleParameters,
    TwoQubitParams,
    chi_angle,
    omega_for_beta,
    phases,
    shifted_target,
    two_qubit_from_alpha,
    zero_dynamic_omega1,
)
from .noise import NoiseSpec, RngStream

SINGLE_STREAM_TAG = 1
TWO_QUBIT_STREAM_TAG = 2

SINGLE_COLUMNS = [
    "omega0", "delta_over_omega0", "omega1", "omega", "feasible",
    "F_mean", "F_stderr", "gamma", "gamma_g", "gamma_d", "chi", "m", "n", "seed",
]
TWO_QUBIT_COLUMNS = SINGLE_COLUMNS + [
    "alpha", "J", "gamma_d_0", "gamma_d_1", "chi_0", "chi_1", "control_mode",
]


@dataclass(frozen=True)
class EstimatorConfig:
    """Sampling configuration shared by every point of a sweep."""

    m: int = 500
    n: int = 500
    spec: NoiseSpec = field(default_factory=lambda: NoiseSpec(0.1, 0.1))
    seed: int = 0
    gate_model: str = "phase"
    haar: bool = False
    control_mode: str = "unfixed"
    workers: int = 1


@dataclass(frozen=True)
class SweepPoint:
    """One grid point: named coordinates plus resolved parameters.

    params is None when the point violates a reality constraint; the point
    is still emitted, flagged infeasible, with the violation recorded.
    """

    coords: dict
    kind: str  # "single" | "two_qubit"
    params: DriveParams | TwoQubitParams | None
    feasible: bool = True
    reason: str | None = None


@dataclass
class SweepResult:
    columns: list
    rows: list  # list of dicts keyed by column name
    metadata: dict


def _single_point(omega0: float, delta_rel: float, beta: float, branch: str) -> SweepPoint:
    coords = {"omega0": omega0, "delta_over_omega0": delta_rel}
    omega1 = zero_dynamic_omega1(omega0, beta) + delta_rel * omega0
    try:
        omega = omega_for_beta(omega0, omega1, beta, branch=branch)
        params = DriveParams(omega=omega, omega0=omega0, omega1=omega1)
    except InfeasibleParameters as err:
        return SweepPoint(coords=coords, kind="single", params=None,
                          feasible=False, reason=str(err))
    return SweepPoint(coords=coords, kind="single", params=params)


def _two_qubit_point(omega0: float, omega1: float, alpha: float,
                     delta_rel: float | None = None) -> SweepPoint:
    coords = {"omega0": omega0, "omega1": omega1, "alpha": alpha}
    if delta_rel is not None:
        coords["delta_over_omega0"] = delta_rel
    try:
        params = two_qubit_from_alpha(omega0, omega1, alpha)
    except InfeasibleParameters as err:
        return SweepPoint(coords=coords, kind="two_qubit", params=None,
                          feasible=False, reason=str(err))
    return SweepPoint(coords=coords, kind="two_qubit", params=params)


def _empty_row(columns):
    return {c: None for c in columns}


def _eval_point(args) -> dict:
    point, cfg = args
    columns = SINGLE_COLUMNS if point.kind == "single" else TWO_QUBIT_COLUMNS
    row = _empty_row(columns)
    row.update({"m": cfg.m, "n": cfg.n, "seed": cfg.seed,
                "feasible": point.feasible})
    for key, val in point.coords.items():
        if key in row:
            row[key] = val
    if not point.feasible:
        return row
    if point.kind == "single":
        p = point.params
        row["omega0"], row["omega1"], row["omega"] = p.omega0, p.omega1, p.omega
        tri = phases(p)
        row["gamma"], row["gamma_g"], row["gamma_d"] = tri.gamma, tri.gamma_g, tri.gamma_d
        row["chi"] = chi_angle(p)
        rng = RngStream(cfg.seed).child(SINGLE_STREAM_TAG)
        est = estimate_single(p, cfg.spec, cfg.m, cfg.n, rng,
                              gate_model=cfg.gate_model, haar=cfg.haar)
    else:
        p2 = point.params
        t = p2.target
        row["omega0"], row["omega1"], row["omega"] = t.omega0, t.omega1, t.omega
        row["alpha"], row["J"] = p2.alpha, p2.coupling_j
        row["control_mode"] = cfg.control_mode
        lo, hi = shifted_target(p2, 0), shifted_target(p2, 1)
        tri0, tri1 = phases(lo), phases(hi)
        row["gamma"], row["gamma_g"], row["gamma_d"] = tri0.gamma, tri0.gamma_g, tri0.gamma_d
        row["chi"] = chi_angle(lo)
        row["gamma_d_0"], row["gamma_d_1"] = tri0.gamma_d, tri1.gamma_d
        row["chi_0"], row["chi_1"] = chi_angle(lo), chi_angle(hi)
        rng = RngStream(cfg.seed).child(TWO_QUBIT_STREAM_TAG)
        est = estimate_two_qubit(p2, cfg.spec, cfg.m, cfg.n, rng,
                                 control_mode=cfg.control_mode,
                                 gate_model=cfg.gate_model, haar=cfg.haar)
    row["F_mean"], row["F_stderr"] = est.mean, est.stderr
    row["n"] = est.n_states
    return row


def sweep_generic(points: list[SweepPoint], cfg: EstimatorConfig,
                  metadata: dict | None = None) -> SweepResult:
    """Evaluate the configured estimator at every point, in point order.

    With cfg.workers > 1 points are farmed out to a process pool; output is
    identical to the sequential run byte for byte.
    """
    if not points:
        raise ValueError("points must be non-empty")
    kinds = {p.kind for p in points}
    if len(kinds) != 1:
        raise ValueError(f"mixed point kinds in one sweep: {kinds}")
    columns = SINGLE_COLUMNS if points[0].kind == "single" else TWO_QUBIT_COLUMNS
    jobs = [(p, cfg) for p in points]
    if cfg.workers > 1:
        chunk = max(1, len(jobs) // (cfg.workers * 4))
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = list(pool.map(_eval_point, jobs, chunksize=chunk))
    else:
        rows = [_eval_point(job) for job in jobs]
    meta = {
        "version": __version__,
        "seed": cfg.seed,
        "m": cfg.m,
        "n": cfg.n,
        "delta0": cfg.spec.delta0,
        "delta1": cfg.spec.delta1,
        "independent": cfg.spec.independent,
        "gate_model": cfg.gate_model,
        "haar": cfg.haar,
        "workers": cfg.workers,
    }
    if points[0].kind == "two_qubit":
        meta["control_mode"] = cfg.control_mode
    if metadata:
        meta.update(metadata)
    return SweepResult(columns=columns, rows=rows, metadata=meta)


# ---------------------------------------------------------------------------
# presets

DEFAULT_FIG1_OMEGA0 = tuple((0.25 * k) * 1e5 for k in range(1, 9))
DEFAULT_FIG1_DELTA = tuple(np.linspace(0.0, 4.0, 41))
DEFAULT_FIG2_DELTA = tuple(np.linspace(0.0, 5.0, 51))
DEFAULT_FIG2_DELTA1 = (0.01, 0.02, 0.04, 0.06, 0.1)
DEFAULT_FIG3_OMEGA0 = tuple(np.logspace(math.log10(5.0), math.log10(50.0), 31))
DEFAULT_FIG3_OMEGA1 = tuple(np.logspace(math.log10(10.0), math.log10(100.0), 31))
DEFAULT_FIG4_OMEGA0 = tuple(np.linspace(2.0, 40.0, 39))
DEFAULT_FIG4_ALPHA = tuple(math.sqrt(a) for a in (3, 8, 15, 35, 143))


def sweep_fig1(omega0_grid=None, delta_grid=None, beta: float = 1.5,
               branch: str = "minus", cfg: EstimatorConfig | None = None) -> SweepResult:
    """Single-qubit scan over (omega0, Delta/omega0) at fixed total phase -beta*pi."""
    cfg = cfg or EstimatorConfig()
    omega0_grid = tuple(omega0_grid) if omega0_grid is not None else DEFAULT_FIG1_OMEGA0
    delta_grid = tuple(delta_grid) if delta_grid is not None else DEFAULT_FIG1_DELTA
    points = [
        _single_point(w0, d, beta, branch)
        for w0 in omega0_grid for d in delta_grid
    ]
    meta = {"preset": "fig1", "beta": beta, "branch": branch,
            "omega0_grid": list(omega0_grid), "delta_grid": list(delta_grid)}
    return sweep_generic(points, cfg, meta)


def sweep_fig2(delta_grid=None, delta1_list=None, omega0: float = 1e5,
               beta: float = 1.5, delta0: float = 0.1, branch: str = "minus",
               cfg: EstimatorConfig | None = None) -> dict:
    """Single-qubit curves versus Delta/omega0, one per delta1 value.

    Returns {delta1: SweepResult}. The phase columns are noise-independent,
    so they repeat across the returned results.
    """
    cfg = cfg or EstimatorConfig()
    delta_grid = tuple(delta_grid) if delta_grid is not None else DEFAULT_FIG2_DELTA
    delta1_list = tuple(delta1_list) if delta1_list is not None else DEFAULT_FIG2_DELTA1
    points = [_single_point(omega0, d, beta, branch) for d in delta_grid]
    out = {}
    for d1 in delta1_list:
        sub = replace(cfg, spec=NoiseSpec(delta0, d1, cfg.spec.independent))
        meta = {"preset": "fig2", "beta": beta, "branch": branch, "omega0": omega0,
                "delta_grid": list(delta_grid), "delta1_list": list(delta1_list)}
        out[d1] = sweep_generic(points, sub, meta)
    return out


def sweep_fig3(omega0_grid=None, omega1_grid=None, alpha: float = math.sqrt(3),
               cfg: EstimatorConfig | None = None) -> SweepResult:
    """Conditional-gate scan over a log-spaced (omega0, omega1) plane."""
    cfg = cfg or EstimatorConfig(control_mode="fixed0")
    omega0_grid = tuple(omega0_grid) if omega0_grid is not None else DEFAULT_FIG3_OMEGA0
    omega1_grid = tuple(omega1_grid) if omega1_grid is not None else DEFAULT_FIG3_OMEGA1
    points = [
        _two_qubit_point(w0, w1, alpha)
        for w0 in omega0_grid for w1 in omega1_grid
    ]
    meta = {"preset": "fig3", "alpha": alpha,
            "omega0_grid": list(omega0_grid), "omega1_grid": list(omega1_grid)}
    return sweep_generic(points, cfg, meta)


def sweep_fig4(omega0_grid=None, alpha_list=None, omega1: float = 60.0,
               cfg: EstimatorConfig | None = None) -> SweepResult:
    """Conditional-gate curves versus omega0 at fixed omega1, one per alpha."""
    cfg = cfg or EstimatorConfig(spec=NoiseSpec(0.05, 0.05), control_mode="unfixed")
    omega0_grid = tuple(omega0_grid) if omega0_grid is not None else DEFAULT_FIG4_OMEGA0
    alpha_list = tuple(alpha_list) if alpha_list is not None else DEFAULT_FIG4_ALPHA
    points = [
        _two_qubit_point(w0, omega1, a)
        for a in alpha_list for w0 in omega0_grid
    ]
    meta = {"preset": "fig4", "omega1": omega1, "alpha_list": list(alpha_list),
            "omega0_grid": list(omega0_grid)}
    return sweep_generic(points, cfg, meta)
