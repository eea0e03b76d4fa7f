"""Liouvillian construction, steady-state solve, and time evolution.

Vectorization is column-stacking: vec stacks columns, so
A rho B -> (B^T kron A) vec(rho).  The Liouvillian is a dense
d^2 x d^2 complex matrix; with the practical n_max <= 12 this stays
small enough that dense LU solves are milliseconds and deterministic.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import lu_factor, lu_solve

from .hilbert import HilbertSpec, dagger
from .model import SystemParams, build_h_eff, collapse_operators

STEADY_STATE_RESIDUAL_TOL = 1e-10
EVOLVE_RTOL = 1e-10
EVOLVE_ATOL = 1e-12
TRACE_DRIFT_TOL = 1e-9


class SteadyStateError(RuntimeError):
    """Steady-state solve failed or did not reach the residual tolerance."""


class EvolveError(RuntimeError):
    """Time integration failed; carries the time reached."""

    def __init__(self, message: str, t_failed: float):
        super().__init__(message)
        self.t_failed = t_failed


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization."""
    return rho.reshape(-1, order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    d = math.isqrt(v.size)
    if d * d != v.size:
        raise ValueError(f"vector length {v.size} is not a perfect square")
    return v.reshape((d, d), order="F")


def liouvillian_matrix(
    h: np.ndarray, channels: list[tuple[float, np.ndarray]]
) -> np.ndarray:
    """Matrix of rho -> -i[h, rho] + sum_k rate_k D[o_k] rho on vec(rho)."""
    d = h.shape[0]
    eye = np.eye(d, dtype=complex)
    liouv = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for rate, op in channels:
        od = dagger(op)
        odo = od @ op
        liouv += rate * (
            np.kron(op.conj(), op)
            - 0.5 * np.kron(eye, odo)
            - 0.5 * np.kron(odo.T, eye)
        )
    return liouv


def build_liouvillian(params: SystemParams, spec: HilbertSpec) -> np.ndarray:
    return liouvillian_matrix(
        build_h_eff(params, spec), collapse_operators(params, spec)
    )


def steady_state(liouv: np.ndarray) -> np.ndarray:
    """Unique steady state of the Liouvillian, trace-normalized.

    Solves the augmented system in which the first row of L is replaced
    by the trace constraint, via dense LU with one step of iterative
    refinement.  Raises SteadyStateError if the system is singular
    beyond the expected one-dimensional null space or the residual
    ||L vec(rho)|| / ||L||_F exceeds the tolerance.
    """
    n = liouv.shape[0]
    d = math.isqrt(n)
    aug = liouv.copy()
    trace_row = np.zeros(n, dtype=complex)
    trace_row[np.arange(d) * d + np.arange(d)] = 1.0
    aug[0, :] = trace_row
    rhs = np.zeros(n, dtype=complex)
    rhs[0] = 1.0

    try:
        lu, piv = lu_factor(aug)
    except np.linalg.LinAlgError as err:
        raise SteadyStateError(f"augmented steady-state system is singular: {err}")
    x = lu_solve((lu, piv), rhs)
    # one refinement pass sharpens the deep-blockade tail of rho
    x += lu_solve((lu, piv), rhs - aug @ x)

    if not np.all(np.isfinite(x)):
        raise SteadyStateError(
            "steady-state solve produced non-finite entries "
            "(null space not one-dimensional?)"
        )
    norm_l = np.linalg.norm(liouv)
    residual = np.linalg.norm(liouv @ x) / norm_l if norm_l > 0 else 0.0
    if residual > STEADY_STATE_RESIDUAL_TOL:
        raise SteadyStateError(
            f"steady-state residual {residual:.3e} exceeds "
            f"{STEADY_STATE_RESIDUAL_TOL:.1e}"
        )
    rho = unvec(x)
    rho = 0.5 * (rho + rho.conj().T)
    rho = rho / np.trace(rho).real
    # a degenerate null space (e.g. no dissipation at all) can satisfy the
    # residual check with a non-positive stationary matrix; reject it
    if float(np.linalg.eigvalsh(rho).min()) < -1e-8:
        raise SteadyStateError(
            "stationary solution is not positive semidefinite "
            "(degenerate null space or missing dissipation)"
        )
    return rho


def propagate(liouv: np.ndarray, x0: np.ndarray, times) -> list[np.ndarray]:
    """Integrate dX/dt = L(X) for an arbitrary matrix X, no trace handling.

    Adaptive high-order Runge-Kutta on the vectorized state; used both
    for density matrices and for regression-theorem operators.
    """
    times = np.asarray(times, dtype=float)
    if times.size == 0:
        return []
    if np.any(times < 0) or np.any(np.diff(times) < 0):
        raise ValueError("times must be sorted and non-negative")
    out: list[np.ndarray | None] = [None] * times.size
    idx = 0
    while idx < times.size and times[idx] == 0.0:
        out[idx] = x0.copy()
        idx += 1
    if idx < times.size:
        sol = solve_ivp(
            lambda _t, y: liouv @ y,
            (0.0, times[-1]),
            vec(x0).astype(complex),
            t_eval=times[idx:],
            method="DOP853",
            rtol=EVOLVE_RTOL,
            atol=EVOLVE_ATOL,
        )
        if not sol.success:
            t_reached = float(sol.t[-1]) if sol.t.size else 0.0
            raise EvolveError(
                f"integration failed at t = {t_reached}: {sol.message}", t_reached
            )
        for k in range(sol.t.size):
            out[idx + k] = unvec(sol.y[:, k])
    return out  # type: ignore[return-value]


def evolve(liouv: np.ndarray, rho0: np.ndarray, times) -> list[np.ndarray]:
    """Density-matrix trajectory rho(t_i) from rho0 under the Liouvillian.

    Trace is renormalized at output points only when the drift exceeds
    TRACE_DRIFT_TOL, in which case a warning reports the drift.
    """
    states = propagate(liouv, rho0, times)
    result = []
    for t, rho in zip(np.asarray(times, dtype=float), states):
        drift = abs(np.trace(rho).real - 1.0)
        if drift > TRACE_DRIFT_TOL:
            warnings.warn(
                f"trace drift {drift:.3e} at t = {t}; renormalizing", stacklevel=2
            )
            rho = rho / np.trace(rho).real
        result.append(rho)
    return result


def is_physical_state(
    rho: np.ndarray,
    hermiticity_tol: float = 1e-10,
    trace_tol: float = 1e-10,
    eigen_floor: float = -1e-8,
) -> bool:
    """Hermitian, unit-trace, positive-semidefinite within tolerances."""
    if np.max(np.abs(rho - rho.conj().T)) > hermiticity_tol:
        return False
    if abs(np.trace(rho).real - 1.0) > trace_tol:
        return False
    return float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()) >= eigen_floor
