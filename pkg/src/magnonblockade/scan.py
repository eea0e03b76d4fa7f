"""Parameter sweeps: g2(0) grids and lines, thermal scans, g2(t) traces.

Scan points are independent; they are distributed over a process pool
and reassembled by index, so the output row order (delta_f-major, then
delta ascending) is deterministic regardless of the schedule, and a
parallel run reproduces the serial result exactly.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .correlations import VacuumStateError, g2_tau, g2_zero, occupation
from .analytic import AnalyticSingularityError, g2_analytic
from .hilbert import HilbertSpec, annihilation, creation, spin_lowering, spin_raising
from .liouville import (
    EVOLVE_ATOL,
    EVOLVE_RTOL,
    STEADY_STATE_RESIDUAL_TOL,
    SteadyStateError,
    build_liouvillian,
    liouvillian_matrix,
    steady_state,
)
from .model import SystemParams
from .version import __version__

LOG10_FLOOR = 1e-12  # solver precision floor, below the deepest physical dips


@dataclass(frozen=True)
class ScanGrid:
    """Rectangular (delta, delta_f) grid around a fixed parameter template.

    The delta and delta_f fields of the base params are ignored; each
    axis is (min, max, count) with count >= 2.
    """

    delta_axis: tuple[float, float, int]
    delta_f_axis: tuple[float, float, int]
    base: SystemParams
    n_max: int = 6
    include_analytic: bool = False

    def __post_init__(self) -> None:
        for name, (lo, hi, count) in (
            ("delta_axis", self.delta_axis),
            ("delta_f_axis", self.delta_f_axis),
        ):
            if count < 2:
                raise ValueError(f"{name} count must be >= 2, got {count}")
            if not lo < hi:
                raise ValueError(f"{name} needs min < max, got ({lo}, {hi})")

    def delta_values(self) -> np.ndarray:
        lo, hi, count = self.delta_axis
        return np.linspace(lo, hi, count)

    def delta_f_values(self) -> np.ndarray:
        lo, hi, count = self.delta_f_axis
        return np.linspace(lo, hi, count)


@dataclass
class ScanResult:
    """Ordered scan rows plus run metadata."""

    columns: tuple[str, ...]
    data: np.ndarray
    meta: dict = field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]


def _base_meta(params: SystemParams, n_max: int, workers: int) -> dict:
    return {
        "g": params.g,
        "kappa": params.kappa,
        "delta": params.delta,
        "delta_f": params.delta_f,
        "omega_m_drive": params.omega_m_drive,
        "omega_nv_drive": params.omega_nv_drive,
        "n_th": params.n_th,
        "n_max": n_max,
        "steady_state_residual_tol": STEADY_STATE_RESIDUAL_TOL,
        "evolve_rtol": EVOLVE_RTOL,
        "evolve_atol": EVOLVE_ATOL,
        "workers": workers,
        "version": __version__,
    }


def _log10_clamped(g2: float) -> float:
    if not np.isfinite(g2):
        return np.nan
    return float(np.log10(max(g2, LOG10_FLOOR)))


# per-process cache of the detuning-independent Liouvillian pieces; the
# Hamiltonian is linear in (delta, delta_f) so each point is two axpys
_LIOUV_CACHE: dict[tuple, tuple[np.ndarray, np.ndarray, np.ndarray, HilbertSpec]] = {}


def _cached_parts(key: tuple):
    parts = _LIOUV_CACHE.get(key)
    if parts is None:
        g, kappa, om, onv, n_th, n_max = key
        spec = HilbertSpec(n_max)
        base = SystemParams(
            g=g, kappa=kappa, delta=0.0, delta_f=0.0,
            omega_m_drive=om, omega_nv_drive=onv, n_th=n_th,
        )
        fixed = build_liouvillian(base, spec)
        n_m = creation(spec) @ annihilation(spec)
        n_q = spin_raising(spec) @ spin_lowering(spec)
        l_nm = liouvillian_matrix(n_m, [])
        l_nq = liouvillian_matrix(n_q, [])
        parts = (fixed, l_nm, l_nq, spec)
        _LIOUV_CACHE[key] = parts
    return parts


def _grid_point(task: tuple) -> tuple[int, float, float, float]:
    index, delta, delta_f, key, include_analytic = task
    fixed, l_nm, l_nq, spec = _cached_parts(key)
    liouv = fixed + (delta + delta_f) * l_nm + (delta - delta_f) * l_nq
    g, kappa, om, onv, n_th, _n_max = key
    try:
        rho = steady_state(liouv)
        g2 = g2_zero(rho, spec)
        n_magnon, _ = occupation(rho, spec)
    except (SteadyStateError, VacuumStateError):
        g2, n_magnon = np.nan, np.nan
    g2_ana = np.nan
    if include_analytic:
        params = SystemParams(
            g=g, kappa=kappa, delta=delta, delta_f=delta_f,
            omega_m_drive=om, omega_nv_drive=onv, n_th=n_th,
        )
        try:
            g2_ana = g2_analytic(params)
        except (AnalyticSingularityError, ValueError):
            g2_ana = np.nan
    return index, g2, g2_ana, n_magnon


def _run_tasks(func, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    chunk = max(1, len(tasks) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, tasks, chunksize=chunk))


def _assemble_point_rows(
    coords: list[tuple[float, float]], results: list, n_rows: int
) -> np.ndarray:
    data = np.full((n_rows, 6), np.nan)
    for index, g2, g2_ana, n_magnon in results:
        delta, delta_f = coords[index]
        data[index] = (
            delta, delta_f, g2, _log10_clamped(g2), g2_ana, n_magnon,
        )
    return data


POINT_COLUMNS = ("delta", "delta_f", "g2", "log10_g2", "g2_analytic", "n_magnon")


def scan_g2_grid(grid: ScanGrid, workers: int = 1) -> ScanResult:
    """Steady-state g2(0) over the full grid, delta_f-major row order."""
    start = time.perf_counter()
    base = grid.base
    key = (base.g, base.kappa, base.omega_m_drive, base.omega_nv_drive,
           base.n_th, grid.n_max)
    coords = [
        (float(d), float(df))
        for df in grid.delta_f_values()
        for d in grid.delta_values()
    ]
    tasks = [
        (i, d, df, key, grid.include_analytic) for i, (d, df) in enumerate(coords)
    ]
    results = _run_tasks(_grid_point, tasks, workers)
    data = _assemble_point_rows(coords, results, len(coords))
    meta = _base_meta(base, grid.n_max, workers)
    meta.update(
        scan="grid",
        delta_axis=list(grid.delta_axis),
        delta_f_axis=list(grid.delta_f_axis),
        include_analytic=grid.include_analytic,
        wall_time_s=time.perf_counter() - start,
    )
    return ScanResult(columns=POINT_COLUMNS, data=data, meta=meta)


def scan_g2_line(
    base: SystemParams,
    delta_axis: tuple[float, float, int],
    delta_f_values,
    n_max: int = 6,
    include_analytic: bool = False,
    workers: int = 1,
) -> ScanResult:
    """delta sweeps repeated for each delta_f in the given list."""
    start = time.perf_counter()
    lo, hi, count = delta_axis
    if count < 2 or not lo < hi:
        raise ValueError(f"invalid delta axis ({lo}, {hi}, {count})")
    deltas = np.linspace(lo, hi, count)
    key = (base.g, base.kappa, base.omega_m_drive, base.omega_nv_drive,
           base.n_th, n_max)
    coords = [(float(d), float(df)) for df in delta_f_values for d in deltas]
    tasks = [(i, d, df, key, include_analytic) for i, (d, df) in enumerate(coords)]
    results = _run_tasks(_grid_point, tasks, workers)
    data = _assemble_point_rows(coords, results, len(coords))
    meta = _base_meta(base, n_max, workers)
    meta.update(
        scan="line",
        delta_axis=list(delta_axis),
        delta_f_values=[float(v) for v in delta_f_values],
        include_analytic=include_analytic,
        wall_time_s=time.perf_counter() - start,
    )
    return ScanResult(columns=POINT_COLUMNS, data=data, meta=meta)


def thermal_scan(
    base: SystemParams, n_th_values, n_max: int = 6, workers: int = 1
) -> ScanResult:
    """g2(0) versus thermal occupation at the fixed (delta, delta_f) point.

    Shares the grid-point code path, so the n_th = 0 value is bitwise
    identical to the same point evaluated by a grid or line scan.
    """
    start = time.perf_counter()
    values = [float(v) for v in n_th_values]
    if any(v < 0 for v in values):
        raise ValueError("n_th values must be >= 0")
    tasks = []
    for i, n_th in enumerate(values):
        key = (base.g, base.kappa, base.omega_m_drive, base.omega_nv_drive,
               n_th, n_max)
        tasks.append((i, base.delta, base.delta_f, key, False))
    results = _run_tasks(_grid_point, tasks, workers)
    data = np.full((len(values), 4), np.nan)
    for index, g2, _ana, n_magnon in results:
        data[index] = (values[index], g2, _log10_clamped(g2), n_magnon)
    meta = _base_meta(base, n_max, workers)
    meta.update(
        scan="thermal",
        n_th_values=values,
        wall_time_s=time.perf_counter() - start,
    )
    return ScanResult(columns=("n_th", "g2", "log10_g2", "n_magnon"), data=data, meta=meta)


def g2t_trace(base: SystemParams, times, n_max: int = 6) -> ScanResult:
    """Delayed-correlation trace g2(t), times in units of 1/gamma."""
    start = time.perf_counter()
    times = np.asarray(times, dtype=float)
    spec = HilbertSpec(n_max)
    values = g2_tau(base, spec, times)
    data = np.column_stack(
        [times, values, [_log10_clamped(v) for v in values]]
    )
    meta = _base_meta(base, n_max, workers=1)
    meta.update(scan="g2t", wall_time_s=time.perf_counter() - start)
    return ScanResult(columns=("t", "g2", "log10_g2"), data=data, meta=meta)
