"""Physical parameters and Hamiltonian / collapse-operator construction.

All rates and detunings are dimensionless ratios in units of gamma
(gamma = 2*pi x 1 MHz); the library never stores absolute frequencies
except in the magnetic-field helpers, which work in rad/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .hilbert import (
    HilbertSpec,
    annihilation,
    creation,
    spin_lowering,
    spin_raising,
)

GAMMA_RAD_PER_S = 2.0 * math.pi * 1.0e6  # the frequency unit, rad/s


@dataclass(frozen=True)
class SystemParams:
    """Rates and detunings of the driven spin-magnon system, in gamma units.

    kappa is shared by the magnon and the qubit decay channels.  kappa = 0
    is accepted for lossless-limit Hamiltonian construction, but the
    steady-state solver requires kappa > 0.
    """

    g: float
    kappa: float
    delta: float
    delta_f: float
    omega_m_drive: float = 0.0
    omega_nv_drive: float = 0.0
    n_th: float = 0.0

    def __post_init__(self) -> None:
        if self.kappa < 0:
            raise ValueError(f"kappa must be >= 0, got {self.kappa}")
        if self.n_th < 0:
            raise ValueError(f"n_th must be >= 0, got {self.n_th}")
        if self.omega_m_drive < 0 or self.omega_nv_drive < 0:
            raise ValueError("drive amplitudes must be >= 0")

    @property
    def drive_ratio(self) -> float:
        """lambda = Omega_NV / Omega_m; undefined when the magnon drive is off."""
        if self.omega_m_drive == 0:
            raise ValueError("drive ratio undefined for omega_m_drive = 0")
        return self.omega_nv_drive / self.omega_m_drive

    @classmethod
    def from_drive_ratio(
        cls,
        *,
        g: float,
        kappa: float,
        delta: float,
        delta_f: float,
        omega_m_drive: float,
        drive_ratio: float,
        n_th: float = 0.0,
    ) -> "SystemParams":
        if omega_m_drive <= 0:
            raise ValueError("drive-ratio input requires omega_m_drive > 0")
        return cls(
            g=g,
            kappa=kappa,
            delta=delta,
            delta_f=delta_f,
            omega_m_drive=omega_m_drive,
            omega_nv_drive=drive_ratio * omega_m_drive,
            n_th=n_th,
        )

    def at(self, **changes) -> "SystemParams":
        """Copy with the given fields replaced."""
        return replace(self, **changes)


@dataclass(frozen=True)
class PhysicalFieldParams:
    """External-field inputs, in SI units (tesla and rad/s)."""

    b_z: float
    d0: float = 2.0 * math.pi * 2.87e9  # zero-field splitting
    gamma_e: float = 2.0 * math.pi * 28.0e9  # gyromagnetic ratio per tesla

    def __post_init__(self) -> None:
        if self.b_z < 0:
            raise ValueError(f"b_z must be >= 0, got {self.b_z}")


def field_to_detunings(p: PhysicalFieldParams) -> tuple[float, float, float]:
    """(omega_m, omega_nv, delta_f) in rad/s for a given bias field.

    omega_m = |gamma_e| B_z, omega_nv = D0 - |gamma_e| B_z, and delta_f is
    half the magnon-qubit frequency detuning.  Divide by GAMMA_RAD_PER_S
    to obtain gamma units.
    """
    ge = abs(p.gamma_e)
    omega_m = ge * p.b_z
    omega_nv = p.d0 - ge * p.b_z
    delta_f = ge * p.b_z - p.d0 / 2.0
    return omega_m, omega_nv, delta_f


def build_h_eff(params: SystemParams, spec: HilbertSpec) -> np.ndarray:
    """Rotating-frame Hamiltonian with coupling and both drives; Hermitian."""
    m = annihilation(spec)
    md = creation(spec)
    sm = spin_lowering(spec)
    sp = spin_raising(spec)
    h = (params.delta + params.delta_f) * (md @ m)
    h += (params.delta - params.delta_f) * (sp @ sm)
    h += params.g * (m @ sp + md @ sm)
    h += params.omega_m_drive * (md + m)
    h += params.omega_nv_drive * (sp + sm)
    return h


def build_h_nonhermitian(params: SystemParams, spec: HilbertSpec) -> np.ndarray:
    """H_eff minus (i kappa / 2)(m'm + sigma+ sigma-), jump terms dropped."""
    m = annihilation(spec)
    sm = spin_lowering(spec)
    decay = creation(spec) @ m + spin_raising(spec) @ sm
    return build_h_eff(params, spec) - 0.5j * params.kappa * decay


def collapse_operators(
    params: SystemParams, spec: HilbertSpec
) -> list[tuple[float, np.ndarray]]:
    """(rate, operator) pairs under the D[o]rho = o rho o' - {o'o, rho}/2 convention.

    Magnon downward rate kappa*(n_th+1), upward kappa*n_th, qubit decay
    kappa with no thermal factor.  Zero-rate channels are omitted.
    """
    channels = [
        (params.kappa * (params.n_th + 1.0), annihilation(spec)),
        (params.kappa * params.n_th, creation(spec)),
        (params.kappa, spin_lowering(spec)),
    ]
    return [(rate, op) for rate, op in channels if rate > 0]


def dressed_levels(params: SystemParams, spec: HilbertSpec) -> dict[int, np.ndarray]:
    """Eigenvalues of the undriven detuned Hamiltonian per excitation sector.

    Sector N >= 1 spans {|N, g>, |N-1, e>} (the top sector only has
    |n_max, e>).  Drives are ignored: they mix sectors and break the
    ladder interpretation.  The one-excitation doublet splits by
    +-sqrt(g^2 + delta_f^2) about its mean, the two-excitation doublet
    by +-sqrt(delta_f^2 + 2 g^2).
    """
    dp = params.delta + params.delta_f
    dm = params.delta - params.delta_f
    levels: dict[int, np.ndarray] = {0: np.array([0.0])}
    for n in range(1, spec.n_max + 1):
        coupling = params.g * math.sqrt(n)
        block = np.array(
            [
                [n * dp, coupling],
                [coupling, (n - 1) * dp + dm],
            ]
        )
        levels[n] = np.linalg.eigvalsh(block)
    levels[spec.n_max + 1] = np.array([spec.n_max * dp + dm])
    return levels
