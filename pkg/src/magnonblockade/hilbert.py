"""Operators on the truncated magnon + spin-qubit Hilbert space.

Basis ordering is magnon-major and part of the public contract:
basis index = fock_index * 2 + spin_index, with spin_index 0 for |g>
and 1 for |e>.  The magnon mode keeps Fock states 0..n_max, so the
total dimension is 2*(n_max+1).  Operators that raise the magnon
number truncate at n_max (components above n_max are dropped).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class HilbertSpec:
    """Truncated magnon Fock space tensored with a two-level spin."""

    n_max: int

    def __post_init__(self) -> None:
        if self.n_max < 2:
            raise ValueError(
                f"n_max must be >= 2 to represent two-excitation physics, got {self.n_max}"
            )

    @property
    def magnon_dim(self) -> int:
        return self.n_max + 1

    @property
    def dim(self) -> int:
        return 2 * (self.n_max + 1)

    def index(self, fock: int, spin: int) -> int:
        """Basis index of |fock, spin> (spin 0 = ground, 1 = excited)."""
        if not 0 <= fock <= self.n_max:
            raise ValueError(f"fock index {fock} outside 0..{self.n_max}")
        if spin not in (0, 1):
            raise ValueError(f"spin index must be 0 or 1, got {spin}")
        return fock * 2 + spin


def identity(spec: HilbertSpec) -> np.ndarray:
    return np.eye(spec.dim, dtype=complex)


def annihilation(spec: HilbertSpec) -> np.ndarray:
    """Magnon annihilation operator m (x) I on the full space."""
    n = np.arange(1, spec.magnon_dim)
    m = np.zeros((spec.magnon_dim, spec.magnon_dim), dtype=complex)
    m[n - 1, n] = np.sqrt(n)
    return np.kron(m, np.eye(2, dtype=complex))


def creation(spec: HilbertSpec) -> np.ndarray:
    """Magnon creation operator; truncates above n_max."""
    return dagger(annihilation(spec))


def spin_lowering(spec: HilbertSpec) -> np.ndarray:
    """I (x) sigma_minus, with sigma_minus|e> = |g>."""
    sm = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    return np.kron(np.eye(spec.magnon_dim, dtype=complex), sm)


def spin_raising(spec: HilbertSpec) -> np.ndarray:
    return dagger(spin_lowering(spec))


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T.copy()


def expectation(a: np.ndarray, rho: np.ndarray) -> complex:
    """Tr(rho A); raises on incompatible dimensions."""
    if a.shape != rho.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(
            f"incompatible spaces: operator shape {a.shape}, state shape {rho.shape}"
        )
    return complex(np.trace(rho @ a))


def basis_state(spec: HilbertSpec, fock: int, spin: int) -> np.ndarray:
    """Ket vector |fock, spin> in the documented basis ordering."""
    psi = np.zeros(spec.dim, dtype=complex)
    psi[spec.index(fock, spin)] = 1.0
    return psi


def basis_density(spec: HilbertSpec, fock: int, spin: int) -> np.ndarray:
    """Density matrix of the pure state |fock, spin>."""
    psi = basis_state(spec, fock, spin)
    return np.outer(psi, psi.conj())
