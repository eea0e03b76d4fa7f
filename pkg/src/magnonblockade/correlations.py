"""Magnon statistics: occupations, g2(0), and delayed g2(t).

g2(t) uses the quantum regression theorem: the un-normalized object
m rho_ss m' is propagated under the same Liouvillian and normalized by
<m'm>_ss^2 once at readout.
"""

from __future__ import annotations

import numpy as np

from .hilbert import HilbertSpec, annihilation, creation, expectation, spin_lowering, spin_raising
from .liouville import build_liouvillian, propagate, steady_state
from .model import SystemParams

# well below any driven steady-state occupation of interest (~1e-3..1e-6)
# but above solver noise
OCCUPATION_FLOOR = 1e-14


class VacuumStateError(ValueError):
    """Correlation undefined: the magnon occupation is at the vacuum floor."""


def occupation(rho: np.ndarray, spec: HilbertSpec) -> tuple[float, float]:
    """(<m'm>, <sigma+ sigma->) of the state."""
    m = annihilation(spec)
    sm = spin_lowering(spec)
    n_magnon = expectation(creation(spec) @ m, rho)
    n_qubit = expectation(spin_raising(spec) @ sm, rho)
    return n_magnon.real, n_qubit.real


def g2_zero(rho: np.ndarray, spec: HilbertSpec) -> float:
    """Equal-time second-order correlation <m'm'mm> / <m'm>^2."""
    m = annihilation(spec)
    md = creation(spec)
    n = expectation(md @ m, rho).real
    if n < OCCUPATION_FLOOR:
        raise VacuumStateError(
            f"magnon occupation {n:.3e} below floor {OCCUPATION_FLOOR:.1e}; "
            "g2(0) undefined for a vacuum-dominated state"
        )
    numerator = expectation(md @ md @ m @ m, rho).real
    return numerator / n**2


def g2_tau(params: SystemParams, spec: HilbertSpec, times) -> np.ndarray:
    """Delayed correlation g2(t) at the steady state, times in 1/gamma.

    Forms B(0) = m rho_ss m', propagates it under the Liouvillian, and
    returns Tr[m'm B(t)] / <m'm>_ss^2 at each requested time.
    """
    if params.kappa <= 0:
        raise ValueError("g2(t) requires kappa > 0 for a steady state")
    liouv = build_liouvillian(params, spec)
    rho_ss = steady_state(liouv)
    m = annihilation(spec)
    md = creation(spec)
    n_ss = expectation(md @ m, rho_ss).real
    if n_ss < OCCUPATION_FLOOR:
        raise VacuumStateError(
            f"steady-state magnon occupation {n_ss:.3e} below floor; g2(t) undefined"
        )
    number_op = md @ m
    b = propagate(liouv, m @ rho_ss @ md, times)
    return np.array([np.trace(number_op @ bt).real / n_ss**2 for bt in b])
