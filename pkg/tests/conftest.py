import numpy as np
import pytest

from magnonblockade import HilbertSpec, SystemParams


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


@pytest.fixture
def spec6():
    return HilbertSpec(6)


def random_density_matrix(rng, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_hermitian(rng, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return 0.5 * (a + a.conj().T)


def random_params(rng, *, lam_choices=(0.0, 4.0), n_th: float = 0.0) -> SystemParams:
    lam = float(rng.choice(lam_choices))
    return SystemParams(
        g=float(rng.uniform(0.5, 20.0)),
        kappa=0.5,
        delta=float(rng.uniform(-60.0, 60.0)),
        delta_f=float(rng.uniform(-60.0, 60.0)),
        omega_m_drive=0.01,
        omega_nv_drive=lam * 0.01,
        n_th=n_th,
    )
