import numpy as np
import pytest

from magnonblockade import (
    HilbertSpec,
    SteadyStateError,
    SystemParams,
    annihilation,
    basis_density,
    build_liouvillian,
    creation,
    evolve,
    expectation,
    g2_zero,
    is_physical_state,
    liouvillian_matrix,
    occupation,
    propagate,
    steady_state,
    unvec,
    vec,
)
from conftest import random_density_matrix, random_hermitian, random_params


def test_vec_unvec_roundtrip(rng):
    x = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    np.testing.assert_array_equal(unvec(vec(x)), x)
    # column stacking: first d entries are the first column
    np.testing.assert_array_equal(vec(x)[:5], x[:, 0])


def test_vectorization_convention(rng):
    # A rho B maps to (B^T kron A) vec(rho) under column stacking
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    np.testing.assert_allclose(np.kron(b.T, a) @ vec(rho), vec(a @ rho @ b))


def test_single_quantum_decay_rate(spec6):
    m = annihilation(spec6)
    liouv = liouvillian_matrix(np.zeros((spec6.dim, spec6.dim), complex), [(0.7, m)])
    rho = basis_density(spec6, 1, 0)
    drho = unvec(liouv @ vec(rho))
    num = creation(spec6) @ m
    assert np.trace(drho @ num).real == pytest.approx(-0.7)


def test_zero_generator_is_zero_matrix(spec6):
    liouv = liouvillian_matrix(np.zeros((spec6.dim, spec6.dim), complex), [])
    assert np.all(liouv == 0)


def test_trace_annihilation_random(rng, spec6):
    for _ in range(10):
        liouv = build_liouvillian(random_params(rng, n_th=0.3), spec6)
        x = random_hermitian(rng, spec6.dim)
        assert abs(np.trace(unvec(liouv @ vec(x)))) < 1e-12


def test_hermiticity_preservation(rng, spec6):
    liouv = build_liouvillian(random_params(rng), spec6)
    for _ in range(10):
        x = random_hermitian(rng, spec6.dim)
        out = unvec(liouv @ vec(x))
        assert np.max(np.abs(out - out.conj().T)) < 1e-12


class TestSteadyState:
    def test_driven_decoupled_mode_is_coherent(self, spec6):
        p = SystemParams(g=0.0, kappa=0.5, delta=0.3, delta_f=-0.3,
                         omega_m_drive=0.01)
        rho = steady_state(build_liouvillian(p, spec6))
        assert g2_zero(rho, spec6) == pytest.approx(1.0, abs=1e-6)

    def test_thermal_equilibrium_occupation(self):
        spec = HilbertSpec(20)
        p = SystemParams(g=0.0, kappa=0.5, delta=0.0, delta_f=0.0, n_th=0.5)
        rho = steady_state(build_liouvillian(p, spec))
        n_magnon, n_qubit = occupation(rho, spec)
        assert n_magnon == pytest.approx(0.5, abs=1e-8)
        assert n_qubit == pytest.approx(0.0, abs=1e-12)

    def test_anharmonicity_dip_at_strong_coupling(self, spec6):
        # single drive, g = 20: the blockade dip sits at delta = g
        base = SystemParams(g=20.0, kappa=0.5, delta=20.0, delta_f=0.0,
                            omega_m_drive=0.01)
        at_dip = g2_zero(steady_state(build_liouvillian(base, spec6)), spec6)
        off_dip = g2_zero(
            steady_state(build_liouvillian(base.at(delta=15.0), spec6)), spec6
        )
        assert at_dip < 1e-2
        assert at_dip < off_dip

    def test_physicality(self, rng, spec6):
        for _ in range(10):
            rho = steady_state(build_liouvillian(random_params(rng), spec6))
            assert is_physical_state(rho)

    def test_no_dissipation_raises(self, spec6):
        p = SystemParams(g=20.0, kappa=0.0, delta=3.0, delta_f=1.0,
                         omega_m_drive=0.01)
        with pytest.raises(SteadyStateError):
            steady_state(build_liouvillian(p, spec6))


class TestEvolve:
    def test_exponential_decay_law(self, spec6):
        kappa = 0.5
        m = annihilation(spec6)
        liouv = liouvillian_matrix(
            np.zeros((spec6.dim, spec6.dim), complex), [(kappa, m)]
        )
        times = np.linspace(0.0, 10.0, 21)
        states = evolve(liouv, basis_density(spec6, 1, 0), times)
        num = creation(spec6) @ m
        for t, rho in zip(times, states):
            assert expectation(num, rho).real == pytest.approx(
                np.exp(-kappa * t), abs=1e-8
            )

    def test_steady_state_is_fixed_point(self, spec6):
        p = SystemParams(g=20.0, kappa=0.5, delta=22.8, delta_f=11.2,
                         omega_m_drive=0.01, omega_nv_drive=0.04)
        liouv = build_liouvillian(p, spec6)
        rho_ss = steady_state(liouv)
        times = np.linspace(0.0, 20.0, 9)  # t*kappa in [0, 10]
        for rho in evolve(liouv, rho_ss, times):
            assert np.max(np.abs(rho - rho_ss)) < 1e-8

    def test_time_zero_identity(self, rng, spec6):
        liouv = build_liouvillian(random_params(rng), spec6)
        rho0 = random_density_matrix(rng, spec6.dim)
        (out,) = evolve(liouv, rho0, [0.0])
        np.testing.assert_array_equal(out, rho0)

    def test_trace_and_positivity_along_trajectory(self, spec6):
        p = SystemParams(g=20.0, kappa=0.5, delta=20.0, delta_f=0.0,
                         omega_m_drive=0.01, n_th=0.1)
        liouv = build_liouvillian(p, spec6)
        states = propagate(liouv, basis_density(spec6, 0, 0), np.linspace(0, 10, 11))
        for rho in states:
            assert abs(np.trace(rho).real - 1.0) < 1e-9
            assert np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min() >= -1e-7

    def test_unsorted_times_rejected(self, spec6, rng):
        liouv = build_liouvillian(random_params(rng), spec6)
        rho0 = basis_density(spec6, 0, 0)
        with pytest.raises(ValueError):
            evolve(liouv, rho0, [1.0, 0.5])
        with pytest.raises(ValueError):
            evolve(liouv, rho0, [-1.0, 0.5])
