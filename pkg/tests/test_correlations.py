import numpy as np
import pytest

from magnonblockade import (
    HilbertSpec,
    SystemParams,
    VacuumStateError,
    basis_density,
    build_liouvillian,
    g2_tau,
    g2_zero,
    occupation,
    steady_state,
)
from conftest import random_params

CMB_UMB_POINT = SystemParams(
    g=20.0, kappa=0.5, delta=22.8, delta_f=11.2,
    omega_m_drive=0.01, omega_nv_drive=0.04,
)


class TestOccupation:
    def test_vacuum(self, spec6):
        assert occupation(basis_density(spec6, 0, 0), spec6) == (0.0, 0.0)

    def test_thermal_magnon_only(self):
        spec = HilbertSpec(20)
        p = SystemParams(g=0.0, kappa=0.5, delta=0.0, delta_f=0.0, n_th=0.5)
        n_magnon, n_qubit = occupation(steady_state(build_liouvillian(p, spec)), spec)
        assert n_magnon == pytest.approx(0.5, abs=1e-8)
        assert n_qubit == pytest.approx(0.0, abs=1e-12)

    def test_weak_drive_lorentzian_peak(self, spec6):
        # on resonance the driven damped mode holds (omega_m / (kappa/2))^2
        p = SystemParams(g=0.0, kappa=0.5, delta=0.4, delta_f=-0.4,
                         omega_m_drive=0.01)
        n_magnon, _ = occupation(steady_state(build_liouvillian(p, spec6)), spec6)
        assert n_magnon == pytest.approx((0.01 / 0.25) ** 2, rel=0.05)


class TestG2Zero:
    def test_coherent_statistics(self, spec6):
        p = SystemParams(g=0.0, kappa=0.5, delta=1.0, delta_f=0.5,
                         omega_m_drive=0.01)
        rho = steady_state(build_liouvillian(p, spec6))
        assert g2_zero(rho, spec6) == pytest.approx(1.0, abs=1e-6)

    def test_thermal_statistics(self):
        spec = HilbertSpec(20)
        p = SystemParams(g=0.0, kappa=0.5, delta=0.0, delta_f=0.0, n_th=0.5)
        rho = steady_state(build_liouvillian(p, spec))
        assert g2_zero(rho, spec) == pytest.approx(2.0, abs=1e-6)

    def test_deep_blockade_at_joint_point(self, spec6):
        rho = steady_state(build_liouvillian(CMB_UMB_POINT, spec6))
        assert g2_zero(rho, spec6) <= 1e-7

    def test_vacuum_state_rejected(self, spec6):
        with pytest.raises(VacuumStateError):
            g2_zero(basis_density(spec6, 0, 0), spec6)

    def test_non_negative_over_random_params(self, rng, spec6):
        for _ in range(15):
            rho = steady_state(build_liouvillian(random_params(rng), spec6))
            assert g2_zero(rho, spec6) >= 0.0


class TestG2Tau:
    def test_zero_delay_matches_equal_time(self, spec6):
        values = g2_tau(CMB_UMB_POINT, spec6, [0.0])
        rho_ss = steady_state(build_liouvillian(CMB_UMB_POINT, spec6))
        assert abs(values[0] - g2_zero(rho_ss, spec6)) < 1e-8

    def test_long_delay_factorizes(self, spec6):
        # t * kappa = 20
        p = SystemParams(g=20.0, kappa=0.5, delta=20.0, delta_f=0.0,
                         omega_m_drive=0.01, omega_nv_drive=0.04)
        values = g2_tau(p, spec6, [0.0, 40.0])
        assert values[-1] == pytest.approx(1.0, abs=0.05)

    def test_interference_blockade_oscillates_above_one(self, spec6):
        p = SystemParams(g=20.0, kappa=0.5, delta=24.8, delta_f=0.0,
                         omega_m_drive=0.01, omega_nv_drive=0.04)
        values = g2_tau(p, spec6, np.linspace(0.0, 10.0, 201))
        assert values.max() > 1.0

    def test_joint_point_never_dips_below_zero_delay(self, spec6):
        values = g2_tau(CMB_UMB_POINT, spec6, np.linspace(0.0, 10.0, 201))
        assert np.all(values[1:] > values[0])

    def test_kappa_zero_rejected(self, spec6):
        p = CMB_UMB_POINT.at(kappa=0.0)
        with pytest.raises(ValueError):
            g2_tau(p, spec6, [0.0, 1.0])
