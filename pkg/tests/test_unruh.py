import numpy as np
import pytest

from diracent import fock, measures, qmat, unruh
from diracent.unruh import (
    AccelParam,
    NegativeOmegaError,
    PhysicalParams,
    UnsupportedStateError,
    accelerate,
    bell_state,
    dual_acceleration,
    fd_occupation,
    r_from_omega_ratio,
    unruh_temperature,
)
from oracles import rho_ai, rho_dual, rho_tripartite

# hbar * 9.80665 / (k_B * 2 pi c) with exact SI constants, evaluated with
# 30-digit arithmetic.
T_AT_ONE_G = 3.9766098387194957e-20


class TestParameterMaps:
    def test_zero_ratio_gives_maximal_angle(self):
        assert r_from_omega_ratio(0.0).r == pytest.approx(np.pi / 4, abs=1e-15)

    def test_infinite_ratio_gives_zero_angle(self):
        assert r_from_omega_ratio(float("inf")).r == 0.0

    def test_unit_ratio_satisfies_inversion_identity(self):
        param = r_from_omega_ratio(1.0)
        assert abs(np.tan(param.r) * np.exp(np.pi) - 1.0) < 1e-14
        assert param.r == pytest.approx(0.043187048524782126, abs=1e-15)

    def test_monotone_decreasing(self):
        rs = [r_from_omega_ratio(o).r for o in (0.0, 0.2, 1.0, 3.0, 10.0)]
        assert all(a > b for a, b in zip(rs, rs[1:]))

    def test_negative_ratio_rejected(self):
        with pytest.raises(NegativeOmegaError):
            r_from_omega_ratio(-0.5)

    def test_omega_ratio_round_trip(self):
        for omega in (0.0, 0.3, 2.5):
            assert r_from_omega_ratio(omega).omega_ratio() == omega
        assert AccelParam(0.2).omega_ratio() == pytest.approx(
            -np.log(np.tan(0.2)) / np.pi, abs=1e-15
        )
        assert AccelParam(0.0).omega_ratio() == float("inf")

    def test_angle_bounds_enforced(self):
        with pytest.raises(ValueError):
            AccelParam(np.pi / 2)
        with pytest.raises(ValueError):
            AccelParam(-1e-9)


class TestUnruhTemperature:
    def test_zero_acceleration(self):
        assert unruh_temperature(PhysicalParams(omega=1.0, accel=0.0)) == 0.0

    def test_algebraic_inversion_to_one_kelvin(self):
        accel = unruh.K_BOLTZMANN * 2.0 * np.pi * unruh.C_LIGHT / unruh.HBAR
        assert unruh_temperature(PhysicalParams(omega=1.0, accel=accel)) == pytest.approx(
            1.0, rel=1e-12
        )

    def test_one_g(self):
        t = unruh_temperature(PhysicalParams(omega=1.0, accel=9.80665))
        assert t == pytest.approx(T_AT_ONE_G, rel=1e-12)

    def test_omega_ratio_view(self):
        p = PhysicalParams(omega=2.0, accel=4.0)
        assert p.omega_ratio() == pytest.approx(2.0 * unruh.C_LIGHT / 4.0, rel=1e-15)
        assert PhysicalParams(omega=1.0, accel=0.0).omega_ratio() == float("inf")


class TestFermiDiracOccupation:
    def test_inertial_limit(self):
        assert fd_occupation(0.0) == 0.0

    def test_maximal_angle(self):
        assert fd_occupation(np.pi / 4) == pytest.approx(0.5, abs=1e-15)

    def test_intermediate_angle(self):
        assert fd_occupation(np.pi / 6) == pytest.approx(0.25, abs=1e-15)

    @pytest.mark.parametrize("omega", [0.0, 0.1, 0.5, 1.0, 2.0, 5.0])
    def test_thermal_identity_for_mapped_angles(self, omega):
        value = fd_occupation(r_from_omega_ratio(omega))
        expected = 1.0 / (np.exp(2.0 * np.pi * omega) + 1.0)
        assert abs(value - expected) < 1e-12

    def test_inconsistent_provenance_is_caught(self):
        bogus = AccelParam(0.3, omega=5.0)
        with pytest.raises(AssertionError):
            fd_occupation(bogus)

    def test_matches_mode_occupation_expectation(self):
        registry = fock.standard_registry()
        for r in (0.0, 0.3, np.pi / 4):
            vac = fock.solve_minkowski_vacuum(r)
            expectation = fock.occupation_expectation(vac, registry.mode("I"))
            assert abs(fd_occupation(r) - expectation) < 1e-14


class TestBellState:
    def test_norm(self):
        assert abs(bell_state().norm() - 1.0) < 1e-15

    def test_marginal_entropy_is_one_bit(self):
        rho = fock.to_density_matrix(bell_state(), ("A", "R"))
        marginal = qmat.partial_trace(rho, ("A",))
        assert measures.vn_entropy(marginal) == pytest.approx(1.0, abs=1e-12)

    def test_projector_concurrence_is_one(self):
        rho = fock.to_density_matrix(bell_state(), ("A", "R"))
        assert measures.concurrence(rho) == pytest.approx(1.0, abs=1e-12)


class TestAccelerate:
    @pytest.mark.parametrize("r", [0.0, np.pi / 8, np.pi / 6, np.pi / 4])
    def test_matches_closed_form(self, r):
        rho = accelerate(bell_state(), r)
        assert rho.labels == ("A", "I", "II")
        assert np.max(np.abs(rho.matrix - rho_tripartite(r))) < 1e-12

    def test_maximal_angle_corner_entry(self):
        rho = accelerate(bell_state(), np.pi / 4)
        assert rho.matrix[0b000, 0b110] == pytest.approx(1.0 / (2.0 * np.sqrt(2.0)), abs=1e-14)

    def test_zero_acceleration_embeds_bell_pair(self):
        rho = accelerate(bell_state(), 0.0)
        reduced = qmat.partial_trace(rho, ("A", "I"))
        bell = fock.to_density_matrix(bell_state(), ("A", "R"))
        assert np.max(np.abs(reduced.matrix - bell.matrix)) < 1e-14

    def test_projector_invariants_across_grid(self):
        for r in np.linspace(0.0, np.pi / 4, 101):
            rho = accelerate(bell_state(), float(r))
            assert abs(rho.trace() - 1.0) < 1e-12
            assert abs(rho.purity() - 1.0) < 1e-12
            assert np.max(np.abs(rho.matrix - rho.matrix.conj().T)) < 1e-12

    @pytest.mark.parametrize("r", [0.0, 0.35, np.pi / 4])
    def test_region_trace_matches_two_qubit_closed_form(self, r):
        rho = accelerate(bell_state(), r)
        reduced = qmat.partial_trace(rho, ("A", "I"))
        assert np.max(np.abs(reduced.matrix - rho_ai(r))) < 1e-12

    def test_vacuum_input_thermalizes_region_marginal(self):
        registry = unruh.bell_registry()
        both_empty = fock.OccupationState.basis_state(registry, (0, 0))
        for r in (0.0, 0.5, np.pi / 4):
            rho = accelerate(both_empty, r)
            marginal = qmat.partial_trace(rho, ("I",))
            expected = np.diag([np.cos(r) ** 2, np.sin(r) ** 2])
            assert np.max(np.abs(marginal.matrix - expected)) < 1e-14

    def test_rejects_foreign_states(self):
        tripartite_state = fock.solve_minkowski_vacuum(0.2)
        with pytest.raises(UnsupportedStateError):
            accelerate(tripartite_state, 0.2)


class TestDualAcceleration:
    @pytest.mark.parametrize(
        "r1,r2",
        [(0.0, 0.0), (np.pi / 6, np.pi / 8), (np.pi / 4, np.pi / 4), (0.1, np.pi / 5)],
    )
    def test_matches_closed_form(self, r1, r2):
        rho = dual_acceleration(r1, r2)
        assert rho.labels == ("A", "I")
        assert np.max(np.abs(rho.matrix - rho_dual(r1, r2))) < 1e-12

    def test_inertial_first_observer_reduces_to_single_case(self):
        for r in (0.0, 0.4, np.pi / 4):
            rho = dual_acceleration(0.0, r)
            assert np.max(np.abs(rho.matrix - rho_ai(r))) < 1e-12

    def test_inertial_second_observer_is_qubit_swap(self):
        r = 0.55
        rho = dual_acceleration(r, 0.0)
        swap = np.zeros((4, 4))
        for a in (0, 1):
            for b in (0, 1):
                swap[2 * b + a, 2 * a + b] = 1.0
        assert np.max(np.abs(rho.matrix - swap @ rho_ai(r) @ swap)) < 1e-12

    def test_negativity_at_maximal_angles(self):
        rho = dual_acceleration(np.pi / 4, np.pi / 4)
        assert measures.log_negativity(rho) == pytest.approx(np.log2(1.25), abs=1e-12)

    def test_negativity_closed_form_generic_angles(self):
        r = np.pi / 8
        rho = dual_acceleration(r, r)
        # log2(1 + cos^2 r1 cos^2 r2); frozen from 30-digit evaluation
        assert measures.log_negativity(rho) == pytest.approx(
            0.7895651654484808, abs=1e-12
        )
        rho6 = dual_acceleration(np.pi / 6, np.pi / 6)
        assert measures.log_negativity(rho6) == pytest.approx(
            np.log2(1.0 + (3.0 / 4.0) ** 2), abs=1e-12
        )

    def test_unit_trace(self):
        rho = dual_acceleration(0.3, 0.6)
        assert abs(rho.trace() - 1.0) < 1e-12
