"""Self-verification battery: closed forms, identities and oracle checks.

Every check compares the numerical pipeline against an independent
expression (an analytic closed form, an exact algebraic identity, or a
byte-level determinism property).  The CLI ``verify`` subcommand runs the
battery and exits nonzero on the first failure; the acceptance test suite
runs the same checks one by one.
"""

from __future__ import annotations

import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, TextIO

import numpy as np

from . import complementarity as comp
from . import fock, measures, qmat, unruh
from .qmat import DensityMatrix
from .report import PAIRS, QUBITS, PointReport, build_state, evaluate_state
from .sweep import SweepConfig, run_sweep

TIGHT_TOL = 1e-12
EXACT_TOL = 1e-14


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, deviation: float, bound: float, extra: str = "") -> CheckResult:
    note = f"max deviation {deviation:.2e} (bound {bound:g})"
    if extra:
        note = f"{extra}; {note}"
    return CheckResult(name, deviation <= bound, note)


def dual_closed_form(r1: float, r2: float) -> np.ndarray:
    """Two-observer reduced state in the basis |00>,|01>,|10>,|11>."""
    c1, s1 = np.cos(r1), np.sin(r1)
    c2, s2 = np.cos(r2), np.sin(r2)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = c1 * c1 * c2 * c2
    m[1, 1] = c1 * c1 * s2 * s2
    m[2, 2] = s1 * s1 * c2 * c2
    m[3, 3] = 1.0 + s1 * s1 * s2 * s2
    m[0, 3] = m[3, 0] = c1 * c2
    return m / 2.0


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish 2x2 unitary from direct angle parametrization."""
    theta = rng.uniform(0.0, np.pi / 2.0)
    alpha, beta, gamma = rng.uniform(0.0, 2.0 * np.pi, size=3)
    c, s = np.cos(theta), np.sin(theta)
    u = np.array(
        [
            [c * np.exp(1j * alpha), s * np.exp(1j * beta)],
            [-s * np.exp(-1j * beta), c * np.exp(-1j * alpha)],
        ]
    )
    return u * np.exp(1j * gamma)


class VerificationSuite:
    """Runs every check at its pinned tolerance.

    ``tol`` overrides the default 1e-10 class of tolerances only; the
    tighter 1e-12 / 1e-14 bounds are fixed properties of the algebra.
    """

    def __init__(
        self,
        tol: float = 1e-10,
        grid_points: int = 101,
        hermitian_samples: int = 1000,
        unitary_samples: int = 200,
        csv_steps: int = 33,
    ):
        self.tol = float(tol)
        self.grid_points = grid_points
        self.hermitian_samples = hermitian_samples
        self.unitary_samples = unitary_samples
        self.csv_steps = csv_steps
        self._grid: list[tuple[float, DensityMatrix, PointReport]] | None = None

    # -- shared grid ------------------------------------------------------

    def grid_data(self) -> list[tuple[float, DensityMatrix, PointReport]]:
        if self._grid is None:
            out = []
            for r in np.linspace(0.0, unruh.R_MAX, self.grid_points):
                rho = build_state(float(r))
                out.append((float(r), rho, evaluate_state(float(r), rho)))
            self._grid = out
        return self._grid

    # -- checks -------------------------------------------------------------

    def check_concurrence_closed_forms(self) -> CheckResult:
        worst = 0.0
        for r, _, rep in self.grid_data():
            pm = rep.measures.pairs
            worst = max(
                worst,
                abs(pm[("A", "I")].concurrence - np.cos(r)),
                abs(pm[("A", "II")].concurrence - np.sin(r)),
                abs(pm[("I", "II")].concurrence - np.sin(r) * np.cos(r)),
            )
        return _result("concurrence_closed_forms", worst, self.tol)

    def check_infinite_acceleration_values(self) -> CheckResult:
        r, _, rep = self.grid_data()[-1]
        ai = rep.measures.pairs[("A", "I")]
        iii = rep.measures.pairs[("I", "II")]
        tight = max(
            abs(ai.concurrence - 1.0 / np.sqrt(2.0)),
            abs(ai.log_negativity - np.log2(1.5)),
        )
        loose = max(
            abs(ai.mutual_information - 1.0),
            abs(iii.mutual_information - 1.5 * (2.0 - np.log2(3.0))),
        )
        deviation = max(tight, loose)
        passed = tight <= TIGHT_TOL and loose <= self.tol
        return CheckResult(
            "infinite_acceleration_values",
            passed,
            f"C/N deviation {tight:.2e} (bound {TIGHT_TOL:g}), "
            f"I deviation {loose:.2e} (bound {self.tol:g}); r={r:.6f}",
        )

    def check_partial_transpose_spectra(self) -> CheckResult:
        worst = 0.0
        for r, _, rep in self.grid_data():
            pm = rep.measures.pairs
            worst = max(
                worst,
                abs(pm[("A", "I")].min_pt_eigenvalue + np.cos(r) ** 2 / 2.0),
                abs(pm[("A", "II")].min_pt_eigenvalue + np.sin(r) ** 2 / 2.0),
                abs(
                    pm[("I", "II")].min_pt_eigenvalue
                    - (1.0 - np.sqrt(1.0 + np.sin(2.0 * r) ** 2)) / 4.0
                ),
            )
        return _result("partial_transpose_spectra", worst, self.tol)

    def check_residual_tangle(self) -> CheckResult:
        worst_res = 0.0
        worst_rest = 0.0
        for _, rho, _ in self.grid_data():
            for focus in QUBITS:
                worst_res = max(worst_res, abs(measures.residual_tangle(rho, focus)))
            worst_rest = max(
                worst_rest, abs(measures.one_to_rest_tangle(rho, "A") - 1.0)
            )
        passed = worst_res <= self.tol and worst_rest <= TIGHT_TOL
        return CheckResult(
            "residual_tangle",
            passed,
            f"residual {worst_res:.2e} (bound {self.tol:g}), "
            f"one-to-rest vs 1 {worst_rest:.2e} (bound {TIGHT_TOL:g})",
        )

    def check_complementarity_identities(self) -> CheckResult:
        worst_pair = worst_pure = worst_gap = 0.0
        for _, _, rep in self.grid_data():
            cr = rep.complementarity
            for pp in cr.pairs.values():
                worst_pair = max(worst_pair, abs(pp.two_qubit_residual))
                worst_gap = max(worst_gap, abs(pp.memms_gap))
            for res in cr.pure_residuals.values():
                worst_pure = max(worst_pure, abs(res))
        deviation = max(worst_pair, worst_pure, worst_gap)
        return _result(
            "complementarity_identities",
            deviation,
            self.tol,
            extra=(
                f"two-qubit {worst_pair:.2e}, pure {worst_pure:.2e}, "
                f"memms {worst_gap:.2e}"
            ),
        )

    def check_unruh_thermal_occupation(self) -> CheckResult:
        registry = fock.standard_registry()
        mode_i = registry.mode("I")
        worst = 0.0
        for omega in (0.0, 0.1, 0.5, 1.0, 2.0, 5.0):
            param = unruh.r_from_omega_ratio(omega)
            occupied = unruh.fd_occupation(param)
            x = 2.0 * np.pi * omega
            fermi_dirac = 1.0 / (np.exp(x) + 1.0)
            vacuum = fock.solve_minkowski_vacuum(param)
            expectation = fock.occupation_expectation(vacuum, mode_i)
            worst = max(
                worst, abs(occupied - fermi_dirac), abs(expectation - occupied)
            )
        return _result("unruh_thermal_occupation", worst, TIGHT_TOL)

    def check_fermionic_algebra(self) -> CheckResult:
        registry = fock.standard_registry()
        n = len(registry)
        basis = [
            fock.OccupationState.basis_state(registry, occ)
            for occ in np.ndindex(*(2,) * n)
        ]

        def anticommutator(op1, op2, state):
            return fock.apply_ladder(op1, fock.apply_ladder(op2, state)) + fock.apply_ladder(
                op2, fock.apply_ladder(op1, state)
            )

        # {a_i, a_j^dag} = delta_ij, {a_i, a_j} = 0, {a_i^dag, a_j^dag} = 0,
        # term by term on every basis state, with exact amplitudes.
        for i, mi in enumerate(registry.modes):
            for j, mj in enumerate(registry.modes):
                for state in basis:
                    mixed = anticommutator(
                        fock.annihilation(mi), fock.creation(mj), state
                    )
                    expected = state.terms() if i == j else {}
                    if mixed.terms() != expected:
                        return CheckResult(
                            "fermionic_algebra",
                            False,
                            f"anti-commutator {{a_{mi.name}, a_{mj.name}^dag}} "
                            f"!= {int(i == j)} on |{state!r}>",
                        )
                    for pair in (
                        (fock.annihilation(mi), fock.annihilation(mj)),
                        (fock.creation(mi), fock.creation(mj)),
                    ):
                        if not anticommutator(*pair, state).is_zero:
                            return CheckResult(
                                "fermionic_algebra",
                                False,
                                f"anti-commutator of same-kind operators on modes "
                                f"{mi.name},{mj.name} is nonzero",
                            )

        # nilpotency (a^dag)^2 = 0 on every basis state
        for mode in registry.modes:
            for state in basis:
                twice = fock.apply_ladder(
                    fock.creation(mode), fock.apply_ladder(fock.creation(mode), state)
                )
                if not twice.is_zero:
                    return CheckResult(
                        "fermionic_algebra", False, f"(a_{mode.name}^dag)^2 != 0"
                    )

        # derived vacuum is annihilated; one-particle state comes out exactly
        worst_residual = 0.0
        worst_one = 0.0
        one_ket = (0, 1, 0)
        for r in np.linspace(0.0, unruh.R_MAX, 50):
            vacuum = fock.solve_minkowski_vacuum(float(r))
            annihilator = fock.transformed_annihilator(registry, "I", "II", float(r))
            worst_residual = max(
                worst_residual, fock.apply_operator_poly(annihilator, vacuum).norm()
            )
            one = fock.minkowski_one_particle(float(r))
            deviation = abs(one.amplitude(one_ket) - 1.0)
            for occ, amp in one.terms().items():
                if occ != one_ket:
                    deviation = max(deviation, abs(amp))
            worst_one = max(worst_one, deviation)
        passed = worst_residual < EXACT_TOL and worst_one < EXACT_TOL
        return CheckResult(
            "fermionic_algebra",
            passed,
            f"vacuum residual {worst_residual:.2e}, one-particle deviation "
            f"{worst_one:.2e} (bound {EXACT_TOL:g})",
        )

    def check_dual_observers(self) -> CheckResult:
        worst_entry = 0.0
        for r1, r2 in ((np.pi / 4, np.pi / 4), (np.pi / 6, np.pi / 8), (0.0, np.pi / 5)):
            rho = unruh.dual_acceleration(r1, r2)
            worst_entry = max(
                worst_entry, np.max(np.abs(rho.matrix - dual_closed_form(r1, r2)))
            )
        rho = unruh.dual_acceleration(np.pi / 4, np.pi / 4)
        n_dev = abs(measures.log_negativity(rho) - np.log2(1.25))
        deviation = max(worst_entry, float(n_dev))
        return _result("dual_observers", deviation, TIGHT_TOL)

    def check_entropy_symmetries(self) -> CheckResult:
        worst = 0.0
        for _, rho, rep in self.grid_data():
            for k in QUBITS:
                rest = tuple(q for q in QUBITS if q != k)
                s_rest = measures.vn_entropy(qmat.partial_trace(rho, rest))
                worst = max(worst, abs(rep.measures.entropies[k] - s_rest))
        return _result("entropy_symmetries", worst, self.tol)

    def check_eigensolver_reconstruction(self) -> CheckResult:
        rng = np.random.default_rng(20260809)
        worst = 0.0
        for _ in range(self.hermitian_samples):
            n = int(rng.integers(2, qmat.MAX_DIM + 1))
            m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            m = (m + m.conj().T) / 2.0
            w, v = qmat.eig_hermitian(m)
            worst = max(
                worst,
                float(np.max(np.abs((v * w) @ v.conj().T - m))),
                float(np.max(np.abs(v.conj().T @ v - np.eye(n)))),
                abs(float(np.sum(w)) - float(np.trace(m).real)),
            )
        return _result(
            "eigensolver_reconstruction",
            worst,
            TIGHT_TOL,
            extra=f"{self.hermitian_samples} random Hermitian matrices",
        )

    def check_local_unitary_invariance(self) -> CheckResult:
        rng = np.random.default_rng(424242)
        worst = 0.0
        grid = self.grid_data()
        for k in range(self.unitary_samples):
            _, _, rep = grid[int(rng.integers(0, len(grid)))]
            r = rep.r
            rho = qmat.partial_trace(build_state(r), ("A", "I"))
            u = qmat.tensor(random_unitary_2x2(rng), random_unitary_2x2(rng))
            rotated = DensityMatrix(u @ rho.matrix @ u.conj().T, rho.labels)
            base = rep.measures.pairs[("A", "I")]
            worst = max(
                worst,
                abs(measures.concurrence(rotated) - base.concurrence),
                abs(measures.log_negativity(rotated) - base.log_negativity),
            )
        return _result(
            "local_unitary_invariance",
            worst,
            self.tol,
            extra=f"{self.unitary_samples} random local unitaries",
        )

    def check_partial_trace_composition(self) -> CheckResult:
        worst = 0.0
        for r, rho, _ in self.grid_data()[:: max(1, self.grid_points // 10)]:
            stepwise = qmat.partial_trace(qmat.partial_trace(rho, ("A", "I")), ("A",))
            direct = qmat.partial_trace(rho, ("A",))
            worst = max(worst, float(np.max(np.abs(stepwise.matrix - direct.matrix))))
        return _result("partial_trace_composition", worst, TIGHT_TOL)

    def check_csv_determinism(self) -> CheckResult:
        with tempfile.TemporaryDirectory() as tmp:
            out = []
            for sub in ("first", "second"):
                cfg = SweepConfig(
                    steps=self.csv_steps, out_dir=Path(tmp) / sub, plot=False
                )
                out.append({p.name: p.read_bytes() for p in run_sweep(cfg)})
            identical = out[0] == out[1]
        return CheckResult(
            "csv_determinism",
            identical,
            f"two {self.csv_steps}-step sweeps "
            + ("byte-identical" if identical else "differ"),
        )

    # ----------------------------------------------------------------------

    CHECKS: tuple[tuple[str, str], ...] = (
        ("1 concurrence closed forms", "check_concurrence_closed_forms"),
        ("2 infinite-acceleration values", "check_infinite_acceleration_values"),
        ("3 partial-transpose spectra", "check_partial_transpose_spectra"),
        ("4 residual tangle", "check_residual_tangle"),
        ("5 complementarity identities", "check_complementarity_identities"),
        ("6 thermal occupation", "check_unruh_thermal_occupation"),
        ("7 fermionic algebra", "check_fermionic_algebra"),
        ("8 dual observers", "check_dual_observers"),
        ("9 entropy symmetries", "check_entropy_symmetries"),
        ("10a eigensolver reconstruction", "check_eigensolver_reconstruction"),
        ("10b local-unitary invariance", "check_local_unitary_invariance"),
        ("10c partial-trace composition", "check_partial_trace_composition"),
        ("10d CSV determinism", "check_csv_determinism"),
    )

    def run(self) -> list[tuple[str, CheckResult]]:
        return [(label, getattr(self, method)()) for label, method in self.CHECKS]


def run_verification(tol: float = 1e-10, stream: TextIO | None = None) -> int:
    """Run the battery, print one line per check, return a process code."""
    stream = stream or sys.stdout
    suite = VerificationSuite(tol=tol)
    first_failure: str | None = None
    for label, result in suite.run():
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] {label:32s} {result.detail}", file=stream)
        if not result.passed and first_failure is None:
            first_failure = label
    if first_failure is None:
        print("verification passed", file=stream)
        return 0
    print(f"verification FAILED at check: {first_failure}", file=stream)
    return 1
