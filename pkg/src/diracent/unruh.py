"""Scenario construction for the accelerated-observer entanglement problem.

One inertial party and one uniformly accelerated party share a maximally
entangled pair of fermionic field modes.  The acceleration enters through
a single mixing angle ``r`` in [0, pi/4]; the frequency ratio Omega, the
proper acceleration and the associated thermal temperature are derived
views of it.  ``r = pi/4`` is the infinite-acceleration boundary value.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fock, qmat
from .fock import (
    MINKOWSKI,
    PARTICLE,
    ANTIPARTICLE,
    RINDLER_I,
    RINDLER_II,
    Mode,
    ModeRegistry,
    OccupationState,
)

R_MAX = np.pi / 4

# Exact SI defining constants (2019 redefinition); hbar follows from h.
C_LIGHT = 299792458.0
PLANCK_H = 6.62607015e-34
HBAR = PLANCK_H / (2.0 * np.pi)
K_BOLTZMANN = 1.380649e-23


class NegativeOmegaError(ValueError):
    """Frequency ratio must be nonnegative."""


class UnsupportedStateError(ValueError):
    """Input state is not a two-mode inertial particle state."""


@dataclass(frozen=True)
class AccelParam:
    """Mixing angle ``r`` with optional record of the frequency ratio it
    was derived from (used to cross-check the thermal occupation)."""

    r: float
    omega: float | None = None

    def __post_init__(self) -> None:
        r = float(self.r)
        if not 0.0 <= r <= R_MAX:
            raise ValueError(f"r={r!r} outside [0, pi/4]")
        object.__setattr__(self, "r", r)
        if self.omega is not None:
            omega = float(self.omega)
            if omega < 0.0 and not np.isnan(omega):
                raise NegativeOmegaError(f"omega={omega!r} is negative")
            object.__setattr__(self, "omega", omega)

    @classmethod
    def from_omega_ratio(cls, omega: float) -> "AccelParam":
        omega = float(omega)
        if omega < 0.0 or np.isnan(omega):
            raise NegativeOmegaError(f"omega={omega!r} must be >= 0")
        # tan r = exp(-pi * Omega); Omega -> inf gives r -> 0 exactly.
        return cls(float(np.arctan(np.exp(-np.pi * omega))), omega=omega)

    def omega_ratio(self) -> float:
        """Inverse map Omega = -ln(tan r) / pi; infinite at r = 0."""
        if self.omega is not None:
            return self.omega
        if self.r == 0.0:
            return float("inf")
        return float(-np.log(np.tan(self.r)) / np.pi)


def r_from_omega_ratio(omega: float) -> AccelParam:
    """Map the dimensionless frequency ratio Omega to the mixing angle."""
    return AccelParam.from_omega_ratio(omega)


def angle_of(value) -> float:
    """Accept an :class:`AccelParam` or bare float and return ``r``."""
    r = float(getattr(value, "r", value))
    if not 0.0 <= r <= R_MAX:
        raise ValueError(f"r={r!r} outside [0, pi/4]")
    return r


@dataclass(frozen=True)
class PhysicalParams:
    """Mode frequency and proper acceleration in SI units."""

    omega: float
    accel: float
    c: float = C_LIGHT
    hbar: float = HBAR
    k_b: float = K_BOLTZMANN

    def __post_init__(self) -> None:
        if self.omega <= 0.0:
            raise ValueError("omega must be positive")
        if self.accel < 0.0:
            raise ValueError("acceleration must be nonnegative")

    def omega_ratio(self) -> float:
        """Dimensionless Omega = omega / (a/c); infinite at zero acceleration."""
        if self.accel == 0.0:
            return float("inf")
        return self.omega * self.c / self.accel


def unruh_temperature(params: PhysicalParams) -> float:
    """Thermal temperature seen by the accelerated observer, in kelvin."""
    return params.hbar * params.accel / (params.k_b * 2.0 * np.pi * params.c)


def _fd_expected(omega: float) -> float:
    if np.isinf(omega):
        return 0.0
    x = 2.0 * np.pi * omega
    if x > 700.0:  # exp would overflow; the occupation is zero to all digits
        return 0.0
    return 1.0 / (np.exp(x) + 1.0)


def fd_occupation(r) -> float:
    """Mean particle number sin^2(r) registered in the inertial vacuum.

    When ``r`` carries the frequency ratio it was derived from, the value
    is asserted against the Fermi-Dirac form 1/(exp(2 pi Omega) + 1).
    """
    angle = angle_of(r)
    value = float(np.sin(angle) ** 2)
    omega = getattr(r, "omega", None)
    if omega is not None:
        expected = _fd_expected(omega)
        assert abs(value - expected) <= 1e-12, (
            f"occupation {value!r} deviates from Fermi-Dirac value {expected!r}"
        )
    return value


# ---------------------------------------------------------------------------
# States


def bell_registry() -> ModeRegistry:
    """The two inertial particle modes: one for each observer."""
    return ModeRegistry(
        (Mode("A", PARTICLE, MINKOWSKI), Mode("R", PARTICLE, MINKOWSKI))
    )


def bell_state() -> OccupationState:
    """(|00> + |11>)/sqrt(2) over the two inertial modes."""
    registry = bell_registry()
    amp = 1.0 / np.sqrt(2.0)
    return OccupationState(registry, {(0, 0): amp, (1, 1): amp})


def accelerate(state: OccupationState, r) -> qmat.DensityMatrix:
    """Tripartite density matrix once the second observer accelerates.

    The second mode's inertial kets are replaced by their expansions over
    the region-I particle and region-II antiparticle modes; the first mode
    rides along unchanged.  Returns the projector over labels
    ("A", "I", "II").
    """
    angle = angle_of(r)
    registry = state.registry
    if len(registry) != 2 or any(
        m.region != MINKOWSKI or m.species != PARTICLE for m in registry.modes
    ):
        raise UnsupportedStateError(
            f"expected two inertial particle modes, got {registry}"
        )
    target = fock.standard_registry()
    vacuum = fock.solve_pair_vacuum(target, "I", "II", angle)
    one = fock.pair_one_particle(target, "I", "II", angle, vacuum=vacuum)
    alice = target.mode("A")

    out = OccupationState.zero(target)
    for occ, amp in state.terms().items():
        piece = one if occ[1] else vacuum
        if occ[0]:
            # A precedes I and II in the register, so this crossing is signless.
            piece = fock.apply_ladder(fock.creation(alice), piece)
        out = out + complex(amp) * piece
    return fock.to_density_matrix(out, ("A", "I", "II"))


def dual_registry() -> ModeRegistry:
    """Registers for two accelerated observers: each party contributes a
    region-I particle mode and a region-II antiparticle mode."""
    return ModeRegistry(
        (
            Mode("A_I", PARTICLE, RINDLER_I),
            Mode("A_II", ANTIPARTICLE, RINDLER_II),
            Mode("R_I", PARTICLE, RINDLER_I),
            Mode("R_II", ANTIPARTICLE, RINDLER_II),
        )
    )


def dual_acceleration(r1, r2) -> qmat.DensityMatrix:
    """Both observers accelerate; trace over both region-II modes.

    The shared pair is rebuilt by substituting each observer's inertial
    kets with their own pair expansion (angles ``r1`` and ``r2``), forming
    the four-mode projector, and tracing out the two inaccessible modes.
    Returns the two-qubit state over labels ("A", "I"), ordered as
    (first observer's region-I mode, second observer's region-I mode).
    """
    a1 = angle_of(r1)
    a2 = angle_of(r2)
    registry = dual_registry()
    vac_a = fock.solve_pair_vacuum(registry, "A_I", "A_II", a1)
    vac_r = fock.solve_pair_vacuum(registry, "R_I", "R_II", a2)
    one_a = fock.pair_one_particle(registry, "A_I", "A_II", a1, vacuum=vac_a)
    one_r = fock.pair_one_particle(registry, "R_I", "R_II", a2, vacuum=vac_r)

    psi = (fock.combine(vac_a, vac_r) + fock.combine(one_a, one_r)) * (
        1.0 / np.sqrt(2.0)
    )
    rho = fock.to_density_matrix(psi, ("A_I", "A_II", "R_I", "R_II"))
    reduced = qmat.partial_trace(rho, ("A_I", "R_I"))
    return reduced.relabeled(("A", "I"))
