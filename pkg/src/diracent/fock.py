"""Exact fermionic ladder-operator algebra on a finite register of modes.

States are sparse superpositions over occupation-number kets, each mode
holding 0 or 1 excitations.  The basis ket for an occupation pattern is
defined by applying the creation operators of the occupied modes in
register order to the empty state, so all anti-commutation signs follow
from one convention: an operator acting on mode ``i`` picks up
``(-1)**(number of occupied modes before i in the register)``.

The expansions of the inertial vacuum and one-particle states in terms of
the modes seen by an accelerated observer are *derived* here.  The vacuum
is obtained by imposing the transformed annihilation condition on a
paired two-mode ansatz and solving the resulting linear system; the
one-particle state is obtained by applying the transformed creation
operator to that solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import qmat

PARTICLE = "particle"
ANTIPARTICLE = "antiparticle"
SPECIES = (PARTICLE, ANTIPARTICLE)

MINKOWSKI = "minkowski"
RINDLER_I = "rindler-I"
RINDLER_II = "rindler-II"
REGIONS = (MINKOWSKI, RINDLER_I, RINDLER_II)

CREATE = "create"
ANNIHILATE = "annihilate"

ANGLE_MAX = np.pi / 4


class UnknownModeError(ValueError):
    """Referenced mode is not part of the register."""


class UnnormalizedStateError(ValueError):
    """State norm differs from one beyond tolerance."""


class ResidualOccupationError(ValueError):
    """A mode outside the requested layout is excited."""


class NoSolutionError(RuntimeError):
    """The vacuum ansatz admits no (unique) annihilated state."""


@dataclass(frozen=True)
class Mode:
    """A single fermionic mode, identified by name."""

    name: str
    species: str
    region: str

    def __post_init__(self) -> None:
        if self.species not in SPECIES:
            raise ValueError(f"unknown species {self.species!r}")
        if self.region not in REGIONS:
            raise ValueError(f"unknown region {self.region!r}")


class ModeRegistry:
    """Immutable, ordered collection of modes.

    The registration order is the sign convention: it decides which modes
    a ladder operator has to anti-commute past.
    """

    def __init__(self, modes: Sequence[Mode]):
        self.modes = tuple(modes)
        names = [m.name for m in self.modes]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate mode names in {names}")
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownModeError(f"mode {name!r} not in registry {self.names}") from None

    def mode(self, name: str) -> Mode:
        return self.modes[self.index(name)]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.modes)

    def __len__(self) -> int:
        return len(self.modes)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ModeRegistry) and self.modes == other.modes

    def __hash__(self) -> int:
        return hash(self.modes)

    def __repr__(self) -> str:
        return f"ModeRegistry({list(self.names)})"


@dataclass(frozen=True)
class LadderOp:
    mode: Mode
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in (CREATE, ANNIHILATE):
            raise ValueError(f"unknown ladder kind {self.kind!r}")


def creation(mode: Mode) -> LadderOp:
    return LadderOp(mode, CREATE)


def annihilation(mode: Mode) -> LadderOp:
    return LadderOp(mode, ANNIHILATE)


class OccupationState:
    """Sparse superposition over occupation-number kets of one registry."""

    __slots__ = ("registry", "_terms")

    def __init__(self, registry: ModeRegistry, terms: Mapping[tuple[int, ...], complex] | None = None):
        self.registry = registry
        clean: dict[tuple[int, ...], complex] = {}
        for occ, amp in (terms or {}).items():
            occ = tuple(int(b) for b in occ)
            if len(occ) != len(registry) or any(b not in (0, 1) for b in occ):
                raise ValueError(f"bad occupation vector {occ} for {registry}")
            amp = complex(amp)
            if amp != 0:
                clean[occ] = amp
        self._terms = clean

    @classmethod
    def zero(cls, registry: ModeRegistry) -> "OccupationState":
        return cls(registry)

    @classmethod
    def basis_state(cls, registry: ModeRegistry, occupations: Sequence[int]) -> "OccupationState":
        return cls(registry, {tuple(occupations): 1.0})

    def terms(self) -> dict[tuple[int, ...], complex]:
        return dict(self._terms)

    def amplitude(self, occupations: Sequence[int]) -> complex:
        return self._terms.get(tuple(occupations), 0j)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def norm(self) -> float:
        return float(np.sqrt(sum(abs(a) ** 2 for a in self._terms.values())))

    def normalized(self) -> "OccupationState":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero state")
        return self * (1.0 / n)

    def inner(self, other: "OccupationState") -> complex:
        """<self|other> over matching occupation kets."""
        if other.registry != self.registry:
            raise ValueError("states live on different registries")
        small, big = self._terms, other._terms
        if len(big) < len(small):
            return np.conj(other.inner(self))
        return complex(sum(np.conj(a) * big.get(occ, 0j) for occ, a in small.items()))

    def __add__(self, other: "OccupationState") -> "OccupationState":
        if not isinstance(other, OccupationState):
            return NotImplemented
        if other.registry != self.registry:
            raise ValueError("states live on different registries")
        merged = dict(self._terms)
        for occ, amp in other._terms.items():
            merged[occ] = merged.get(occ, 0j) + amp
        return OccupationState(self.registry, merged)

    def __sub__(self, other: "OccupationState") -> "OccupationState":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "OccupationState":
        scalar = complex(scalar)
        return OccupationState(
            self.registry, {occ: scalar * amp for occ, amp in self._terms.items()}
        )

    __rmul__ = __mul__

    def __repr__(self) -> str:
        parts = [f"{amp:.6g}|{''.join(map(str, occ))}>" for occ, amp in sorted(self._terms.items())]
        return " + ".join(parts) if parts else "0"


def _jw_sign(occupations: tuple[int, ...], index: int) -> int:
    """Sign picked up by a ladder operator acting on mode ``index``."""
    return -1 if sum(occupations[:index]) % 2 else 1


def apply_ladder(op: LadderOp, state: OccupationState) -> OccupationState:
    """Apply one creation or annihilation operator, tracking signs per term."""
    idx = state.registry.index(op.mode.name)
    if state.registry.modes[idx] != op.mode:
        raise UnknownModeError(f"mode {op.mode} does not match registry entry")
    out: dict[tuple[int, ...], complex] = {}
    want_occupied = 1 if op.kind == ANNIHILATE else 0
    for occ, amp in state._terms.items():
        if occ[idx] != want_occupied:
            continue  # Pauli blocking or annihilating an empty mode
        new = list(occ)
        new[idx] = 1 - want_occupied
        key = tuple(new)
        out[key] = out.get(key, 0j) + amp * _jw_sign(occ, idx)
    return OccupationState(state.registry, out)


OperatorPoly = Sequence[tuple[complex, Sequence[LadderOp]]]


def apply_operator_poly(terms: OperatorPoly, state: OccupationState) -> OccupationState:
    """Apply a sum of operator products.

    Each term is ``(coefficient, ops)`` with ``ops`` applied right to
    left, i.e. ``ops == (a, b)`` means the operator ``a b``.  An empty
    ``ops`` sequence is the identity.
    """
    result = OccupationState.zero(state.registry)
    for coeff, ops in terms:
        piece = state
        for op in reversed(tuple(ops)):
            piece = apply_ladder(op, piece)
            if piece.is_zero:
                break
        result = result + complex(coeff) * piece
    return result


def occupation_expectation(state: OccupationState, mode: Mode) -> float:
    """<state| a_mode^dag a_mode |state> as the squared norm of a_mode|state>."""
    return apply_ladder(annihilation(mode), state).norm() ** 2


def _inversion_sign(sequence: Sequence[int]) -> int:
    inversions = 0
    for i in range(len(sequence)):
        for j in range(i + 1, len(sequence)):
            if sequence[i] > sequence[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def combine(a: OccupationState, b: OccupationState) -> OccupationState:
    """Product of two states with disjoint occupied modes.

    Each output ket is the union of the factors' occupations.  The sign is
    the parity of interleaving the two creator strings back into register
    order (the creators of ``a`` stand to the left of those of ``b``).
    """
    if a.registry != b.registry:
        raise ValueError("states live on different registries")
    out: dict[tuple[int, ...], complex] = {}
    for occ_a, amp_a in a._terms.items():
        sites_a = [i for i, n in enumerate(occ_a) if n]
        for occ_b, amp_b in b._terms.items():
            if any(occ_a[i] and occ_b[i] for i in range(len(occ_a))):
                raise ValueError("factors occupy a common mode")
            sites_b = [i for i, n in enumerate(occ_b) if n]
            sign = _inversion_sign(sites_a + sites_b)
            key = tuple(na | nb for na, nb in zip(occ_a, occ_b))
            out[key] = out.get(key, 0j) + sign * amp_a * amp_b
    return OccupationState(a.registry, out)


def to_density_matrix(state: OccupationState, labels: Sequence[str]) -> qmat.DensityMatrix:
    """Rank-one projector onto ``state`` in the layout's bit convention.

    ``labels`` name the registry modes that become qubits, first label
    most significant.  Every mode outside the layout must be empty in
    every term.  Reordering labels relative to the registry is legal; the
    permutation parity of the occupied creators is folded into the
    amplitudes so the result is independent of the registry order.
    """
    labels = tuple(labels)
    registry = state.registry
    mode_pos = [registry.index(name) for name in labels]
    norm = state.norm()
    if abs(norm - 1.0) > 1e-12:
        raise UnnormalizedStateError(f"state norm {norm!r} is not 1")
    n = len(labels)
    vec = np.zeros(2 ** n, dtype=complex)
    layout_of_mode = {pos: j for j, pos in enumerate(mode_pos)}
    for occ, amp in state._terms.items():
        occupied = [i for i, bit in enumerate(occ) if bit]
        if any(i not in layout_of_mode for i in occupied):
            extra = [registry.modes[i].name for i in occupied if i not in layout_of_mode]
            raise ResidualOccupationError(f"modes {extra} are excited but not in layout")
        index = 0
        for j, pos in enumerate(mode_pos):
            index |= occ[pos] << (n - 1 - j)
        sign = _inversion_sign([layout_of_mode[i] for i in occupied])
        vec[index] += sign * amp
    return qmat.DensityMatrix(np.outer(vec, vec.conj()), labels)


# ---------------------------------------------------------------------------
# Mode mixing between the inertial modes and the accelerated observer's modes


def standard_registry() -> ModeRegistry:
    """Canonical register: inertial particle A, then the accelerated
    observer's region-I particle and region-II antiparticle modes."""
    return ModeRegistry(
        (
            Mode("A", PARTICLE, MINKOWSKI),
            Mode("I", PARTICLE, RINDLER_I),
            Mode("II", ANTIPARTICLE, RINDLER_II),
        )
    )


def _as_angle(value) -> float:
    r = float(getattr(value, "r", value))
    if not 0.0 <= r <= ANGLE_MAX:
        raise ValueError(f"mixing angle {r!r} outside [0, pi/4]")
    return r


def transformed_annihilator(registry: ModeRegistry, particle: str, antiparticle: str, angle) -> OperatorPoly:
    """Inertial-mode annihilator written in the accelerated observer's modes:
    cos(r) c - sin(r) d^dag for the named particle/antiparticle pair."""
    r = _as_angle(angle)
    return (
        (np.cos(r), (annihilation(registry.mode(particle)),)),
        (-np.sin(r), (creation(registry.mode(antiparticle)),)),
    )


def transformed_creator(registry: ModeRegistry, particle: str, antiparticle: str, angle) -> OperatorPoly:
    """Adjoint of :func:`transformed_annihilator`: cos(r) c^dag - sin(r) d."""
    r = _as_angle(angle)
    return (
        (np.cos(r), (creation(registry.mode(particle)),)),
        (-np.sin(r), (annihilation(registry.mode(antiparticle)),)),
    )


def solve_pair_vacuum(registry: ModeRegistry, particle: str, antiparticle: str, angle) -> OccupationState:
    """State of the named pair annihilated by the transformed operator.

    The ansatz pairs the two modes, ``A0|00> + A1|11>``, as dictated by the
    mixing structure; the coefficients come out of the kernel of the
    constraint system rather than being written down.  Two sanity checks
    run on every call: the annihilation constraints must force the
    unpaired single-particle ket to drop out, and the residual of the
    solution under the annihilator must sit at rounding level.
    """
    r = _as_angle(angle)
    empty = OccupationState.basis_state(registry, (0,) * len(registry))
    p_mode = registry.mode(particle)
    a_mode = registry.mode(antiparticle)
    paired = apply_operator_poly(((1.0, (creation(p_mode), creation(a_mode))),), empty)
    only_p = apply_ladder(creation(p_mode), empty)
    only_a = apply_ladder(creation(a_mode), empty)

    annihilator = transformed_annihilator(registry, particle, antiparticle, r)
    ansatz = (empty, only_a, only_p, paired)
    images = [apply_operator_poly(annihilator, s) for s in ansatz]

    kets = sorted(set().union(*[img.terms().keys() for img in images]))
    constraint = np.array(
        [[img.amplitude(k) for img in images] for k in kets], dtype=complex
    ).reshape(len(kets), len(ansatz))

    # Kernel vectors of the full system must carry no single-particle
    # component: that amplitude is forced to vanish by the constraints.
    gram = constraint.conj().T @ constraint
    w, v = qmat.eig_hermitian(gram)
    for col in range(len(ansatz)):
        if w[col] < 1e-10 and abs(v[2, col]) > 1e-10:
            raise NoSolutionError("annihilation constraints left an unpaired component")

    # Restrict to the paired ansatz and take the (unique) kernel direction.
    paired_constraint = constraint[:, (0, 3)]
    gram2 = paired_constraint.conj().T @ paired_constraint
    w2, v2 = qmat.eig_hermitian(gram2)
    if w2[0] > 1e-10:
        raise NoSolutionError(f"paired ansatz has no annihilated state (residual {w2[0]:.3e})")
    if w2[1] < 1e-10:
        raise NoSolutionError("paired ansatz kernel is degenerate")
    coeffs = v2[:, 0]
    if abs(coeffs[0]) < 1e-12:
        raise NoSolutionError("vacuum component vanished; angle outside the valid range?")
    coeffs = coeffs * (np.conj(coeffs[0]) / abs(coeffs[0]))  # global phase: A0 real positive

    vacuum = (complex(coeffs[0]) * empty + complex(coeffs[1]) * paired).normalized()
    residual = apply_operator_poly(annihilator, vacuum).norm()
    if residual >= 1e-14:
        raise NoSolutionError(f"vacuum residual {residual:.3e} above tolerance")
    return vacuum


def pair_one_particle(
    registry: ModeRegistry,
    particle: str,
    antiparticle: str,
    angle,
    vacuum: OccupationState | None = None,
) -> OccupationState:
    """Transformed creation operator applied to the pair vacuum."""
    if vacuum is None:
        vacuum = solve_pair_vacuum(registry, particle, antiparticle, angle)
    creator = transformed_creator(registry, particle, antiparticle, angle)
    return apply_operator_poly(creator, vacuum)


def solve_minkowski_vacuum(angle) -> OccupationState:
    """Inertial vacuum of the accelerated observer's mode pair on the
    canonical register (modes I and II; mode A left empty)."""
    return solve_pair_vacuum(standard_registry(), "I", "II", angle)


def minkowski_one_particle(angle) -> OccupationState:
    """Inertial one-particle state on the canonical register."""
    registry = standard_registry()
    vacuum = solve_pair_vacuum(registry, "I", "II", angle)
    return pair_one_particle(registry, "I", "II", angle, vacuum=vacuum)
