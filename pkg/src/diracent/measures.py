"""Entanglement and correlation measures for two- and three-qubit states.

All entropic quantities are in bits.  Spectra come from the in-house
Jacobi eigensolver so that the whole measure pipeline stays independent
of external linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat
from .qmat import DensityMatrix

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SPIN_FLIP_KERNEL = qmat.tensor(SIGMA_Y, SIGMA_Y)

PSD_TOL = 1e-10  # how negative an eigenvalue may be before we call it a bug
CLAMP_TOL = 1e-12  # rounding-level negatives silently clipped to zero


class NotDensityMatrixError(ValueError):
    """Operator is not positive semidefinite with unit trace."""


class NotTwoQubitError(ValueError):
    """Operation requires a two-qubit layout."""


class NotOneQubitError(ValueError):
    """Operation requires a single-qubit layout."""


class NotPureError(ValueError):
    """Operation requires a pure overall state."""


def _require_qubits(rho: DensityMatrix, n: int) -> None:
    if rho.n_qubits != n:
        err = NotTwoQubitError if n == 2 else NotOneQubitError
        raise err(f"expected a {n}-qubit state, got labels {rho.labels}")


def _require_pure(rho: DensityMatrix) -> None:
    if abs(rho.purity() - 1.0) > PSD_TOL:
        raise NotPureError(f"purity {rho.purity()!r} differs from 1")


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x) with 0 log 0 = 0."""
    total = 0.0
    for p in (x, 1.0 - x):
        if p > 0.0:
            total -= p * np.log2(p)
    return float(total)


def vn_entropy(rho: DensityMatrix) -> float:
    """von Neumann entropy -Tr(rho log2 rho) in bits."""
    if abs(rho.trace() - 1.0) > PSD_TOL:
        raise NotDensityMatrixError(f"trace {rho.trace()!r} differs from 1")
    w, _ = qmat.eig_hermitian(rho.matrix)
    if w[0] < -PSD_TOL:
        raise NotDensityMatrixError(f"negative eigenvalue {w[0]!r}")
    total = 0.0
    for lam in w:
        if lam > 0.0:
            total -= lam * np.log2(lam)
    return float(total)


def min_pt_eigenvalue(rho: DensityMatrix) -> float:
    """Smallest eigenvalue of the partial transpose on the first qubit.

    A negative value certifies entanglement for two qubits.
    """
    _require_qubits(rho, 2)
    w, _ = qmat.eig_hermitian(qmat.partial_transpose(rho, rho.labels[0]))
    return float(w[0])


def log_negativity(rho: DensityMatrix) -> float:
    """log2 of the trace norm of the partial transpose, in bits."""
    _require_qubits(rho, 2)
    return float(np.log2(qmat.trace_norm(qmat.partial_transpose(rho, rho.labels[0]))))


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y) in the standard basis."""
    _require_qubits(rho, 2)
    return SPIN_FLIP_KERNEL @ rho.matrix.conj() @ SPIN_FLIP_KERNEL


def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    w, v = qmat.eig_hermitian(matrix)
    if w[0] < -PSD_TOL:
        raise NotDensityMatrixError(f"negative eigenvalue {w[0]!r} in square root")
    # Rounding-level eigenvalues must become exact zeros: sqrt would blow
    # a 1e-16 perturbation of a true zero up to 1e-8 in the entries.
    w = np.where(np.abs(w) < CLAMP_TOL, 0.0, np.clip(w, 0.0, None))
    return (v * np.sqrt(w)) @ v.conj().T


def wootters_spectrum(rho: DensityMatrix) -> np.ndarray:
    """The four descending lambda_i whose square is the spectrum of
    rho times its spin-flip.

    Computed as the singular values of x = sqrt(rho~) sqrt(rho), read off
    the Hermitian embedding [[0, x], [x^dag, 0]] whose eigenvalues are
    +/- the singular values.  Taking singular values directly, instead of
    square roots of near-zero eigenvalues, keeps the small lambda_i at
    rounding level instead of its square root.
    """
    _require_qubits(rho, 2)
    x = _psd_sqrt(spin_flip(rho)) @ _psd_sqrt(rho.matrix)
    emb = np.zeros((8, 8), dtype=complex)
    emb[:4, 4:] = x
    emb[4:, :4] = x.conj().T
    w, _ = qmat.eig_hermitian(emb)
    return w[::-1][:4].copy()


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence max(0, l1 - l2 - l3 - l4)."""
    lam = wootters_spectrum(rho)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def tangle(rho: DensityMatrix) -> float:
    """Squared concurrence."""
    return concurrence(rho) ** 2


def eof(rho: DensityMatrix) -> float:
    """Entanglement of formation h((1 + sqrt(1 - C^2)) / 2) in bits."""
    c = concurrence(rho)
    return binary_entropy((1.0 + np.sqrt(max(0.0, 1.0 - c * c))) / 2.0)


def mutual_information(rho: DensityMatrix) -> float:
    """S(rho_a) + S(rho_b) - S(rho_ab) over the two single-qubit marginals."""
    _require_qubits(rho, 2)
    a, b = rho.labels
    return (
        vn_entropy(qmat.partial_trace(rho, (a,)))
        + vn_entropy(qmat.partial_trace(rho, (b,)))
        - vn_entropy(rho)
    )


def one_to_rest_tangle(rho: DensityMatrix, k: str) -> float:
    """Tangle between qubit ``k`` and the rest of a pure state,
    2 (1 - Tr[rho_rest^2])."""
    _require_pure(rho)
    rest = tuple(label for label in rho.labels if label != k)
    if len(rest) == rho.n_qubits:
        raise qmat.UnknownSubsystemError(f"label {k!r} not among {rho.labels}")
    return float(2.0 * (1.0 - qmat.partial_trace(rho, rest).purity()))


def residual_tangle(rho: DensityMatrix, focus: str) -> float:
    """Three-qubit residual tangle with respect to ``focus``.

    The one-to-rest tangle minus both pairwise tangles of the focus
    qubit; nonnegative, and invariant under relabeling the focus.
    """
    if rho.n_qubits != 3:
        raise ValueError(f"residual tangle needs three qubits, got {rho.labels}")
    total = one_to_rest_tangle(rho, focus)
    for other in rho.labels:
        if other != focus:
            total -= tangle(qmat.partial_trace(rho, (focus, other)))
    return float(total)


@dataclass(frozen=True)
class BipartiteMeasures:
    """All scalar two-qubit measures for one marginal."""

    min_pt_eigenvalue: float
    log_negativity: float
    concurrence: float
    tangle: float
    eof: float
    mutual_information: float


@dataclass(frozen=True)
class MeasureReport:
    """Every measure of the tripartite scenario at one mixing angle."""

    r: float
    pairs: dict[tuple[str, str], BipartiteMeasures]
    entropies: dict[str, float]
    residual_tangle: float
