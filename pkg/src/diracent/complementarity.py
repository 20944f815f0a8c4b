"""Single-qubit information measures and multi-qubit complementarity sums.

A two-qubit state trades off separable uncertainty, tangle and averaged
single-qubit information; a pure three-qubit state trades off the
residual tangle, the focus qubit's total pairwise tangle and its squared
Bloch-vector length.  Both sums equal one identically, which makes them
sharp cross-checks of the whole pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import measures, qmat
from .measures import NotOneQubitError, NotTwoQubitError
from .qmat import DensityMatrix


def _require_single(rho: DensityMatrix) -> None:
    if rho.n_qubits != 1:
        raise NotOneQubitError(f"expected one qubit, got labels {rho.labels}")


def coherence(rho_k: DensityMatrix) -> float:
    """nu = 2 |Tr(rho sigma_plus)|, twice the lower off-diagonal modulus.

    sigma_plus is the raising operator with the single unit entry in the
    upper triangle, so the trace picks out the (1, 0) matrix element.
    """
    _require_single(rho_k)
    return float(2.0 * abs(rho_k.matrix[1, 0]))


def predictability(rho_k: DensityMatrix) -> float:
    """p = |Tr(rho sigma_z)|, the population imbalance."""
    _require_single(rho_k)
    return float(abs(rho_k.matrix[0, 0].real - rho_k.matrix[1, 1].real))


def sbar2(rho_k: DensityMatrix) -> float:
    """Averaged squared single-qubit properties, (nu^2 + p^2) / 2."""
    return 0.5 * (coherence(rho_k) ** 2 + predictability(rho_k) ** 2)


def marginal_mixedness(rho: DensityMatrix) -> float:
    """M = 1 - Tr(rho^2)."""
    if rho.n_qubits != 2:
        raise NotTwoQubitError(f"expected two qubits, got labels {rho.labels}")
    return float(1.0 - rho.purity())


def separable_uncertainty(rho: DensityMatrix) -> float:
    """eta = Tr(rho rho~) + M - tau, reported unclamped."""
    if rho.n_qubits != 2:
        raise NotTwoQubitError(f"expected two qubits, got labels {rho.labels}")
    overlap = float(np.trace(rho.matrix @ measures.spin_flip(rho)).real)
    return overlap + marginal_mixedness(rho) - measures.tangle(rho)


def memms_gap(rho: DensityMatrix) -> float:
    """M - eta; zero characterizes states that are maximally entangled at
    fixed marginal mixedness."""
    return marginal_mixedness(rho) - separable_uncertainty(rho)


def check_two_qubit_relation(rho: DensityMatrix) -> float:
    """Residual of eta + tau + sbar2(a) + sbar2(b) - 1 for any two qubits."""
    if rho.n_qubits != 2:
        raise NotTwoQubitError(f"expected two qubits, got labels {rho.labels}")
    a, b = rho.labels
    return (
        separable_uncertainty(rho)
        + measures.tangle(rho)
        + sbar2(qmat.partial_trace(rho, (a,)))
        + sbar2(qmat.partial_trace(rho, (b,)))
        - 1.0
    )


def check_pure_relation(rho: DensityMatrix, k: str) -> float:
    """Residual of the pure three-qubit sharing identity for focus ``k``.

    residual tangle + total pairwise tangle of k + squared Bloch length
    of k's marginal, minus one.  The single-qubit term enters unhalved
    (nu^2 + p^2, twice :func:`sbar2`): the identity only closes with the
    full Bloch norm, since 1 minus it equals the focus qubit's tangle
    with the rest.
    """
    if rho.n_qubits != 3:
        raise ValueError(f"expected three qubits, got labels {rho.labels}")
    measures._require_pure(rho)
    three_tangle = measures.residual_tangle(rho, k)
    pairwise = sum(
        measures.tangle(qmat.partial_trace(rho, (k, other)))
        for other in rho.labels
        if other != k
    )
    marginal = qmat.partial_trace(rho, (k,))
    bloch_sq = coherence(marginal) ** 2 + predictability(marginal) ** 2
    return float(three_tangle + pairwise + bloch_sq - 1.0)


@dataclass(frozen=True)
class QubitProperties:
    nu: float
    p: float
    sbar2: float


@dataclass(frozen=True)
class PairProperties:
    eta: float
    tau: float
    mixedness: float
    two_qubit_residual: float
    memms_gap: float


@dataclass(frozen=True)
class ComplementarityReport:
    """Complementarity bookkeeping for the tripartite scenario at one
    mixing angle, with all identity residuals reported signed."""

    r: float
    qubits: dict[str, QubitProperties]
    pairs: dict[tuple[str, str], PairProperties]
    pure_residuals: dict[str, float]
