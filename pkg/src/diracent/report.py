"""Single-point evaluation of every measure for the accelerated scenario."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import complementarity as comp
from . import measures, qmat, unruh
from .qmat import DensityMatrix

QUBITS = ("A", "I", "II")
PAIRS = (("A", "I"), ("A", "II"), ("I", "II"))


@dataclass(frozen=True)
class PointReport:
    r: float
    measures: measures.MeasureReport
    complementarity: comp.ComplementarityReport


def build_state(r) -> DensityMatrix:
    """Tripartite density matrix of the shared pair at mixing angle ``r``."""
    return unruh.accelerate(unruh.bell_state(), r)


def evaluate_state(r: float, rho: DensityMatrix) -> PointReport:
    """Assemble both reports from one prebuilt tripartite state.

    Marginals and spectra are computed once and shared between the two
    reports; the numbers agree with the standalone measure functions.
    """
    singles = {k: qmat.partial_trace(rho, (k,)) for k in QUBITS}
    pairs = {pair: qmat.partial_trace(rho, pair) for pair in PAIRS}

    entropies = {k: measures.vn_entropy(singles[k]) for k in QUBITS}

    pair_measures: dict[tuple[str, str], measures.BipartiteMeasures] = {}
    pair_props: dict[tuple[str, str], comp.PairProperties] = {}
    tangles: dict[tuple[str, str], float] = {}
    qubit_props = {
        k: comp.QubitProperties(
            nu=comp.coherence(singles[k]),
            p=comp.predictability(singles[k]),
            sbar2=comp.sbar2(singles[k]),
        )
        for k in QUBITS
    }

    for pair in PAIRS:
        rho_ab = pairs[pair]
        pt_eigs, _ = qmat.eig_hermitian(qmat.partial_transpose(rho_ab, pair[0]))
        c = measures.concurrence(rho_ab)
        tau = c * c
        tangles[pair] = tau
        mutual = (
            entropies[pair[0]] + entropies[pair[1]] - measures.vn_entropy(rho_ab)
        )
        pair_measures[pair] = measures.BipartiteMeasures(
            min_pt_eigenvalue=float(pt_eigs[0]),
            log_negativity=float(np.log2(np.sum(np.abs(pt_eigs)))),
            concurrence=c,
            tangle=tau,
            eof=measures.binary_entropy(
                (1.0 + np.sqrt(max(0.0, 1.0 - c * c))) / 2.0
            ),
            mutual_information=float(mutual),
        )

        mixedness = 1.0 - rho_ab.purity()
        overlap = float(
            np.trace(rho_ab.matrix @ measures.spin_flip(rho_ab)).real
        )
        eta = overlap + mixedness - tau
        two_qubit_residual = (
            eta + tau + qubit_props[pair[0]].sbar2 + qubit_props[pair[1]].sbar2 - 1.0
        )
        pair_props[pair] = comp.PairProperties(
            eta=eta,
            tau=tau,
            mixedness=mixedness,
            two_qubit_residual=two_qubit_residual,
            memms_gap=mixedness - eta,
        )

    pure_residuals: dict[str, float] = {}
    for k in QUBITS:
        rest = tuple(q for q in QUBITS if q != k)
        to_rest = 2.0 * (1.0 - pairs[rest].purity())
        pairwise = sum(tangles[p] for p in PAIRS if k in p)
        three_tangle = to_rest - pairwise
        bloch_sq = qubit_props[k].nu ** 2 + qubit_props[k].p ** 2
        pure_residuals[k] = three_tangle + pairwise + bloch_sq - 1.0

    focus = "A"
    residual = (
        2.0 * (1.0 - pairs[("I", "II")].purity())
        - tangles[("A", "I")]
        - tangles[("A", "II")]
    )

    return PointReport(
        r=float(r),
        measures=measures.MeasureReport(
            r=float(r),
            pairs=pair_measures,
            entropies=entropies,
            residual_tangle=float(residual),
        ),
        complementarity=comp.ComplementarityReport(
            r=float(r),
            qubits=qubit_props,
            pairs=pair_props,
            pure_residuals=pure_residuals,
        ),
    )


def evaluate_point(r) -> PointReport:
    """Build the tripartite state at ``r`` and evaluate everything."""
    angle = unruh.angle_of(r)
    return evaluate_state(angle, build_state(angle))
