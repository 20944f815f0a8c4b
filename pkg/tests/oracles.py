"""Independent oracles shared by the test modules.

Everything here deliberately avoids the library's own eigensolver and
construction paths: eigenvalues come from characteristic-polynomial
companion-matrix roots, partial traces from explicit index loops, and the
reference density matrices are written out entry by entry.
"""

from __future__ import annotations

import itertools

import numpy as np


def charpoly_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues as companion-matrix roots of the characteristic polynomial.

    Coefficients come from the Faddeev-LeVerrier recursion (traces of
    powers only), so no eigendecomposition of the input is involved.
    """
    m = np.asarray(matrix, dtype=complex)
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    ck = 1.0 + 0j
    for k in range(1, n + 1):
        mk = m @ (mk + ck * np.eye(n))
        ck = -np.trace(mk) / k
        coeffs.append(ck)
    roots = np.roots(coeffs)
    return np.sort(roots.real)[::-1]  # descending, imaginary parts dropped


def loop_partial_trace(matrix: np.ndarray, n_qubits: int, keep: list[int]) -> np.ndarray:
    """Partial trace by explicit summation over basis-index bit strings."""
    d = 2 ** len(keep)
    out = np.zeros((d, d), dtype=complex)
    for row in itertools.product((0, 1), repeat=n_qubits):
        for col in itertools.product((0, 1), repeat=n_qubits):
            if any(row[i] != col[i] for i in range(n_qubits) if i not in keep):
                continue
            ri = ci = 0
            for i in keep:
                ri = 2 * ri + row[i]
                ci = 2 * ci + col[i]
            full_r = int("".join(map(str, row)), 2)
            full_c = int("".join(map(str, col)), 2)
            out[ri, ci] += matrix[full_r, full_c]
    return out


# --- reference matrices, basis |abc> = |a>_A |b>_I |c>_II -------------------


def rho_tripartite(r: float) -> np.ndarray:
    """Projector onto (cos r |000> + sin r |011> + |110>) / sqrt(2)."""
    c, s = np.cos(r), np.sin(r)
    psi = np.zeros(8, dtype=complex)
    psi[0b000] = c
    psi[0b011] = s
    psi[0b110] = 1.0
    psi /= np.sqrt(2.0)
    return np.outer(psi, psi.conj())


def rho_ai(r: float) -> np.ndarray:
    c, s = np.cos(r), np.sin(r)
    return 0.5 * np.array(
        [
            [c * c, 0, 0, c],
            [0, s * s, 0, 0],
            [0, 0, 0, 0],
            [c, 0, 0, 1],
        ],
        dtype=complex,
    )


def rho_aii(r: float) -> np.ndarray:
    c, s = np.cos(r), np.sin(r)
    return 0.5 * np.array(
        [
            [c * c, 0, 0, 0],
            [0, s * s, s, 0],
            [0, s, 1, 0],
            [0, 0, 0, 0],
        ],
        dtype=complex,
    )


def rho_iii(r: float) -> np.ndarray:
    c, s = np.cos(r), np.sin(r)
    return 0.5 * np.array(
        [
            [c * c, 0, 0, c * s],
            [0, 0, 0, 0],
            [0, 0, 1, 0],
            [c * s, 0, 0, s * s],
        ],
        dtype=complex,
    )


def rho_dual(r1: float, r2: float) -> np.ndarray:
    """Reduced state for two accelerated observers, basis |00>..|11>."""
    c1, s1 = np.cos(r1), np.sin(r1)
    c2, s2 = np.cos(r2), np.sin(r2)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = c1 * c1 * c2 * c2
    m[1, 1] = c1 * c1 * s2 * s2
    m[2, 2] = s1 * s1 * c2 * c2
    m[3, 3] = 1.0 + s1 * s1 * s2 * s2
    m[0, 3] = m[3, 0] = c1 * c2
    return 0.5 * m


def entropy_of(probabilities) -> float:
    """Shannon entropy in bits with 0 log 0 = 0."""
    total = 0.0
    for p in probabilities:
        if p > 0.0:
            total -= p * np.log2(p)
    return total


def random_mixed_two_qubit(rng: np.random.Generator, n_components: int = 4) -> np.ndarray:
    """Random mixture of random pure two-qubit states.

    Weights are bounded away from zero so the mixture stays solidly full
    rank; the characteristic-polynomial comparison loses its meaning once
    an eigenvalue of rho rho~ sits below the rounding floor.
    """
    raw = 1.0 + rng.uniform(0.0, 1.0, size=n_components)
    weights = raw / np.sum(raw)
    rho = np.zeros((4, 4), dtype=complex)
    for w in weights:
        psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        psi /= np.linalg.norm(psi)
        rho += w * np.outer(psi, psi.conj())
    return rho
