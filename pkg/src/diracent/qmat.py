"""Dense complex linear algebra for small multi-qubit operators.

Matrices are plain numpy arrays of shape (d, d) with d <= 8.  Operators
that carry subsystem structure are wrapped in :class:`DensityMatrix`,
which pairs a matrix with an ordered tuple of qubit labels.

Basis convention: the first label is the most significant bit, so for
labels ("A", "I", "II") the basis ket |abc> sits at row index 4a + 2b + c.
``numpy.kron`` follows the same convention, which is why :func:`tensor`
is a thin wrapper around it.

The eigensolver is a cyclic Jacobi iteration applied directly to the
complex Hermitian matrix.  At these dimensions robustness beats
asymptotics, and a hand-rolled solver keeps the spectrum path independent
of LAPACK so every spectrum the library reports can be cross-checked
against an external routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_DIM = 8
HERMITIAN_TOL = 1e-12

# Off-diagonal Frobenius norm at which the Jacobi iteration stops, and the
# sweep cap past which we give up.
JACOBI_TARGET = 1e-14
JACOBI_MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    """Matrix fails the Hermitian symmetry check."""


class NoConvergenceError(RuntimeError):
    """Jacobi iteration exceeded its sweep cap."""


class UnknownSubsystemError(ValueError):
    """A subsystem label is not part of the operator's layout."""


def require_hermitian(matrix: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``matrix`` as a complex array, raising if it is not Hermitian."""
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tol:
        raise NotHermitianError(f"matrix deviates from Hermiticity by {dev:.3e}")
    return m


def eig_hermitian(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, V)`` with eigenvalues ``w`` sorted ascending and the
    columns of ``V`` holding the matching orthonormal eigenvectors, so
    that ``V @ diag(w) @ V.conj().T`` reconstructs the input.
    """
    a = np.array(require_hermitian(matrix), dtype=complex)
    n = a.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
    v = np.eye(n, dtype=complex)
    if n == 1:
        return a.real.diagonal().copy(), v

    for _ in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(np.sum(np.abs(a - np.diag(np.diag(a))) ** 2))
        if off < JACOBI_TARGET:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m == 0.0:
                    continue
                diff = a[p, p].real - a[q, q].real
                if m < abs(diff) * 1e-36:
                    t = m / diff  # rotation angle ~ m/diff, avoids overflow in tau
                else:
                    tau = diff / (2.0 * m)
                    t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ph = apq / m  # unit phase of the pivot entry
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(ph) * col_q
                a[:, q] = -s * ph * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * ph * row_q
                a[q, :] = -s * np.conj(ph) * row_p + c * row_q
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * np.conj(ph) * vq
                v[:, q] = -s * ph * vp + c * vq
    else:
        raise NoConvergenceError(
            f"off-diagonal norm stayed above {JACOBI_TARGET:g} after "
            f"{JACOBI_MAX_SWEEPS} sweeps"
        )

    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, consistent with the first-label-is-MSB convention."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def trace_norm(matrix: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    w, _ = eig_hermitian(matrix)
    return float(np.sum(np.abs(w)))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian operator over an ordered register of named qubits."""

    matrix: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate subsystem labels in {labels}")
        m = require_hermitian(self.matrix)
        if m.shape[0] != 2 ** len(labels):
            raise ValueError(
                f"matrix dimension {m.shape[0]} does not match "
                f"{len(labels)} qubit labels"
            )
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def position(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownSubsystemError(
                f"label {label!r} not among {self.labels}"
            ) from None

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)

    def relabeled(self, labels: Sequence[str]) -> "DensityMatrix":
        return DensityMatrix(self.matrix, tuple(labels))


def partial_trace(rho: DensityMatrix, keep: Iterable[str]) -> DensityMatrix:
    """Trace out every subsystem not listed in ``keep``.

    The kept subsystems stay in their original relative order regardless
    of the order in which they are listed.
    """
    keep = tuple(keep)
    if not keep:
        raise UnknownSubsystemError("must keep at least one subsystem")
    keep_pos = sorted(rho.position(label) for label in keep)
    n = rho.n_qubits
    t = rho.matrix.reshape((2,) * (2 * n))
    remaining = list(range(n))
    for sub in [i for i in range(n) if i not in keep_pos]:
        pos = remaining.index(sub)
        t = np.trace(t, axis1=pos, axis2=pos + len(remaining))
        remaining.remove(sub)
    d = 2 ** len(keep_pos)
    return DensityMatrix(t.reshape(d, d), tuple(rho.labels[i] for i in keep_pos))


def partial_transpose(rho: DensityMatrix, subsystem: str) -> np.ndarray:
    """Transpose the named factor only, leaving the rest untouched."""
    i = rho.position(subsystem)
    n = rho.n_qubits
    t = rho.matrix.reshape((2,) * (2 * n))
    t = np.swapaxes(t, i, n + i)
    return np.ascontiguousarray(t.reshape(rho.dim, rho.dim))
