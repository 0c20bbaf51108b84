"""
Hermitian eigendecomposition and the PSD helpers built on it.

The default solver is a cyclic Jacobi iteration for complex Hermitian
matrices (deterministic, row-by-row pivot order). ``lapack`` delegates to
numpy.linalg.eigh for larger workloads.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from cmatrix import conf
from cmatrix.exceptions import ContractViolation, NotPSDError, NumericError
from cmatrix.services.linalg import check_hermitian, symmetrize

logger = logging.getLogger(__name__)

METHODS = ("jacobi", "lapack")


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues in ascending order; eigenvector k is column k"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        vectors = self.eigenvectors
        return (vectors * self.eigenvalues) @ vectors.conj().T


def _off_diagonal_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(work, vectors, p, q):
    """Apply one unitary Jacobi rotation that zeroes work[p, q]"""
    apq = work[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return
    phase = apq / magnitude
    theta = (work[q, q].real - work[p, p].real) / (2.0 * magnitude)
    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    back = phase.conjugate()

    # A <- A J with J = diag(1, e^{-i phi}) R on the (p, q) plane
    col_p = work[:, p].copy()
    work[:, p] = c * col_p - s * back * work[:, q]
    work[:, q] = s * col_p + c * back * work[:, q]
    # A <- J^dagger A
    row_p = work[p, :].copy()
    work[p, :] = c * row_p - s * phase * work[q, :]
    work[q, :] = s * row_p + c * phase * work[q, :]
    work[p, q] = work[q, p] = 0.0
    work[p, p] = work[p, p].real
    work[q, q] = work[q, q].real

    vec_p = vectors[:, p].copy()
    vectors[:, p] = c * vec_p - s * back * vectors[:, q]
    vectors[:, q] = s * vec_p + c * back * vectors[:, q]


def jacobi_eigen(a, tol=None, max_sweeps=None):
    default_tol, default_sweeps = conf.jacobi_limits()
    tol = default_tol if tol is None else tol
    max_sweeps = default_sweeps if max_sweeps is None else max_sweeps

    work = np.array(a, dtype=np.complex128, copy=True)
    n = work.shape[0]
    vectors = np.eye(n, dtype=np.complex128)
    threshold = tol * max(1.0, float(np.linalg.norm(work)))

    off = _off_diagonal_norm(work)
    sweeps = 0
    while off > threshold:
        if sweeps == max_sweeps:
            raise NumericError(f"Jacobi did not converge after {max_sweeps} sweeps", residual=off)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vectors, p, q)
        sweeps += 1
        off = _off_diagonal_norm(work)

    logger.debug("jacobi n=%d converged in %d sweeps (off=%.2e)", n, sweeps, off)
    values = np.diag(work).real
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def hermitian_eigen(a, method=None):
    """
    Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises ContractViolation for non-Hermitian input and NumericError when
    the Jacobi sweeps do not converge.
    """
    check_hermitian(a)
    method = method or conf.eigensolver()
    if method not in METHODS:
        raise ContractViolation(f"unknown eigensolver {method!r}; expected one of {METHODS}")

    hermitian = symmetrize(np.asarray(a, dtype=np.complex128))
    if method == "lapack":
        values, vectors = np.linalg.eigh(hermitian)
    else:
        values, vectors = jacobi_eigen(hermitian)
    return EigenResult(eigenvalues=np.asarray(values, dtype=float), eigenvectors=vectors)


def eigenvalues(a, method=None):
    return hermitian_eigen(a, method=method).eigenvalues


def min_eigenvalue(a, method=None):
    return float(eigenvalues(a, method=method)[0])


def is_psd(a, method=None):
    return min_eigenvalue(a, method=method) >= -conf.tolerance("psd")


def psd_sqrt(a, method=None):
    """
    Hermitian PSD square root.

    Eigenvalues in [-psd tolerance, 0) are clamped to zero; anything more
    negative raises NotPSDError carrying the offending eigenvalue.
    """
    result = hermitian_eigen(a, method=method)
    lowest = float(result.eigenvalues[0])
    if lowest < -conf.tolerance("psd"):
        raise NotPSDError(lowest)
    roots = np.sqrt(np.clip(result.eigenvalues, 0.0, None))
    vectors = result.eigenvectors
    return symmetrize((vectors * roots) @ vectors.conj().T)
