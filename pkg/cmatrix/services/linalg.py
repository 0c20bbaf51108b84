"""
Dense complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype complex128 (``ComplexDense``).
Composite systems use the convention that subsystem 1 is the most
significant digit: the basis state |i_1 i_2 ... i_N> sits at flat index
sum_r i_r * d^(N-r). Subsystem indices in public signatures are 1-based.
"""

import logging
from functools import reduce

import numpy as np
import numpy.typing as npt

from cmatrix import conf
from cmatrix.exceptions import ContractViolation, ShapeError, SizeLimitError

logger = logging.getLogger(__name__)

ComplexDense = npt.NDArray[np.complex128]


def as_matrix(entries, hermitian=False):
    """
    Build a ComplexDense from anything array-like.

    With ``hermitian=True`` the input must satisfy
    max |A_ij - conj(A_ji)| <= hermitian tolerance.
    """
    matrix = np.array(entries, dtype=np.complex128)
    if matrix.ndim == 1:
        matrix = matrix.reshape(-1, 1)
    if matrix.ndim != 2 or matrix.size == 0:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {matrix.shape}")
    if hermitian:
        check_hermitian(matrix)
    return matrix


def hermitian_defect(a):
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def is_hermitian(a, tol=None):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    tol = conf.tolerance("hermitian") if tol is None else tol
    return hermitian_defect(a) <= tol


def check_hermitian(a):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {a.shape}")
    if not is_hermitian(a):
        raise ContractViolation(f"matrix is not Hermitian (max defect {hermitian_defect(a):.3e})")


def symmetrize(a):
    """(A + A^dagger) / 2, used before eigensolving analytically Hermitian results"""
    return (a + a.conj().T) / 2


def check_dimension(dimension):
    limit = conf.max_dimension()
    if dimension > limit:
        raise SizeLimitError(dimension, limit)


def kron(a, b):
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    check_dimension(max(rows, cols))
    return np.kron(a, b)


def kron_all(factors):
    """Left fold of ``kron`` over a sequence of factors"""
    return reduce(kron, factors)


def frobenius_distance(a, b):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def _check_subsystems(rho, dims):
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ShapeError(f"subsystem dimensions must be positive, got {dims}")
    total = int(np.prod(dims))
    if rho.ndim != 2 or rho.shape != (total, total):
        raise ShapeError(f"matrix of shape {rho.shape} does not match subsystem dimensions {dims}")
    return dims


def partial_transpose(rho, dims, subset):
    """
    Transpose the row/column indices of the subsystems in ``subset``.

    The result is an exact permutation of the entries, so applying it twice
    with the same subset returns the input bit for bit.
    """
    dims = _check_subsystems(rho, dims)
    count = len(dims)
    subset = set(subset)
    if not subset or not subset < set(range(1, count + 1)):
        raise ContractViolation(
            f"subset must be a nonempty proper subset of 1..{count}, got {sorted(subset)}"
        )

    tensor = rho.reshape(dims + dims)
    axes = list(range(2 * count))
    for system in subset:
        row_axis, col_axis = system - 1, count + system - 1
        axes[row_axis], axes[col_axis] = col_axis, row_axis
    return np.ascontiguousarray(tensor.transpose(axes)).reshape(rho.shape)


def partial_trace(rho, dims, keep):
    """Trace out every subsystem not listed in ``keep`` (1-based, order preserved)"""
    dims = _check_subsystems(rho, dims)
    count = len(dims)
    keep = sorted(set(keep))
    if not keep or keep[0] < 1 or keep[-1] > count:
        raise ContractViolation(f"keep must name subsystems in 1..{count}, got {keep}")

    tensor = rho.reshape(dims + dims)
    traced = [s for s in range(1, count + 1) if s not in keep]
    # trace the highest axes first so the remaining axis numbers stay valid
    for system in reversed(traced):
        current = tensor.ndim // 2
        position = [s for s in range(1, count + 1) if s not in traced or s <= system]
        axis = position.index(system)
        tensor = np.trace(tensor, axis1=axis, axis2=current + axis)
    kept = int(np.prod([dims[s - 1] for s in keep]))
    return tensor.reshape(kept, kept)


def basis_digits(d, count):
    """Digits of every flat index, most significant subsystem first"""
    flat = np.arange(d**count)
    powers = d ** np.arange(count - 1, -1, -1)
    return (flat[:, None] // powers[None, :]) % d

