"""
Entanglement probes: the Cauchy-Schwarz necessary condition on matrix
elements, partial-transpose tests over bipartitions, and the bisection
that locates the PPT boundary of an SGWS in v.
"""

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from cmatrix import conf
from cmatrix.exceptions import ContractViolation, ShapeError
from cmatrix.services.eigen import min_eigenvalue
from cmatrix.services.linalg import basis_digits, partial_transpose, symmetrize
from sgws.services.states import SgwsSpec, build_sgws

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CauchySchwarzViolation:
    """sqrt(rho_nn rho_mm) < |rho_{mu nu}| for digit tuples n, m, mu, nu"""

    n: tuple
    m: tuple
    mu: tuple
    nu: tuple
    lhs: float
    rhs: float

    @property
    def deficit(self):
        return self.rhs - self.lhs


@dataclass(frozen=True)
class PptWitness:
    subset: tuple
    min_eigenvalue: float


@dataclass(frozen=True)
class PptThreshold:
    """
    Largest v whose partial transpose stays PSD (within the PSD tolerance).

    ``crossed`` is False when PPT holds all the way to v = 1.
    """

    subset: tuple
    v: float
    crossed: bool


def bipartitions(N):
    """
    Subsets naming one side of each split, 1-based.

    Every nontrivial split (subsets of {2..N}) for N <= 4, the N single-qudit
    splits beyond that.
    """
    if N < 2:
        return []
    if N > 4:
        return [(r,) for r in range(1, N + 1)]
    others = range(2, N + 1)
    return [subset for size in range(1, N) for subset in itertools.combinations(others, size)]


def _homogeneous_dimension(rho, dims):
    dims = tuple(int(d) for d in dims)
    if len(set(dims)) != 1:
        raise ShapeError(f"the Cauchy-Schwarz scan needs equal subsystem dimensions, got {dims}")
    total = dims[0] ** len(dims)
    if rho.shape != (total, total):
        raise ShapeError(f"matrix of shape {rho.shape} does not match subsystem dimensions {dims}")
    return dims[0], len(dims)


def cauchy_schwarz_scan(rho, dims):
    """
    Check sqrt(rho_nn rho_mm) >= |rho_{mu nu}| for every pair n, m differing
    in every digit and every (mu_r, nu_r) in {(n_r, m_r), (m_r, n_r)}.

    Returns the violations in enumeration order; an empty list means the
    necessary condition found nothing, not that rho is separable.
    """
    d, count = _homogeneous_dimension(rho, dims)
    tol = conf.tolerance("cauchy_schwarz")
    digits = basis_digits(d, count)
    powers = d ** np.arange(count - 1, -1, -1)
    choices = np.array(list(itertools.product((False, True), repeat=count)))
    diagonal = np.clip(np.diag(rho).real, 0.0, None)
    flat = np.arange(d**count)

    violations = []
    for n in range(d**count):
        partners = flat[(flat > n) & np.all(digits != digits[n], axis=1)]
        if partners.size == 0:
            continue
        n_digits = digits[n]
        m_digits = digits[partners]
        lhs = np.sqrt(diagonal[n] * diagonal[partners])

        mu = np.where(choices[None, :, :], m_digits[:, None, :], n_digits[None, None, :])
        nu = np.where(choices[None, :, :], n_digits[None, None, :], m_digits[:, None, :])
        rhs = np.abs(rho[mu @ powers, nu @ powers])

        for p, c in zip(*np.nonzero(lhs[:, None] < rhs - tol)):
            violations.append(
                CauchySchwarzViolation(
                    n=tuple(int(x) for x in n_digits),
                    m=tuple(int(x) for x in m_digits[p]),
                    mu=tuple(int(x) for x in mu[p, c]),
                    nu=tuple(int(x) for x in nu[p, c]),
                    lhs=float(lhs[p]),
                    rhs=float(rhs[p, c]),
                )
            )
    logger.debug("cauchy-schwarz scan d=%d N=%d: %d violations", d, count, len(violations))
    return violations


def designated_cauchy_schwarz_pair(coeffs, N):
    """
    The element pair behind the necessary condition (1 - v)/d^N >= v |alpha_i alpha_j|:
    n = (i, j, ..., j), m = (j, i, ..., i), mu = (i, ..., i), nu = (j, ..., j)
    for the argmax pair (i, j).
    """
    if N < 2:
        raise ContractViolation("the designated pair needs N >= 2")
    i, j = coeffs.argmax_pair()
    n = (i,) + (j,) * (N - 1)
    m = (j,) + (i,) * (N - 1)
    return n, m, (i,) * N, (j,) * N


def ppt_min_eig(rho, dims, subset):
    return min_eigenvalue(symmetrize(partial_transpose(rho, dims, subset)))


def most_negative_ppt(rho, dims):
    """PptWitness for the split with the lowest partial-transpose eigenvalue"""
    splits = bipartitions(len(dims))
    if not splits:
        return None
    values = [(ppt_min_eig(rho, dims, subset), subset) for subset in splits]
    lowest, subset = min(values, key=lambda item: item[0])
    return PptWitness(subset=tuple(subset), min_eigenvalue=lowest)


def ppt_threshold(coeffs, N, subset):
    """Bisection on v in [0, 1] for the zero crossing of the PT minimum eigenvalue"""
    subset = tuple(sorted(subset))
    dims = (coeffs.d,) * N
    floor = -conf.tolerance("psd")

    def lowest(v):
        return ppt_min_eig(build_sgws(SgwsSpec(coeffs.d, N, coeffs, v)), dims, subset)

    if lowest(1.0) >= floor:
        logger.info("PPT holds up to v = 1 for subset %s", subset)
        return PptThreshold(subset=subset, v=1.0, crossed=False)

    low, high = 0.0, 1.0
    for _ in range(conf.bisection_iterations()):
        middle = (low + high) / 2
        if lowest(middle) >= floor:
            low = middle
        else:
            high = middle
    logger.debug("PPT threshold for subset %s: %.17g", subset, low)
    return PptThreshold(subset=subset, v=low, crossed=True)


def min_ppt_threshold(coeffs, N):
    """The smallest bisected threshold over every split"""
    thresholds = [ppt_threshold(coeffs, N, subset) for subset in bipartitions(N)]
    if not thresholds:
        raise ContractViolation("PPT thresholds need N >= 2")
    return min(thresholds, key=lambda threshold: threshold.v)
