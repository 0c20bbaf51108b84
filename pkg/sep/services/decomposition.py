"""
Constructive fully separable decompositions of SGWS.

At the critical value the state splits into projector terms
|alpha_i|^2 (|i><i|)^{(x)N} and the matrix
rho^(N) = (1/d^N)(I + T sum_{i != j} alpha_i conj(alpha_j) |i..i><j..j|),
which the inductive phase construction expands into product terms: every
step averages over the 4^d phase vectors z, appends the factor |z><z|/d and
multiplies the first factor's phases by conj(z). Below the critical value
the identity (I/d)^{(x)N} absorbs the remaining weight.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from cmatrix import conf
from cmatrix.exceptions import ContractViolation, ShapeError
from cmatrix.services.eigen import hermitian_eigen, min_eigenvalue
from cmatrix.services.linalg import check_dimension, frobenius_distance
from sep.exceptions import AboveThresholdError, TermCapError
from sep.services.phases import phase_exponents, phases_from_exponents
from sgws.exceptions import Restriction2Error
from sgws.services.states import critical_v, single_qudit_rho

logger = logging.getLogger(__name__)

PROJECTOR = "projector"
RHO = "rho"
IDENTITY = "identity"
SPECTRAL = "spectral"

# keeps one batch of reconstructed terms around 64 MiB
RECONSTRUCT_BATCH_ENTRIES = 2**22


@dataclass(frozen=True)
class ProductTerm:
    weight: float
    factors: tuple
    kind: str = RHO


@dataclass
class ProductDecomposition:
    """sum_lambda weight_lambda factor_1 (x) ... (x) factor_N"""

    d: int
    N: int
    terms: list = field(default_factory=list)
    restriction2_override: bool = False

    @property
    def dimension(self):
        return self.d**self.N

    def weight_sum(self):
        return math.fsum(term.weight for term in self.terms)

    def marginals(self):
        """Single-qudit reduced states sum_lambda weight_lambda factor_r, one per party"""
        totals = [np.zeros((self.d, self.d), dtype=np.complex128) for _ in range(self.N)]
        for term in self.terms:
            for r, factor in enumerate(term.factors):
                totals[r] += term.weight * factor
        return totals

    def summary(self):
        counts = {}
        for term in self.terms:
            counts[term.kind] = counts.get(term.kind, 0) + 1
        return {
            "d": self.d,
            "N": self.N,
            "term_count": len(self.terms),
            "terms_by_kind": counts,
            "marginals": self.marginals(),
        }


@dataclass(frozen=True)
class VerificationRecord:
    reconstruction_error: float
    min_factor_eig: float
    weight_sum_error: float
    passed: bool


def _frozen(matrix):
    matrix.setflags(write=False)
    return matrix


def rho1_with_phases(coeffs, phases, allow_restriction2_failure=False):
    """(1/d)(I + T sum_{i != j} alpha_i xi_i conj(alpha_j xi_j) |i><j|)"""
    if len(phases) != coeffs.d:
        raise ContractViolation(f"expected {coeffs.d} phases, got {len(phases)}")
    if not coeffs.restriction2_ok:
        if not allow_restriction2_failure:
            raise Restriction2Error(coeffs.restriction2_min_eig)
        logger.warning(
            "restriction (ii) overridden: single-qudit factor has eigenvalue %.3e",
            coeffs.restriction2_min_eig,
        )
    return single_qudit_rho(coeffs.array, coeffs.T, phases)


def phase_projector(z):
    """(1/d)(I + sum_{r != s} z_r conj(z_s) |r><s|), which is |z><z| / d"""
    z = np.asarray(z, dtype=np.complex128)
    return np.outer(z, z.conj()) / z.size


def rho_n_term_count(d, N):
    return (4**d) ** (N - 1)


def decompose_rho_N(coeffs, N, allow_restriction2_failure=False):
    """
    Fully expanded induction for rho^(N): (4^d)^(N-1) terms of weight
    4^(-d(N-1)), enumerated with the earlier phase index outermost.
    """
    if N < 1:
        raise ContractViolation(f"N must be at least 1, got {N}")
    d = coeffs.d
    check_dimension(d**N)
    count = rho_n_term_count(d, N)
    cap = conf.max_terms()
    if count > cap:
        raise TermCapError(count, cap)
    if not coeffs.restriction2_ok and not allow_restriction2_failure:
        raise Restriction2Error(coeffs.restriction2_min_eig)

    decomp = ProductDecomposition(d=d, N=N, restriction2_override=not coeffs.restriction2_ok)
    if N == 1:
        factor = rho1_with_phases(coeffs, [1.0] * d, allow_restriction2_failure)
        decomp.terms.append(ProductTerm(weight=1.0, factors=(_frozen(factor),)))
        return decomp

    exponents = phase_exponents(d)
    projectors = [_frozen(phase_projector(z)) for z in phases_from_exponents(exponents)]

    # first-factor phase exponents of every term, and the phase index of each later factor
    xi = np.zeros((1, d), dtype=np.int64)
    labels = np.zeros((1, 0), dtype=np.int64)
    for _ in range(N - 1):
        xi = ((xi[:, None, :] - exponents[None, :, :]) % 4).reshape(-1, d)
        labels = np.concatenate(
            [np.repeat(labels, 4**d, axis=0), np.tile(np.arange(4**d), labels.shape[0])[:, None]],
            axis=1,
        )

    weight = 4.0 ** (-d * (N - 1))
    first_factors = {}
    for row, later in zip(xi, labels):
        key = tuple(int(e) for e in row)
        if key not in first_factors:
            first_factors[key] = _frozen(
                single_qudit_rho(coeffs.array, coeffs.T, phases_from_exponents(row))
            )
        factors = (first_factors[key],) + tuple(projectors[k] for k in later)
        decomp.terms.append(ProductTerm(weight=weight, factors=factors))

    if not coeffs.restriction2_ok:
        lowest = min(min_eigenvalue(f) for f in first_factors.values())
        logger.warning("decomposition contains a non-PSD factor (eigenvalue %.3e)", lowest)
    logger.debug("rho^(N) expansion d=%d N=%d: %d terms", d, N, len(decomp.terms))
    return decomp


def identity_term(d, N, weight):
    identity = _frozen(np.eye(d, dtype=np.complex128) / d)
    return ProductTerm(weight=weight, factors=(identity,) * N, kind=IDENTITY)


def decompose_sgws(spec, allow_restriction2_failure=False):
    """
    ratio * [v_c sum_i |alpha_i|^2 (|i><i|)^{(x)N} + (1 - v_c) rho^(N)]
    + (1 - ratio) (I/d)^{(x)N}, with ratio = v / v_c.
    """
    coeffs, d, N = spec.coeffs, spec.d, spec.N
    threshold = critical_v(coeffs, N)
    if spec.v > threshold + conf.tolerance("decomposition_slack"):
        raise AboveThresholdError(spec.v, threshold)
    ratio = min(1.0, spec.v / threshold)

    decomp = ProductDecomposition(d=d, N=N, restriction2_override=not coeffs.restriction2_ok)
    if ratio > 0.0:
        populations = coeffs.moduli**2
        norm = math.fsum(populations)
        for i, population in enumerate(populations):
            if coeffs.moduli[i] <= conf.tolerance("nonzero"):
                continue
            basis = np.zeros((d, d), dtype=np.complex128)
            basis[i, i] = 1.0
            decomp.terms.append(
                ProductTerm(
                    weight=ratio * threshold * population / norm,
                    factors=(_frozen(basis),) * N,
                    kind=PROJECTOR,
                )
            )
        expanded = decompose_rho_N(coeffs, N, allow_restriction2_failure)
        scale = ratio * (1.0 - threshold)
        decomp.terms.extend(
            ProductTerm(weight=scale * term.weight, factors=term.factors) for term in expanded.terms
        )
    if ratio < 1.0:
        decomp.terms.append(identity_term(d, N, 1.0 - ratio))

    logger.info(
        "decomposed SGWS d=%d N=%d v=%.6g (v_c=%.6g) into %d terms",
        d, N, spec.v, threshold, len(decomp.terms),
    )
    return decomp


def spectral_decomposition(rho):
    """Single-party decomposition: eigenvalue-weighted eigenprojectors"""
    result = hermitian_eigen(rho)
    terms = []
    for value, vector in zip(result.eigenvalues, result.eigenvectors.T):
        if value <= 0.0:
            continue
        terms.append(
            ProductTerm(
                weight=float(value),
                factors=(_frozen(np.outer(vector, vector.conj())),),
                kind=SPECTRAL,
            )
        )
    return ProductDecomposition(d=rho.shape[0], N=1, terms=terms)


def _batched_kron(stacks):
    result = stacks[0]
    for factor in stacks[1:]:
        batch, rows, cols = result.shape
        _, d_rows, d_cols = factor.shape
        result = np.einsum("bij,bkl->bikjl", result, factor).reshape(
            batch, rows * d_rows, cols * d_cols
        )
    return result


def reconstruct(decomp):
    """sum_lambda p_lambda (x)_r factor_r, assembled in batches"""
    dimension = decomp.dimension
    check_dimension(dimension)
    total = np.zeros((dimension, dimension), dtype=np.complex128)
    batch_size = max(1, RECONSTRUCT_BATCH_ENTRIES // (dimension * dimension))
    for start in range(0, len(decomp.terms), batch_size):
        batch = decomp.terms[start:start + batch_size]
        weights = np.array([term.weight for term in batch])
        stacks = [np.stack([term.factors[r] for term in batch]) for r in range(decomp.N)]
        total += np.tensordot(weights, _batched_kron(stacks), axes=1)
    return total


def _distinct_factors(decomp):
    by_identity = {}
    for term in decomp.terms:
        for factor in term.factors:
            by_identity.setdefault(id(factor), factor)
    by_value = {}
    for factor in by_identity.values():
        by_value.setdefault(factor.tobytes(), factor)
    return list(by_value.values())


def verify_decomposition(decomp, target):
    """Reconstruction error, lowest factor eigenvalue and weight-sum error, with the verdict"""
    if target.shape != (decomp.dimension, decomp.dimension):
        raise ShapeError(
            f"decomposition of dimension {decomp.dimension} cannot reconstruct a {target.shape} matrix"
        )
    if not decomp.terms:
        return VerificationRecord(
            reconstruction_error=float(np.linalg.norm(target)),
            min_factor_eig=0.0,
            weight_sum_error=1.0,
            passed=False,
        )

    error = frobenius_distance(reconstruct(decomp), target)
    lowest = min(min_eigenvalue(factor) for factor in _distinct_factors(decomp))
    weight_error = abs(decomp.weight_sum() - 1.0)
    passed = (
        error <= conf.tolerance("reconstruction")
        and lowest >= -conf.tolerance("psd")
        and weight_error <= conf.tolerance("weight_sum")
        and all(term.weight > 0.0 for term in decomp.terms)
    )
    record = VerificationRecord(
        reconstruction_error=error,
        min_factor_eig=lowest,
        weight_sum_error=weight_error,
        passed=passed,
    )
    logger.debug("verification: %s", record)
    return record
