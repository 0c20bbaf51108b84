"""
SGWS instances: coefficient validation, state construction and the exact
separability threshold v_c = T / (d^N + T).
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from cmatrix import conf
from cmatrix.exceptions import ContractViolation
from cmatrix.services.eigen import min_eigenvalue
from cmatrix.services.linalg import check_dimension
from sgws.exceptions import CoefficientValidationError, NotEntangledError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoeffVector:
    """
    Coefficients alpha_0..alpha_{d-1} of sum_i alpha_i |i...i>.

    Instances come from ``validate_coeffs``; ``T`` and the restriction (ii)
    fields are derived there.
    """

    d: int
    alpha: tuple
    T: float
    restriction2_ok: bool
    restriction2_min_eig: float

    @property
    def array(self):
        return np.array(self.alpha, dtype=np.complex128)

    @property
    def moduli(self):
        return np.abs(self.array)

    def argmax_pair(self):
        """Indices (i, j), i < j, of the largest |alpha_i alpha_j|"""
        order = np.argsort(-self.moduli, kind="stable")
        return tuple(sorted((int(order[0]), int(order[1]))))


@dataclass(frozen=True)
class SgwsSpec:
    """One instance W^{[d^N]}(v)"""

    d: int
    N: int
    coeffs: CoeffVector
    v: float

    def __post_init__(self):
        if self.d < 2 or self.N < 1:
            raise ContractViolation(f"need d >= 2 and N >= 1, got d={self.d}, N={self.N}")
        if self.coeffs.d != self.d:
            raise ContractViolation(f"coefficients are for d={self.coeffs.d}, spec has d={self.d}")
        if not 0.0 <= self.v <= 1.0:
            raise ContractViolation(f"v must lie in [0, 1], got {self.v!r}")
        check_dimension(self.dimension)

    @property
    def dimension(self):
        return self.d**self.N

    @property
    def dims(self):
        return (self.d,) * self.N


def parse_scalar(value):
    """A float, an int, or a rational string such as "2/3" """
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise CoefficientValidationError(f"cannot parse {value!r} as a number") from exc
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CoefficientValidationError(f"cannot parse {value!r} as a number")
    return float(value)


def parse_coeffs(pairs):
    """Coefficient input format: a list of [re, im] pairs; d is the length"""
    if not isinstance(pairs, (list, tuple)) or not pairs:
        raise CoefficientValidationError("coefficients must be a non-empty list of [re, im] pairs")
    alpha = []
    for pair in pairs:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise CoefficientValidationError(f"expected an [re, im] pair, got {pair!r}")
        alpha.append(complex(parse_scalar(pair[0]), parse_scalar(pair[1])))
    return alpha


def max_pair_product(moduli):
    """max_{i != j} |alpha_i| |alpha_j|: the product of the two largest moduli"""
    top = np.sort(moduli)[::-1]
    return float(top[0] * top[1])


def single_qudit_rho(alpha, T, phases=None):
    """(1/d)(I + T sum_{i != j} alpha_i xi_i conj(alpha_j xi_j) |i><j|)"""
    weighted = np.asarray(alpha, dtype=np.complex128)
    if phases is not None:
        weighted = weighted * np.asarray(phases, dtype=np.complex128)
    d = weighted.size
    coherences = T * np.outer(weighted, weighted.conj())
    np.fill_diagonal(coherences, 0.0)
    return (np.eye(d, dtype=np.complex128) + coherences) / d


def validate_coeffs(alpha, d=None):
    d = len(alpha) if d is None else d
    if d < 2 or len(alpha) != d:
        raise CoefficientValidationError(f"expected {d} coefficients with d >= 2, got {len(alpha)}")
    array = np.asarray(alpha, dtype=np.complex128)
    if not np.all(np.isfinite(array)):
        raise CoefficientValidationError("coefficients must be finite")

    norm = float(np.sum(np.abs(array) ** 2))
    if abs(norm - 1.0) > conf.tolerance("normalization"):
        raise CoefficientValidationError(f"sum |alpha_i|^2 = {norm!r}, expected 1")

    moduli = np.abs(array)
    nonzero = int(np.count_nonzero(moduli > conf.tolerance("nonzero")))
    if nonzero < 2:
        raise NotEntangledError(f"only {nonzero} nonzero coefficient(s); the pure state is not entangled")

    T = 1.0 / max_pair_product(moduli)
    lowest = min_eigenvalue(single_qudit_rho(array, T))
    restriction2_ok = lowest >= -conf.tolerance("psd")
    if not restriction2_ok:
        logger.info("restriction (ii) fails for d=%d (min eigenvalue %.3e)", d, lowest)

    return CoeffVector(
        d=d,
        alpha=tuple(complex(a) for a in array),
        T=T,
        restriction2_ok=restriction2_ok,
        restriction2_min_eig=lowest,
    )


def uniform_coeffs(d):
    return validate_coeffs([1 / math.sqrt(d)] * d)


def qubit_coeffs(theta):
    """alpha = (sin theta, cos theta): the two-qubit parametrization"""
    return validate_coeffs([math.sin(theta), math.cos(theta)])


def ghz_index(i, d, N):
    """Flat index of |i i ... i>: i * (d^N - 1) / (d - 1)"""
    return i * (d**N - 1) // (d - 1)


def build_pure_state(coeffs, N):
    d = coeffs.d
    check_dimension(d**N)
    state = np.zeros((d**N, 1), dtype=np.complex128)
    for i, a in enumerate(coeffs.alpha):
        state[ghz_index(i, d, N), 0] = a
    return state


def build_sgws(spec):
    """W = (1 - v) I / d^N + v |psi><psi|"""
    dimension = spec.dimension
    psi = build_pure_state(spec.coeffs, spec.N)
    state = (1.0 - spec.v) * np.eye(dimension, dtype=np.complex128) / dimension
    state += spec.v * (psi @ psi.conj().T)
    return state


def critical_v(coeffs, N):
    """Full-separability threshold T / (d^N + T)"""
    return coeffs.T / (coeffs.d**N + coeffs.T)


def uniform_critical_v(d, N):
    return 1.0 / (d ** (N - 1) + 1)


def critical_v_infimum(d, N):
    """T >= 2 for every normalized vector, so v_c >= 2 / (d^N + 2)"""
    return 2.0 / (d**N + 2)
