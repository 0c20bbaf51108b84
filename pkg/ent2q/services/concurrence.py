"""
Wootters concurrence and entanglement of formation for two qubits, plus the
closed-form concurrence of the two-qubit SGWS with alpha = (sin t, cos t).
"""

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from cmatrix import conf
from cmatrix.exceptions import ContractViolation
from cmatrix.services.eigen import eigenvalues, min_eigenvalue, psd_sqrt
from cmatrix.services.linalg import check_hermitian, symmetrize
from ent2q.exceptions import ConcurrenceDomainError

logger = logging.getLogger(__name__)

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)

NUMERIC = "numeric"
CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class TwoQubitState:
    rho: np.ndarray

    def __post_init__(self):
        if self.rho.shape != (4, 4):
            raise ContractViolation(f"two-qubit states are 4x4, got shape {self.rho.shape}")
        check_hermitian(self.rho)
        trace = float(np.trace(self.rho).real)
        if abs(trace - 1.0) > conf.tolerance("normalization"):
            raise ContractViolation(f"state has trace {trace!r}, expected 1")
        lowest = min_eigenvalue(self.rho)
        if lowest < -conf.tolerance("psd"):
            raise ContractViolation(f"state is not positive semidefinite (eigenvalue {lowest:.3e})")


def werner_state(v, theta):
    """(1 - v) I/4 + v |psi><psi| with psi = sin t |00> + cos t |11>"""
    if not 0.0 <= v <= 1.0:
        raise ConcurrenceDomainError(f"v must lie in [0, 1], got {v!r}")
    psi = np.array([math.sin(theta), 0.0, 0.0, math.cos(theta)], dtype=np.complex128)
    rho = (1.0 - v) * np.eye(4, dtype=np.complex128) / 4 + v * np.outer(psi, psi.conj())
    return TwoQubitState(rho)


def spin_flip(state):
    """(sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)"""
    return SPIN_FLIP @ state.rho.conj() @ SPIN_FLIP


def concurrence(state):
    root = psd_sqrt(state.rho)
    product = symmetrize(root @ spin_flip(state) @ root)
    lambdas = np.sort(eigenvalues(psd_sqrt(product)))[::-1]
    value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]
    return float(min(1.0, max(0.0, value)))


def binary_entropy(x):
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def eof(c):
    """Entanglement of formation h((1 + sqrt(1 - c^2)) / 2)"""
    slack = conf.tolerance("normalization")
    if not -slack <= c <= 1.0 + slack:
        raise ConcurrenceDomainError(f"concurrence must lie in [0, 1], got {c!r}")
    c = min(1.0, max(0.0, c))
    return binary_entropy((1 + math.sqrt(1 - c * c)) / 2)


def werner_concurrence(v, theta):
    return concurrence(werner_state(v, theta))


def zero_set_boundary(theta):
    """Largest v with zero concurrence: 1 / (4 sin t cos t + 1)"""
    return 1.0 / (4 * math.sin(theta) * math.cos(theta) + 1)


@dataclass(frozen=True)
class ClosedFormGrouping:
    """
    C = max(0, a (sqrt(A+) - sqrt(A-)) + b (v - 1)) with
    A+- = 1 + 2v + v^2 - 4v^2 cos 4t +- 4v sin 2t sqrt(radicand).
    """

    a: float
    b: float
    radicand: str

    def inner(self, v, theta):
        printed = (1 - v) ** 2 + 2 * v * v * math.cos(4 * theta)
        return printed if self.radicand == "printed" else 2.0 - printed

    def evaluate(self, v, theta):
        """The formula value, or None where a square root leaves the reals"""
        inner = self.inner(v, theta)
        if inner < 0.0:
            return None
        base = 1 + 2 * v + v * v - 4 * v * v * math.cos(4 * theta)
        cross = 4 * v * math.sin(2 * theta) * math.sqrt(inner)
        plus, minus = base + cross, base - cross
        if min(plus, minus) < -conf.tolerance("hermitian"):
            return None
        root_gap = math.sqrt(max(plus, 0.0)) - math.sqrt(max(minus, 0.0))
        return max(0.0, self.a * root_gap + self.b * (v - 1))


def closed_form_candidates():
    return [
        ClosedFormGrouping(a=a, b=factor * a, radicand=radicand)
        for a, factor, radicand in itertools.product((0.25, 1.0), (0.5, 2.0), ("printed", "complement"))
    ]


def select_closed_form_grouping(grid):
    """
    The unique candidate grouping matching every (v, theta, concurrence)
    row of ``grid`` to the closed-form tolerance.
    """
    tol = conf.tolerance("closed_form_concurrence")
    matches = []
    for candidate in closed_form_candidates():
        agrees = True
        for v, theta, expected in grid:
            value = candidate.evaluate(v, theta)
            if value is None or abs(value - expected) > tol:
                agrees = False
                break
        if agrees:
            matches.append(candidate)
    if len(matches) != 1:
        raise ContractViolation(f"expected exactly one matching grouping, found {len(matches)}")
    logger.debug("closed-form grouping selected: %s", matches[0])
    return matches[0]


SELECTED_GROUPING = ClosedFormGrouping(a=0.25, b=0.5, radicand="complement")


@dataclass(frozen=True)
class ClosedFormResult:
    value: float
    radicand: float
    in_domain: bool
    source: str


def concurrence_closed_form(v, theta):
    """
    Closed-form concurrence of the two-qubit SGWS, falling back to the
    numeric Wootters value where the formula leaves its domain.
    """
    if not 0.0 <= v <= 1.0:
        raise ConcurrenceDomainError(f"v must lie in [0, 1], got {v!r}")
    radicand = SELECTED_GROUPING.inner(v, theta)
    value = SELECTED_GROUPING.evaluate(v, theta)
    if value is None:
        logger.warning("closed form undefined at v=%.6g theta=%.6g; using numeric concurrence", v, theta)
        return ClosedFormResult(
            value=werner_concurrence(v, theta), radicand=radicand, in_domain=False, source=NUMERIC
        )
    return ClosedFormResult(value=value, radicand=radicand, in_domain=True, source=CLOSED_FORM)
