"""
Exploratory comparison of the critical-value formula with the numerical
PPT boundary for coefficient vectors that fail restriction (ii).

Uniforms come from numpy's counter-based Philox generator keyed by the
seed; Box-Muller turns each pair into a complex Gaussian entry.
"""

import logging
from dataclasses import dataclass

import numpy as np

from cmatrix.exceptions import ContractViolation
from cmatrix.services.linalg import check_dimension
from sep.services.criteria import min_ppt_threshold
from sgws.services.states import critical_v, validate_coeffs

logger = logging.getLogger(__name__)

MAX_SCAN_DIMENSION = 256


@dataclass(frozen=True)
class ConjectureRow:
    sample: int
    alpha: tuple
    restriction2_min_eig: float
    formula_v: float
    ppt_v: float
    subset: tuple
    difference: float


def sample_alpha(rng, d):
    """Normalized complex Gaussian vector from 2d uniforms"""
    u = rng.random(2 * d)
    radius = np.sqrt(-2.0 * np.log1p(-u[:d]))
    entries = radius * np.exp(2j * np.pi * u[d:])
    return entries / np.linalg.norm(entries)


def conjecture_scan(d, N, samples, seed):
    if N < 2:
        raise ContractViolation(f"the scan compares PPT thresholds, which need N >= 2, got N={N}")
    if samples < 0:
        raise ContractViolation(f"samples must be non-negative, got {samples}")
    if d**N > MAX_SCAN_DIMENSION:
        raise ContractViolation(f"d^N = {d**N} exceeds the scan limit of {MAX_SCAN_DIMENSION}")
    check_dimension(d**N)

    rng = np.random.Generator(np.random.Philox(key=seed))
    rows = []
    for index in range(samples):
        coeffs = validate_coeffs(list(sample_alpha(rng, d)), d)
        if coeffs.restriction2_ok:
            continue
        formula_v = critical_v(coeffs, N)
        threshold = min_ppt_threshold(coeffs, N)
        rows.append(
            ConjectureRow(
                sample=index,
                alpha=coeffs.alpha,
                restriction2_min_eig=coeffs.restriction2_min_eig,
                formula_v=formula_v,
                ppt_v=threshold.v,
                subset=threshold.subset,
                difference=threshold.v - formula_v,
            )
        )
    logger.info(
        "conjecture scan d=%d N=%d seed=%d: %d of %d samples fail restriction (ii)",
        d, N, seed, len(rows), samples,
    )
    return rows
