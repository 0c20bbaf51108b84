"""
Full-separability certification of a single SGWS instance.

Below the critical value the verdict rests on a verified decomposition;
above it, on a negative partial-transpose eigenvalue or a violated
Cauchy-Schwarz element pair. Failures end up in the report, not in
exceptions.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from cmatrix import conf
from cmatrix.exceptions import SgwsError
from sep.services.criteria import (
    PptWitness,
    cauchy_schwarz_scan,
    min_ppt_threshold,
    most_negative_ppt,
)
from sep.services.decomposition import (
    ProductDecomposition,
    VerificationRecord,
    decompose_sgws,
    spectral_decomposition,
    verify_decomposition,
)
from sgws.services.states import build_sgws, critical_v

logger = logging.getLogger(__name__)

SEPARABLE = "separable-certified"
ENTANGLED = "entangled-certified"
INCONCLUSIVE = "inconclusive"


@dataclass
class CertReport:
    verdict: str
    threshold_formula: float
    threshold_numeric: Optional[float] = None
    ppt_witness: Optional[PptWitness] = None
    cauchy_schwarz_witness: Optional[object] = None
    decomposition: Optional[ProductDecomposition] = None
    verification: Optional[VerificationRecord] = None
    notes: list = field(default_factory=list)
    tolerances: dict = field(default_factory=conf.tolerances)


def _entanglement_probes(report, rho, dims):
    witness = most_negative_ppt(rho, dims)
    if witness is not None and witness.min_eigenvalue < -conf.tolerance("psd"):
        report.ppt_witness = witness
    violations = cauchy_schwarz_scan(rho, dims)
    if violations:
        report.cauchy_schwarz_witness = max(violations, key=lambda violation: violation.deficit)


def _separable(report, decomp, rho):
    report.decomposition = decomp
    report.verification = verify_decomposition(decomp, rho)
    if report.verification.passed:
        report.verdict = SEPARABLE
    else:
        report.notes.append("decomposition built but failed verification")


def certify(spec, numeric_threshold=False, allow_restriction2_failure=False):
    threshold = critical_v(spec.coeffs, spec.N)
    report = CertReport(verdict=INCONCLUSIVE, threshold_formula=threshold)
    rho = build_sgws(spec)

    if spec.N == 1:
        report.notes.append("a single qudit is trivially separable; spectral decomposition attached")
        _separable(report, spectral_decomposition(rho), rho)
        return report

    if numeric_threshold:
        try:
            report.threshold_numeric = min_ppt_threshold(spec.coeffs, spec.N).v
        except SgwsError as exc:
            report.notes.append(f"numeric threshold unavailable: {exc}")

    restriction_holds = spec.coeffs.restriction2_ok or allow_restriction2_failure
    if spec.v <= threshold + conf.tolerance("decomposition_slack"):
        if restriction_holds:
            if not spec.coeffs.restriction2_ok:
                report.notes.append("restriction (ii) overridden; factors may not be PSD")
            try:
                _separable(report, decompose_sgws(spec, allow_restriction2_failure), rho)
            except SgwsError as exc:
                report.notes.append(f"decomposition failed: {exc}")
        else:
            report.notes.append(
                "restriction (ii) fails "
                f"(eigenvalue {spec.coeffs.restriction2_min_eig:.3e}); no decomposition attempted"
            )
            _entanglement_probes(report, rho, spec.dims)
            if report.ppt_witness or report.cauchy_schwarz_witness:
                report.verdict = ENTANGLED
    else:
        _entanglement_probes(report, rho, spec.dims)
        if report.ppt_witness or report.cauchy_schwarz_witness:
            report.verdict = ENTANGLED
        else:
            report.notes.append("above the critical value but no witness was found numerically")

    logger.info(
        "certify d=%d N=%d v=%.6g: %s (v_c=%.6g)",
        spec.d, spec.N, spec.v, report.verdict, threshold,
    )
    return report
