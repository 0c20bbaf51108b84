"""
Dispatch of validated run configurations to the certification services.

Every JSON report has the shape
{command, inputs, tolerances, results, witnesses, version}; sweep commands
carry their rows as a pandas DataFrame that renders to CSV.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
from rest_framework.renderers import JSONRenderer

from cmatrix import conf
from cmatrix.exceptions import SgwsError
from ent2q.services.concurrence import (
    TwoQubitState,
    concurrence,
    concurrence_closed_form,
    eof,
)
from sep.serializers import (
    CertReportSerializer,
    PptThresholdSerializer,
    PptWitnessSerializer,
    VerificationRecordSerializer,
    dump_decomposition,
)
from sep.services.certify import certify
from sep.services.conjecture import conjecture_scan
from sep.services.criteria import (
    PptWitness,
    bipartitions,
    min_ppt_threshold,
    ppt_min_eig,
    ppt_threshold,
)
from sep.services.decomposition import decompose_sgws, verify_decomposition
from sgws.services.family import family_coeffs, family_critical_v, family_rho_eigs
from sgws.services.states import (
    SgwsSpec,
    build_sgws,
    critical_v,
    critical_v_infimum,
    qubit_coeffs,
    validate_coeffs,
)
from sgws_certifier import __version__

logger = logging.getLogger(__name__)

FAMILY_COLUMNS = ["theta", "critical_v", "eig_plus", "eig_minus", "zeros"]
FLOAT_FORMAT = "%.17g"


@dataclass
class RunResult:
    command: str
    format: str
    report: dict
    table: Optional[pd.DataFrame] = None
    summary: str = ""


@dataclass
class RunOutcome:
    status: int
    text: str
    result: Optional[RunResult] = None
    error: Optional[SgwsError] = None


@dataclass
class _Report:
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    table: Optional[pd.DataFrame] = None
    summary: str = ""


def theta_form(config):
    form = config.get("theta_form", "auto")
    if form == "auto":
        return "qubit" if config["d"] == 2 else "family"
    return form


def resolve_coeffs(config):
    if "alpha" in config:
        return validate_coeffs(config["alpha"], config["d"])
    if theta_form(config) == "qubit":
        return qubit_coeffs(config["theta"])
    return family_coeffs(config["d"], config["theta"])


def describe_inputs(config):
    inputs = {}
    for key, value in config.items():
        if key == "alpha":
            value = [[float(a.real), float(a.imag)] for a in value]
        elif key == "v_range":
            value = {"start": value[0], "stop": value[1], "steps": value[2]}
        elif key == "subset":
            value = sorted(value)
        inputs[key] = value
    if "theta" in config:
        inputs["theta_form"] = theta_form(config)
    return inputs


def _threshold(config):
    coeffs = resolve_coeffs(config)
    N = config["N"]
    report = _Report()
    report.results = {
        "critical_v": critical_v(coeffs, N),
        "T": coeffs.T,
        "critical_v_infimum": critical_v_infimum(coeffs.d, N),
        "restriction2_ok": coeffs.restriction2_ok,
        "restriction2_min_eig": coeffs.restriction2_min_eig,
    }
    if config.get("numeric_threshold"):
        threshold = min_ppt_threshold(coeffs, N)
        report.results["threshold_numeric"] = threshold.v
        report.witnesses["ppt_threshold"] = PptThresholdSerializer(threshold).data
    report.summary = f"critical v = {report.results['critical_v']:.17g}"
    return report


def _certify(config):
    coeffs = resolve_coeffs(config)
    spec = SgwsSpec(coeffs.d, config["N"], coeffs, config["v"])
    cert = certify(
        spec,
        numeric_threshold=config.get("numeric_threshold", False),
        allow_restriction2_failure=config.get("override_restriction2", False),
    )
    data = CertReportSerializer(cert).data
    report = _Report()
    report.results = {
        key: data[key]
        for key in ("verdict", "threshold_formula", "threshold_numeric", "decomposition", "verification", "notes")
    }
    report.witnesses = {"ppt": data["ppt_witness"], "cauchy_schwarz": data["cauchy_schwarz_witness"]}
    report.summary = f"verdict: {cert.verdict}"
    return report


def _decompose(config):
    coeffs = resolve_coeffs(config)
    spec = SgwsSpec(coeffs.d, config["N"], coeffs, config["v"])
    decomp = decompose_sgws(spec, config.get("override_restriction2", False))
    record = verify_decomposition(decomp, build_sgws(spec))
    report = _Report()
    report.results = {
        "critical_v": critical_v(coeffs, spec.N),
        "decomposition": dump_decomposition(decomp),
        "verification": VerificationRecordSerializer(record).data,
    }
    report.summary = f"{len(decomp.terms)} terms, verification {'passed' if record.passed else 'FAILED'}"
    return report


def _ppt(config):
    coeffs = resolve_coeffs(config)
    N = config["N"]
    spec = SgwsSpec(coeffs.d, N, coeffs, config["v"])
    rho = build_sgws(spec)
    subsets = [tuple(sorted(config["subset"]))] if "subset" in config else bipartitions(N)

    entries = []
    lowest = None
    for subset in subsets:
        value = ppt_min_eig(rho, spec.dims, subset)
        threshold = ppt_threshold(coeffs, N, subset)
        entries.append(
            {
                "subset": list(subset),
                "min_eigenvalue": value,
                "threshold": PptThresholdSerializer(threshold).data,
            }
        )
        if lowest is None or value < lowest.min_eigenvalue:
            lowest = PptWitness(subset=subset, min_eigenvalue=value)

    report = _Report()
    report.results = {"critical_v": critical_v(coeffs, N), "partitions": entries}
    if lowest is not None and lowest.min_eigenvalue < -conf.tolerance("psd"):
        report.witnesses["ppt"] = PptWitnessSerializer(lowest).data
    report.summary = f"{len(entries)} bipartition(s) checked"
    return report


def _concurrence(config):
    coeffs = resolve_coeffs(config)
    if "v_range" in config:
        start, stop, steps = config["v_range"]
        grid = [float(v) for v in np.linspace(start, stop, steps)]
    else:
        grid = [config["v"]]
    closed_form = "theta" in config and theta_form(config) == "qubit"

    rows = []
    for v in grid:
        state = TwoQubitState(build_sgws(SgwsSpec(2, 2, coeffs, v)))
        value = concurrence(state)
        row = {"v": v, "concurrence": value, "eof": eof(value)}
        if closed_form:
            result = concurrence_closed_form(v, config["theta"])
            row.update(
                closed_form=result.value,
                closed_form_in_domain=result.in_domain,
                closed_form_source=result.source,
            )
        rows.append(row)

    report = _Report()
    report.results = {"critical_v": critical_v(coeffs, 2), "rows": rows}
    report.table = pd.DataFrame(rows)
    report.summary = f"{len(rows)} visibility value(s)"
    return report


def _family_scan(config):
    d, N, steps = config["d"], config["N"], config["theta_steps"]
    rows = []
    for k in range(steps):
        theta = k * (math.pi / 2) / steps
        eigs = family_rho_eigs(d, theta)
        rows.append(
            {
                "theta": theta,
                "critical_v": family_critical_v(d, N, theta),
                "eig_plus": eigs[0],
                "eig_minus": eigs[1],
                "zeros": d - 2,
            }
        )
    report = _Report()
    report.table = pd.DataFrame(rows, columns=FAMILY_COLUMNS)
    report.results = {"rows": rows}
    report.summary = f"{steps} theta step(s)"
    return report


def _conjecture_scan(config):
    d, N = config["d"], config["N"]
    rows = []
    for row in conjecture_scan(d, N, config["samples"], config["seed"]):
        record = {"sample": row.sample}
        for i, a in enumerate(row.alpha):
            record[f"alpha{i}_re"] = a.real
            record[f"alpha{i}_im"] = a.imag
        record.update(
            restriction2_min_eig=row.restriction2_min_eig,
            formula_v=row.formula_v,
            ppt_v=row.ppt_v,
            subset=" ".join(str(s) for s in row.subset),
            difference=row.difference,
        )
        rows.append(record)
    report = _Report()
    report.table = pd.DataFrame(rows)
    report.results = {"samples": config["samples"], "kept": len(rows), "rows": rows}
    report.summary = f"{len(rows)} of {config['samples']} sample(s) fail restriction (ii)"
    return report


HANDLERS = {
    "threshold": _threshold,
    "certify": _certify,
    "decompose": _decompose,
    "ppt": _ppt,
    "concurrence": _concurrence,
    "family_scan": _family_scan,
    "conjecture_scan": _conjecture_scan,
}


def dispatch(config):
    """Run one validated configuration; SgwsError propagates"""
    command = config["command"]
    logger.info("running %s", command)
    outcome = HANDLERS[command](config)
    report = {
        "command": command,
        "inputs": describe_inputs(config),
        "tolerances": conf.tolerances(),
        "results": outcome.results,
        "witnesses": outcome.witnesses,
        "version": __version__,
    }
    return RunResult(
        command=command,
        format=config.get("format", "json"),
        report=report,
        table=outcome.table,
        summary=outcome.summary,
    )


def render(result):
    if result.format == "csv" and result.table is not None:
        return result.table.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return JSONRenderer().render(result.report, renderer_context={"indent": 2}).decode() + "\n"


def run(config):
    """Exit status and emitted text: 0 with the report, or the error's exit code with its message"""
    try:
        result = dispatch(config)
    except SgwsError as exc:
        logger.info("%s failed: %s", config.get("command"), exc)
        return RunOutcome(status=exc.exit_code, text=str(exc), error=exc)
    return RunOutcome(status=0, text=render(result), result=result)
