import io
import json
import tempfile
from pathlib import Path
from unittest.mock import patch

import pandas as pd
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from cmatrix.exceptions import NumericError
from sep.serializers import load_decomposition
from sep.services.decomposition import verify_decomposition
from sgws.services.family import family_critical_v
from sgws.services.states import SgwsSpec, build_sgws, validate_coeffs

THIRDS_JSON = '[["2/3", 0], ["2/3", 0], ["1/3", 0]]'
THIRDS_BODY = [["2/3", 0], ["2/3", 0], ["1/3", 0]]
REPORT_KEYS = {"command", "inputs", "tolerances", "results", "witnesses", "version"}


def run_command(*args):
    stdout, stderr = io.StringIO(), io.StringIO()
    call_command(*args, stdout=stdout, stderr=stderr)
    return stdout.getvalue()


class ThresholdCommandTests(SimpleTestCase):
    """Test the threshold command"""

    def test_rational_thirds(self):
        report = json.loads(run_command("threshold", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON))

        self.assertEqual(set(report), REPORT_KEYS)
        self.assertEqual(report["command"], "threshold")
        self.assertAlmostEqual(report["results"]["critical_v"], 0.2, places=12)
        self.assertAlmostEqual(report["results"]["T"], 2.25, places=12)
        self.assertEqual(report["tolerances"]["psd"], 1e-10)

    def test_truncated_decimals_rejected(self):
        alpha = "[[0.6667, 0], [0.6667, 0], [0.3333, 0]]"

        with self.assertRaises(CommandError) as ctx:
            run_command("threshold", "--d", "3", "--N", "2", "--alpha", alpha)

        self.assertEqual(ctx.exception.returncode, 1)

    def test_numeric_threshold(self):
        report = json.loads(
            run_command("threshold", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON, "--numeric-threshold")
        )

        self.assertAlmostEqual(report["results"]["threshold_numeric"], 0.2, delta=1e-6)

    def test_alpha_and_theta_exclusive(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("threshold", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON, "--theta", "0.3")

        self.assertEqual(ctx.exception.returncode, 1)

    def test_missing_dimension(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("threshold", "--N", "2", "--theta", "0.3")

        self.assertEqual(ctx.exception.returncode, 1)

    def test_malformed_alpha(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("threshold", "--d", "2", "--N", "2", "--alpha", "[[1, 0]")

        self.assertEqual(ctx.exception.returncode, 1)

    def test_alpha_length(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("threshold", "--d", "2", "--N", "2", "--alpha", THIRDS_JSON)

        self.assertEqual(ctx.exception.returncode, 1)


class CertifyCommandTests(SimpleTestCase):
    """Test the certify command"""

    def test_qubit_theta_entangled(self):
        report = json.loads(
            run_command("certify", "--d", "2", "--N", "2", "--theta", "0.7854", "--v", "0.34")
        )

        self.assertEqual(report["results"]["verdict"], "entangled-certified")
        self.assertLess(report["witnesses"]["ppt"]["min_eigenvalue"], -1e-10)
        self.assertEqual(report["inputs"]["theta_form"], "qubit")

    def test_thirds_separable(self):
        report = json.loads(
            run_command("certify", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON, "--v", "0.19")
        )

        self.assertEqual(report["results"]["verdict"], "separable-certified")
        self.assertTrue(report["results"]["verification"]["passed"])
        self.assertEqual(report["results"]["decomposition"]["term_count"], 68)

    def test_deterministic(self):
        args = ("certify", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON, "--v", "0.21")

        self.assertEqual(run_command(*args), run_command(*args))

    def test_visibility_required(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("certify", "--d", "2", "--N", "2", "--theta", "0.3")

        self.assertEqual(ctx.exception.returncode, 1)

    def test_numeric_failure_exit_code(self):
        with patch("cli.services.runner.certify", side_effect=NumericError("Jacobi sweeps exhausted", 1e-3)):
            with self.assertRaises(CommandError) as ctx:
                run_command("certify", "--d", "2", "--N", "2", "--theta", "0.3", "--v", "0.2")

        self.assertEqual(ctx.exception.returncode, 2)


class DecomposeCommandTests(SimpleTestCase):
    """Test the decompose command"""

    def test_writes_verifiable_document(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "report.json"
            run_command(
                "decompose", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON, "--v", "1/10", "--output", str(path)
            )
            report = json.loads(path.read_text(encoding="utf-8"))

        self.assertTrue(report["results"]["verification"]["passed"])
        decomp = load_decomposition(report["results"]["decomposition"])
        coeffs = validate_coeffs([2 / 3, 2 / 3, 1 / 3], 3)
        record = verify_decomposition(decomp, build_sgws(SgwsSpec(3, 2, coeffs, 0.1)))
        self.assertTrue(record.passed)

    def test_above_threshold(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("decompose", "--d", "3", "--N", "2", "--alpha", THIRDS_JSON, "--v", "0.21")

        self.assertEqual(ctx.exception.returncode, 1)


class PptCommandTests(SimpleTestCase):
    def test_single_subset(self):
        report = json.loads(
            run_command("ppt", "--d", "2", "--N", "3", "--theta", "0.7853981633974483", "--v", "0.3", "--subset", "3")
        )

        partitions = report["results"]["partitions"]
        self.assertEqual(len(partitions), 1)
        self.assertEqual(partitions[0]["subset"], [3])
        self.assertAlmostEqual(partitions[0]["threshold"]["v"], 0.2, delta=1e-6)
        self.assertEqual(report["witnesses"]["ppt"]["subset"], [3])

    def test_every_bipartition(self):
        report = json.loads(run_command("ppt", "--d", "2", "--N", "3", "--theta", "0.5", "--v", "0.1"))

        self.assertEqual([p["subset"] for p in report["results"]["partitions"]], [[2], [3], [2, 3]])
        self.assertEqual(report["witnesses"], {})

    def test_bad_subset(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("ppt", "--d", "2", "--N", "2", "--theta", "0.5", "--v", "0.1", "--subset", "1,2")

        self.assertEqual(ctx.exception.returncode, 1)


class ConcurrenceCommandTests(SimpleTestCase):
    def test_sweep_csv(self):
        output = run_command("concurrence", "--theta", "0.7853981633974483", "--v-range", "0,1,5")

        frame = pd.read_csv(io.StringIO(output))
        self.assertEqual(len(frame), 5)
        self.assertEqual(
            list(frame.columns),
            ["v", "concurrence", "eof", "closed_form", "closed_form_in_domain", "closed_form_source"],
        )
        self.assertEqual(frame["concurrence"].iloc[0], 0.0)
        for numeric, closed in zip(frame["concurrence"].iloc[:-1], frame["closed_form"].iloc[:-1]):
            self.assertAlmostEqual(numeric, closed, delta=1e-8)

    def test_single_visibility_json(self):
        report = json.loads(run_command("concurrence", "--theta", "0.7853981633974483", "--v", "0.5"))

        row = report["results"]["rows"][0]
        self.assertAlmostEqual(row["concurrence"], 0.25, places=8)
        self.assertAlmostEqual(row["closed_form"], 0.25, places=12)

    def test_two_qubits_only(self):
        with self.assertRaises(CommandError) as ctx:
            run_command("concurrence", "--d", "3", "--theta", "0.3", "--v", "0.5")

        self.assertEqual(ctx.exception.returncode, 1)


class FamilyScanCommandTests(SimpleTestCase):
    def test_csv_rows(self):
        output = run_command("family_scan", "--d", "3", "--N", "2", "--theta-steps", "32")

        self.assertTrue(output.startswith("theta,critical_v,eig_plus,eig_minus,zeros\n"))
        frame = pd.read_csv(io.StringIO(output))
        self.assertEqual(len(frame), 32)
        self.assertEqual(frame["theta"].iloc[0], 0.0)
        for theta, value in zip(frame["theta"], frame["critical_v"]):
            self.assertLessEqual(abs(value - family_critical_v(3, 2, theta)), 1e-12)
        self.assertTrue((frame["zeros"] == 1).all())

    def test_json_format(self):
        report = json.loads(run_command("family_scan", "--d", "2", "--N", "2", "--theta-steps", "4", "--format", "json"))

        self.assertEqual(len(report["results"]["rows"]), 4)
        self.assertEqual(report["results"]["rows"][0]["eig_plus"], 1.0)


class ConjectureScanCommandTests(SimpleTestCase):
    def test_reproducible(self):
        args = ("conjecture_scan", "--d", "3", "--N", "2", "--samples", "20", "--seed", "7")

        first, second = run_command(*args), run_command(*args)

        self.assertEqual(first, second)
        self.assertEqual(len(pd.read_csv(io.StringIO(first))), 20)

    def test_qubits_keep_nothing(self):
        report = json.loads(
            run_command("conjecture_scan", "--d", "2", "--N", "2", "--samples", "5", "--format", "json")
        )

        self.assertEqual(report["results"]["kept"], 0)


class RunEndpointTests(APISimpleTestCase):
    """Test the HTTP run surface"""

    def test_threshold(self):
        response = self.client.post(
            "/api/runs/threshold/", {"d": 3, "N": 2, "alpha": THIRDS_BODY}, format="json"
        )

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(set(response.data), REPORT_KEYS)
        self.assertAlmostEqual(response.data["results"]["critical_v"], 0.2, places=12)

    def test_invalid_configuration(self):
        response = self.client.post("/api/runs/certify/", {"d": 2, "N": 2, "v": 0.3}, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "invalid configuration")

    def test_unknown_command(self):
        response = self.client.post("/api/runs/plot/", {"d": 2, "N": 2}, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_validation_error(self):
        response = self.client.post(
            "/api/runs/decompose/", {"d": 3, "N": 2, "alpha": THIRDS_BODY, "v": 0.5}, format="json"
        )

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "AboveThresholdError")

    def test_numeric_error(self):
        with patch("cli.services.runner.certify", side_effect=NumericError("Jacobi sweeps exhausted")):
            response = self.client.post(
                "/api/runs/certify/", {"d": 2, "N": 2, "theta": 0.3, "v": 0.2}, format="json"
            )

        self.assertEqual(response.status_code, status.HTTP_422_UNPROCESSABLE_ENTITY)

    def test_csv_sweep(self):
        response = self.client.post(
            "/api/runs/family_scan/", {"d": 3, "N": 2, "theta_steps": 4}, format="json"
        )

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response["Content-Type"], "text/csv")
        self.assertTrue(response.content.decode().startswith("theta,critical_v"))

    def test_health(self):
        response = self.client.get("/health/")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["status"], "ok")
