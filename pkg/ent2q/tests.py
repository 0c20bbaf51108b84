import math
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pandas as pd
from django.test import SimpleTestCase

from cmatrix.exceptions import ContractViolation
from ent2q.exceptions import ConcurrenceDomainError
from ent2q.services import concurrence as measures
from ent2q.services.concurrence import (
    CLOSED_FORM,
    NUMERIC,
    SELECTED_GROUPING,
    ClosedFormGrouping,
    TwoQubitState,
    concurrence,
    concurrence_closed_form,
    eof,
    select_closed_form_grouping,
    spin_flip,
    werner_concurrence,
    werner_state,
    zero_set_boundary,
)
from sep.services.decomposition import decompose_sgws, reconstruct
from sgws.services.states import SgwsSpec, critical_v, qubit_coeffs

FIXTURE = Path(__file__).resolve().parent / "fixtures" / "concurrence_grid.csv"
BELL = np.array([[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]], dtype=np.complex128) / 2
MIXED = np.eye(4, dtype=np.complex128) / 4
ZERO_SET_THETAS = [k * math.pi / 16 for k in range(1, 8)]


def random_unitary(rng):
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def load_grid():
    frame = pd.read_csv(FIXTURE)
    return list(frame[["v", "theta", "concurrence"]].itertuples(index=False, name=None))


class TwoQubitStateTests(SimpleTestCase):
    def test_wrong_shape(self):
        with self.assertRaises(ContractViolation):
            TwoQubitState(np.eye(3, dtype=np.complex128) / 3)

    def test_wrong_trace(self):
        with self.assertRaises(ContractViolation):
            TwoQubitState(np.eye(4, dtype=np.complex128) / 2)

    def test_negative_eigenvalue(self):
        with self.assertRaises(ContractViolation):
            TwoQubitState(np.diag([0.6, 0.6, 0.1, -0.3]).astype(np.complex128))

    def test_visibility_range(self):
        with self.assertRaises(ConcurrenceDomainError):
            werner_state(1.2, 0.3)


class SpinFlipTests(SimpleTestCase):
    def test_maximally_mixed(self):
        np.testing.assert_allclose(spin_flip(TwoQubitState(MIXED)), MIXED, atol=1e-15)

    def test_bell_fixed_point(self):
        np.testing.assert_allclose(spin_flip(TwoQubitState(BELL)), BELL, atol=1e-15)

    def test_basis_flip(self):
        zero = np.zeros((4, 4), dtype=np.complex128)
        zero[0, 0] = 1.0
        one = np.zeros((4, 4), dtype=np.complex128)
        one[3, 3] = 1.0

        np.testing.assert_allclose(spin_flip(TwoQubitState(zero)), one, atol=1e-15)


class ConcurrenceTests(SimpleTestCase):
    """Test the Wootters concurrence"""

    def test_maximally_mixed(self):
        self.assertEqual(concurrence(TwoQubitState(MIXED)), 0.0)

    def test_bell(self):
        self.assertAlmostEqual(concurrence(TwoQubitState(BELL)), 1.0, places=6)

    def test_pure_state(self):
        theta = 0.4
        rho = werner_state(1.0, theta)

        self.assertAlmostEqual(concurrence(rho), 2 * math.sin(theta) * math.cos(theta), places=6)

    def test_zero_set(self):
        """Test concurrence vanishes exactly up to 1 / (4 sin t cos t + 1)"""
        for theta in ZERO_SET_THETAS:
            with self.subTest(theta=theta):
                boundary = zero_set_boundary(theta)
                self.assertEqual(werner_concurrence(boundary - 1e-4, theta), 0.0)
                self.assertGreater(werner_concurrence(boundary + 1e-4, theta), 1e-6)

    def test_boundary_is_critical_value(self):
        for theta in ZERO_SET_THETAS:
            with self.subTest(theta=theta):
                self.assertLessEqual(abs(zero_set_boundary(theta) - critical_v(qubit_coeffs(theta), 2)), 1e-14)

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(3)
        state = werner_state(0.6, 0.5)
        reference = concurrence(state)

        for _ in range(10):
            local = np.kron(random_unitary(rng), random_unitary(rng))
            rotated = local @ state.rho @ local.conj().T
            rotated = (rotated + rotated.conj().T) / 2
            self.assertLessEqual(abs(concurrence(TwoQubitState(rotated)) - reference), 1e-9)

    def test_decompositions_are_unentangled(self):
        for theta in (0.3, math.pi / 4, 1.1):
            coeffs = qubit_coeffs(theta)
            for v in (0.5 * critical_v(coeffs, 2), critical_v(coeffs, 2)):
                with self.subTest(theta=theta, v=v):
                    rho = reconstruct(decompose_sgws(SgwsSpec(2, 2, coeffs, v)))
                    rho = (rho + rho.conj().T) / 2
                    self.assertLessEqual(concurrence(TwoQubitState(rho)), 1e-9)


class EntanglementOfFormationTests(SimpleTestCase):
    def test_endpoints(self):
        self.assertEqual(eof(0.0), 0.0)
        self.assertAlmostEqual(eof(1.0), 1.0, places=12)

    def test_half(self):
        self.assertAlmostEqual(eof(0.5), 0.3546, places=4)

    def test_increasing(self):
        values = [eof(c) for c in np.linspace(0.05, 1.0, 20)]

        self.assertTrue(all(b > a for a, b in zip(values, values[1:])))

    def test_out_of_range(self):
        with self.assertRaises(ConcurrenceDomainError):
            eof(1.5)
        with self.assertRaises(ConcurrenceDomainError):
            eof(-0.1)


class ClosedFormTests(SimpleTestCase):
    """Test the closed-form concurrence and its grouping"""

    def test_maximally_mixed(self):
        self.assertEqual(concurrence_closed_form(0.0, 0.7).value, 0.0)

    def test_zero_set_boundary(self):
        result = concurrence_closed_form(1 / 3, math.pi / 4)

        self.assertAlmostEqual(result.value, 0.0, places=12)
        self.assertTrue(result.in_domain)
        self.assertEqual(result.source, CLOSED_FORM)

    def test_matches_numeric(self):
        v = 1 / 3 + 0.01
        result = concurrence_closed_form(v, math.pi / 4)

        self.assertGreater(result.value, 0.0)
        self.assertAlmostEqual(result.value, werner_concurrence(v, math.pi / 4), delta=1e-8)

    def test_radicand_nonnegative_on_unit_interval(self):
        for v in np.linspace(0.0, 1.0, 11):
            for theta in np.linspace(0.0, math.pi / 2, 11):
                self.assertGreaterEqual(concurrence_closed_form(v, theta).radicand, 0.0)

    def test_fixture_selects_grouping(self):
        self.assertEqual(select_closed_form_grouping(load_grid()), SELECTED_GROUPING)

    def test_fixture_matches_numeric(self):
        for v, theta, expected in load_grid():
            self.assertAlmostEqual(werner_concurrence(v, theta), expected, delta=1e-8)

    def test_printed_radicand_falls_back(self):
        printed = ClosedFormGrouping(a=0.25, b=0.5, radicand="printed")

        with patch.object(measures, "SELECTED_GROUPING", printed):
            with self.assertLogs("ent2q", level="WARNING"):
                result = concurrence_closed_form(0.9, math.pi / 4)

        self.assertFalse(result.in_domain)
        self.assertEqual(result.source, NUMERIC)
        self.assertLess(result.radicand, 0.0)
        self.assertAlmostEqual(result.value, werner_concurrence(0.9, math.pi / 4), places=12)

    def test_visibility_range(self):
        with self.assertRaises(ConcurrenceDomainError):
            concurrence_closed_form(-0.5, 0.3)
