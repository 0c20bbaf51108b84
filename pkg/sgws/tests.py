import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from cmatrix.exceptions import ContractViolation, SizeLimitError
from cmatrix.services.eigen import hermitian_eigen, min_eigenvalue
from sgws.exceptions import CoefficientValidationError, NotEntangledError
from sgws.services.family import family_coeffs, family_critical_v, family_rho_eigs
from sgws.services.states import (
    SgwsSpec,
    build_pure_state,
    build_sgws,
    critical_v,
    critical_v_infimum,
    ghz_index,
    parse_coeffs,
    qubit_coeffs,
    single_qudit_rho,
    uniform_coeffs,
    uniform_critical_v,
    validate_coeffs,
)

THIRDS = [2 / 3, 2 / 3, 1 / 3]
THETAS = [k * math.pi / 64 for k in range(32)]


class ValidateCoeffsTests(SimpleTestCase):
    """Test coefficient validation and derived quantities"""

    def test_uniform_qubit(self):
        """Test uniform qubit coefficients give T = 2 and restriction (ii)"""
        coeffs = validate_coeffs([1 / math.sqrt(2), 1 / math.sqrt(2)], 2)

        self.assertAlmostEqual(coeffs.T, 2.0, places=12)
        self.assertTrue(coeffs.restriction2_ok)

    def test_thirds(self):
        """Test (2/3, 2/3, 1/3) gives T = 9/4"""
        coeffs = validate_coeffs(THIRDS, 3)

        self.assertAlmostEqual(coeffs.T, 9 / 4, places=12)
        self.assertTrue(coeffs.restriction2_ok)
        self.assertEqual(coeffs.argmax_pair(), (0, 1))

    def test_product_state_rejected(self):
        """Test a single nonzero coefficient is not entangled"""
        with self.assertRaises(NotEntangledError):
            validate_coeffs([1, 0], 2)

    def test_normalization_enforced(self):
        """Test restriction (i)"""
        with self.assertRaises(CoefficientValidationError):
            validate_coeffs([0.6667, 0.6667, 0.3333], 3)

    def test_length_mismatch(self):
        """Test alpha must have d entries"""
        with self.assertRaises(CoefficientValidationError):
            validate_coeffs([1 / math.sqrt(2), 1 / math.sqrt(2)], 3)

    def test_zero_coefficients_do_not_count(self):
        """Test pairs with a zero factor contribute nothing to T"""
        coeffs = validate_coeffs([1 / math.sqrt(2), 0, 1 / math.sqrt(2)], 3)
        self.assertAlmostEqual(coeffs.T, 2.0, places=12)

    def test_complex_coefficients(self):
        """Test complex alpha: only moduli enter T"""
        coeffs = validate_coeffs([2j / 3, -2 / 3, (1 + 0j) / 3], 3)
        self.assertAlmostEqual(coeffs.T, 9 / 4, places=12)

    def test_restriction2_can_fail(self):
        """Test restriction (ii) is recorded, not enforced"""
        alpha = np.array([0.8, 0.5, 0.2 + 0.3j])
        alpha = alpha / np.linalg.norm(alpha)
        coeffs = validate_coeffs(list(alpha), 3)

        self.assertFalse(coeffs.restriction2_ok)
        self.assertLess(coeffs.restriction2_min_eig, -1e-10)

    def test_qubit_restriction2_always_holds(self):
        """Test for d = 2 the single-qudit matrix has spectrum {0, 1}"""
        rng = np.random.default_rng(21)
        for _ in range(25):
            raw = rng.normal(size=2) + 1j * rng.normal(size=2)
            coeffs = validate_coeffs(list(raw / np.linalg.norm(raw)), 2)
            rho = single_qudit_rho(coeffs.array, coeffs.T)

            self.assertTrue(coeffs.restriction2_ok)
            np.testing.assert_allclose(hermitian_eigen(rho).eigenvalues, [0, 1], atol=1e-12)

    def test_parse_rationals(self):
        """Test [re, im] pairs with p/q strings"""
        alpha = parse_coeffs([["2/3", 0], ["2/3", "0"], [0.5, "-1/2"]])
        self.assertEqual(alpha, [complex(2 / 3, 0), complex(2 / 3, 0), complex(0.5, -0.5)])

    def test_parse_malformed(self):
        """Test malformed pairs and numbers"""
        for bad in ([], [[1]], [["x", 0]], [[1, 0, 0]], "[[1,0]]", [["1/0", 0]]):
            with self.assertRaises(CoefficientValidationError):
                parse_coeffs(bad)


class StateBuilderTests(SimpleTestCase):
    """Test pure state and SGWS construction"""

    def test_bell_layout(self):
        """Test uniform qubits, N=2 gives (1, 0, 0, 1)/sqrt(2)"""
        state = build_pure_state(uniform_coeffs(2), 2)
        np.testing.assert_allclose(state.ravel(), np.array([1, 0, 0, 1]) / math.sqrt(2), atol=1e-15)

    def test_qutrit_indices(self):
        """Test nonzeros at flat indices 0, 4, 8 for d=3, N=2"""
        state = build_pure_state(validate_coeffs(THIRDS, 3), 2)

        self.assertEqual(list(np.flatnonzero(state)), [0, 4, 8])
        self.assertEqual([ghz_index(i, 3, 3) for i in range(3)], [0, 13, 26])
        self.assertAlmostEqual(np.linalg.norm(state), 1.0, places=12)

    def test_endpoints(self):
        """Test v = 0 and v = 1"""
        coeffs = validate_coeffs(THIRDS, 3)
        psi = build_pure_state(coeffs, 2)

        np.testing.assert_allclose(build_sgws(SgwsSpec(3, 2, coeffs, 0.0)), np.eye(9) / 9, atol=1e-15)
        np.testing.assert_allclose(build_sgws(SgwsSpec(3, 2, coeffs, 1.0)), psi @ psi.conj().T, atol=1e-15)

    def test_hand_expansion(self):
        """Test d=2, N=2, uniform, v=1/2"""
        state = build_sgws(SgwsSpec(2, 2, uniform_coeffs(2), 0.5))

        np.testing.assert_allclose(np.diag(state).real, [3 / 8, 1 / 8, 1 / 8, 3 / 8], atol=1e-15)
        self.assertAlmostEqual(state[0, 3].real, 0.25, places=15)
        self.assertAlmostEqual(state[3, 0].real, 0.25, places=15)

    def test_trace_and_spectrum_bound(self):
        """Test trace 1 and min eigenvalue >= (1 - v)/d^N"""
        coeffs = validate_coeffs(THIRDS, 3)
        for N in (1, 2, 3):
            for v in (0.0, 0.1, 0.5, 0.9, 1.0):
                state = build_sgws(SgwsSpec(3, N, coeffs, v))

                self.assertAlmostEqual(np.trace(state).real, 1.0, delta=1e-12)
                self.assertGreaterEqual(min_eigenvalue(state), (1 - v) / 3**N - 1e-12)

    def test_spec_validation(self):
        """Test v range, d/N and coefficient dimension checks"""
        coeffs = uniform_coeffs(2)
        with self.assertRaises(ContractViolation):
            SgwsSpec(2, 2, coeffs, 1.5)
        with self.assertRaises(ContractViolation):
            SgwsSpec(3, 2, coeffs, 0.5)
        with self.assertRaises(ContractViolation):
            SgwsSpec(2, 0, coeffs, 0.5)
        with self.assertRaises(SizeLimitError):
            SgwsSpec(2, 11, coeffs, 0.5)

    @override_settings(SGWS_MAX_DIMENSION=16)
    def test_configured_cap(self):
        """Test the dimension cap comes from settings"""
        with self.assertRaises(SizeLimitError):
            build_pure_state(uniform_coeffs(3), 3)


class CriticalValueTests(SimpleTestCase):
    """Test the threshold and its special cases"""

    def test_regressions(self):
        """Test the four reference thresholds"""
        self.assertLessEqual(abs(critical_v(validate_coeffs(THIRDS, 3), 2) - 0.2), 1e-15)
        self.assertAlmostEqual(critical_v(uniform_coeffs(3), 2), 0.25, places=15)
        self.assertAlmostEqual(critical_v(uniform_coeffs(2), 2), 1 / 3, places=15)
        self.assertAlmostEqual(critical_v(uniform_coeffs(2), 3), 0.2, places=15)

    def test_uniform_special_case(self):
        """Test uniform coefficients reproduce 1/(d^(N-1) + 1)"""
        for d in (2, 3, 4):
            for N in (1, 2, 3, 4):
                self.assertAlmostEqual(critical_v(uniform_coeffs(d), N), uniform_critical_v(d, N), places=14)

    def test_non_monotonic_witness(self):
        """Test the less entangled (2/3, 2/3, 1/3) has the lower threshold"""
        self.assertLess(critical_v(validate_coeffs(THIRDS, 3), 2), critical_v(uniform_coeffs(3), 2))

    def test_T_lower_bound(self):
        """Test T >= 2 and v_c >= 2/(d^N + 2) over random coefficients"""
        rng = np.random.default_rng(17)
        for d in (2, 3, 4, 5):
            for _ in range(40):
                raw = rng.normal(size=d) + 1j * rng.normal(size=d)
                coeffs = validate_coeffs(list(raw / np.linalg.norm(raw)), d)

                self.assertGreaterEqual(coeffs.T, 2.0 - 1e-12)
                self.assertGreaterEqual(critical_v(coeffs, 2), critical_v_infimum(d, 2) - 1e-15)

    def test_T_infimum_attained(self):
        """Test two coefficients of modulus 1/sqrt(2) give T = 2"""
        coeffs = validate_coeffs([1 / math.sqrt(2), 1 / math.sqrt(2), 0, 0], 4)
        self.assertAlmostEqual(critical_v(coeffs, 2), critical_v_infimum(4, 2), places=14)

    def test_qubit_monotonicity(self):
        """Test v_c = 1/(2^N sin cos + 1) decreases as 2 sin cos grows on (0, pi/4]"""
        thetas = [k * (math.pi / 4) / 40 for k in range(1, 41)]
        for N in (2, 3):
            values = [critical_v(qubit_coeffs(theta), N) for theta in thetas]
            entanglement = [2 * math.sin(t) * math.cos(t) for t in thetas]

            for theta, value in zip(thetas, values):
                self.assertAlmostEqual(value, 1 / (2**N * math.sin(theta) * math.cos(theta) + 1), delta=1e-14)
            self.assertTrue(all(b > a for a, b in zip(entanglement, entanglement[1:])))
            self.assertTrue(all(b < a for a, b in zip(values, values[1:])))


class FamilyTests(SimpleTestCase):
    """Test the theta-family closed forms"""

    def test_family_coefficients(self):
        """Test the reference family vectors"""
        np.testing.assert_allclose(family_coeffs(3, 0.0).array, [1 / math.sqrt(3)] * 3, atol=1e-15)
        np.testing.assert_allclose(family_coeffs(3, math.pi / 2).array, [0, 1 / math.sqrt(2), 1 / math.sqrt(2)], atol=1e-15)
        np.testing.assert_allclose(family_coeffs(2, math.pi / 4).array, [0.5, math.sqrt(3) / 2], atol=1e-15)

    def test_qubit_product_rejected(self):
        """Test d=2, cos(theta)=0 leaves one nonzero coefficient"""
        with self.assertRaises(NotEntangledError):
            family_coeffs(2, math.pi / 2)

    def test_family_thresholds(self):
        """Test the reference family thresholds"""
        self.assertAlmostEqual(family_critical_v(3, 2, 0.0), 0.25, places=15)
        self.assertAlmostEqual(family_critical_v(2, 2, 0.0), 1 / 3, places=15)
        self.assertAlmostEqual(family_critical_v(3, 2, math.pi / 2), 2 / 11, places=15)

    def test_family_threshold_matches_general_formula(self):
        """Test closed form == critical_v(family_coeffs) on the grid"""
        for d in (2, 3, 4):
            for N in (1, 2, 3):
                for theta in THETAS + [-0.4, 2.5, 7.0]:
                    self.assertAlmostEqual(
                        family_critical_v(d, N, theta),
                        critical_v(family_coeffs(d, theta), N),
                        delta=1e-12,
                    )

    def test_family_eigenvalues(self):
        """Test the reference spectra"""
        np.testing.assert_allclose(sorted(family_rho_eigs(3, 0.0)), [0, 0, 1], atol=1e-12)
        np.testing.assert_allclose(sorted(family_rho_eigs(3, math.pi / 2)), [0, 1 / 3, 2 / 3], atol=1e-12)
        np.testing.assert_allclose(sorted(family_rho_eigs(2, 0.0)), [0, 1], atol=1e-12)

    def test_family_eigenvalues_match_solver(self):
        """Test closed-form eigenvalues == eigensolver on rho, as multisets"""
        for d in (2, 3, 4):
            for theta in THETAS:
                coeffs = family_coeffs(d, theta)
                numeric = hermitian_eigen(single_qudit_rho(coeffs.array, coeffs.T)).eigenvalues
                closed = sorted(family_rho_eigs(d, theta))

                np.testing.assert_allclose(numeric, closed, atol=1e-10)
                self.assertAlmostEqual(sum(closed), 1.0, delta=1e-12)
                self.assertTrue(coeffs.restriction2_ok)

    def test_solver_on_family_rho(self):
        """Test the eigensolver reproduces (0, 1/3, 2/3) at theta = pi/2"""
        coeffs = family_coeffs(3, math.pi / 2)
        values = hermitian_eigen(single_qudit_rho(coeffs.array, coeffs.T)).eigenvalues
        np.testing.assert_allclose(values, [0, 1 / 3, 2 / 3], atol=1e-12)
