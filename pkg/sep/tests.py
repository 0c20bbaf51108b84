import json
import math
from unittest.mock import patch

import numpy as np
from django.test import SimpleTestCase, override_settings
from rest_framework.renderers import JSONRenderer

from cmatrix.exceptions import ContractViolation, ShapeError
from cmatrix.services.eigen import min_eigenvalue
from cmatrix.services.linalg import kron, partial_trace
from sep.exceptions import (
    AboveThresholdError,
    DecompositionFormatError,
    PhaseDimensionError,
    TermCapError,
)
from sep.serializers import CertReportSerializer, dump_decomposition, load_decomposition
from sep.services.certify import ENTANGLED, INCONCLUSIVE, SEPARABLE, certify
from sep.services.conjecture import conjecture_scan
from sep.services.criteria import (
    bipartitions,
    cauchy_schwarz_scan,
    designated_cauchy_schwarz_pair,
    min_ppt_threshold,
    ppt_min_eig,
    ppt_threshold,
)
from sep.services.decomposition import (
    IDENTITY,
    PROJECTOR,
    SPECTRAL,
    ProductDecomposition,
    ProductTerm,
    decompose_rho_N,
    decompose_sgws,
    identity_term,
    reconstruct,
    rho1_with_phases,
    spectral_decomposition,
    verify_decomposition,
)
from sep.services.phases import fourth_moment, phase_vectors, second_moment
from sgws.exceptions import Restriction2Error
from sgws.services.family import family_coeffs
from sgws.services.states import (
    SgwsSpec,
    build_sgws,
    critical_v,
    ghz_index,
    qubit_coeffs,
    single_qudit_rho,
    uniform_coeffs,
    validate_coeffs,
)

THIRDS = [2 / 3, 2 / 3, 1 / 3]
# distinct moduli with a nonzero smallest one break restriction (ii)
FAILING = [0.8, 0.5, math.sqrt(0.11)]


def direct_rho_n(coeffs, N):
    """(1/d^N)(I + T sum_{i != j} alpha_i conj(alpha_j) |i..i><j..j|)"""
    d = coeffs.d
    rho = np.eye(d**N, dtype=np.complex128)
    for i, a in enumerate(coeffs.alpha):
        for j, b in enumerate(coeffs.alpha):
            if i != j:
                rho[ghz_index(i, d, N), ghz_index(j, d, N)] = coeffs.T * a * b.conjugate()
    return rho / d**N


def sample_coeffs():
    return [
        uniform_coeffs(2),
        qubit_coeffs(0.3),
        family_coeffs(2, math.pi / 3),
        uniform_coeffs(3),
        family_coeffs(3, math.pi / 3),
        validate_coeffs(THIRDS, 3),
    ]


class PhaseVectorTests(SimpleTestCase):
    """Test the 4^d phase vectors and the averaging identities they satisfy"""

    def test_single_qudit(self):
        self.assertEqual(phase_vectors(1), [(1,), (1j,), (-1,), (-1j,)])

    def test_enumeration_order(self):
        """Test the first digit varies fastest"""
        vectors = phase_vectors(2)

        self.assertEqual(len(vectors), 16)
        self.assertEqual(vectors[:4], [(1, 1), (1j, 1), (-1, 1), (-1j, 1)])

    def test_orthogonality(self):
        for d in (2, 3, 4):
            moment = second_moment(d)
            self.assertLessEqual(np.max(np.abs(moment - np.eye(d))), 1e-14)

    def test_conjugate_pairing(self):
        """Test the pairing used by the decomposition gives delta(i, r) delta(j, s)"""
        for d in (2, 3, 4):
            moment = fourth_moment(d, conjugate_second_pair=True)
            expected = np.einsum("ir,js->ijrs", np.eye(d), np.eye(d))
            off = ~np.eye(d, dtype=bool)
            mask = off[:, :, None, None] & off[None, None, :, :]
            self.assertLessEqual(np.max(np.abs(moment - expected)[mask]), 1e-14)

    def test_direct_pairing(self):
        """Test pairing z with z instead gives delta(i, s) delta(j, r)"""
        for d in (2, 3, 4):
            moment = fourth_moment(d, conjugate_second_pair=False)
            expected = np.einsum("is,jr->ijrs", np.eye(d), np.eye(d))
            off = ~np.eye(d, dtype=bool)
            mask = off[:, :, None, None] & off[None, None, :, :]
            self.assertLessEqual(np.max(np.abs(moment - expected)[mask]), 1e-14)

    def test_dimension_cap(self):
        with self.assertRaises(PhaseDimensionError):
            phase_vectors(7)


class SingleQuditFactorTests(SimpleTestCase):
    """Test rho1_with_phases"""

    def test_plus_projector(self):
        rho = rho1_with_phases(uniform_coeffs(2), (1, 1))

        np.testing.assert_allclose(rho, 0.5 * np.ones((2, 2)), atol=1e-15)

    def test_minus_projector(self):
        rho = rho1_with_phases(uniform_coeffs(2), (1, -1))

        np.testing.assert_allclose(rho, 0.5 * np.array([[1, -1], [-1, 1]]), atol=1e-15)

    def test_matches_validation_matrix(self):
        coeffs = validate_coeffs(THIRDS, 3)

        rho = rho1_with_phases(coeffs, (1, 1, 1))

        np.testing.assert_allclose(rho, single_qudit_rho(coeffs.array, coeffs.T), atol=1e-15)

    def test_restriction_failure_refused(self):
        coeffs = validate_coeffs(FAILING, 3)

        with self.assertRaises(Restriction2Error):
            rho1_with_phases(coeffs, (1, 1, 1))

    def test_restriction_override(self):
        coeffs = validate_coeffs(FAILING, 3)

        with self.assertLogs("sep", level="WARNING"):
            rho = rho1_with_phases(coeffs, (1, 1, 1), allow_restriction2_failure=True)

        self.assertLess(min_eigenvalue(rho), -1e-10)


class DecomposeRhoTests(SimpleTestCase):
    """Test the inductive expansion of rho^(N)"""

    def test_single_qudit(self):
        coeffs = validate_coeffs(THIRDS, 3)

        decomp = decompose_rho_N(coeffs, 1)

        self.assertEqual(len(decomp.terms), 1)
        self.assertEqual(decomp.terms[0].weight, 1.0)
        np.testing.assert_allclose(decomp.terms[0].factors[0], single_qudit_rho(coeffs.array, coeffs.T))

    def test_uniform_qubits(self):
        coeffs = uniform_coeffs(2)

        decomp = decompose_rho_N(coeffs, 2)

        self.assertEqual(len(decomp.terms), 16)
        self.assertTrue(all(term.weight == 1 / 16 for term in decomp.terms))
        error = np.linalg.norm(reconstruct(decomp) - direct_rho_n(coeffs, 2))
        self.assertLessEqual(error, 1e-12)

    def test_thirds(self):
        coeffs = validate_coeffs(THIRDS, 3)

        decomp = decompose_rho_N(coeffs, 2)

        self.assertEqual(len(decomp.terms), 64)
        record = verify_decomposition(decomp, direct_rho_n(coeffs, 2))
        self.assertTrue(record.passed)
        self.assertGreaterEqual(record.min_factor_eig, -1e-10)

    def test_three_qubits(self):
        coeffs = qubit_coeffs(0.3)

        decomp = decompose_rho_N(coeffs, 3)

        self.assertEqual(len(decomp.terms), 256)
        error = np.linalg.norm(reconstruct(decomp) - direct_rho_n(coeffs, 3))
        self.assertLessEqual(error, 1e-10)

    @override_settings(SGWS_MAX_TERMS=100)
    def test_term_cap(self):
        with self.assertRaises(TermCapError) as ctx:
            decompose_rho_N(validate_coeffs(THIRDS, 3), 3)

        self.assertEqual(ctx.exception.terms, 4096)

    def test_restriction_failure(self):
        with self.assertRaises(Restriction2Error):
            decompose_rho_N(validate_coeffs(FAILING, 3), 2)

    def test_override_flags_non_psd_factors(self):
        coeffs = validate_coeffs(FAILING, 3)

        with self.assertLogs("sep", level="WARNING"):
            decomp = decompose_rho_N(coeffs, 2, allow_restriction2_failure=True)
        record = verify_decomposition(decomp, direct_rho_n(coeffs, 2))

        self.assertTrue(decomp.restriction2_override)
        self.assertLessEqual(record.reconstruction_error, 1e-10)
        self.assertLess(record.min_factor_eig, -1e-10)
        self.assertFalse(record.passed)


class DecomposeSgwsTests(SimpleTestCase):
    """Test decompositions of the state itself"""

    def test_zero_visibility(self):
        spec = SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.0)

        decomp = decompose_sgws(spec)

        self.assertEqual(len(decomp.terms), 1)
        self.assertEqual(decomp.terms[0].kind, IDENTITY)
        self.assertTrue(verify_decomposition(decomp, build_sgws(spec)).passed)

    def test_uniform_qubits_at_threshold(self):
        coeffs = uniform_coeffs(2)
        spec = SgwsSpec(2, 2, coeffs, critical_v(coeffs, 2))

        decomp = decompose_sgws(spec)

        self.assertEqual(decomp.summary()["terms_by_kind"], {PROJECTOR: 2, "rho": 16})
        record = verify_decomposition(decomp, build_sgws(spec))
        self.assertTrue(record.passed)
        self.assertLessEqual(record.reconstruction_error, 1e-10)

    def test_thirds_below_threshold(self):
        spec = SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.1)

        decomp = decompose_sgws(spec)
        record = verify_decomposition(decomp, build_sgws(spec))

        self.assertTrue(record.passed)
        self.assertGreaterEqual(record.min_factor_eig, -1e-10)
        self.assertEqual(decomp.terms[-1].kind, IDENTITY)
        self.assertAlmostEqual(decomp.terms[-1].weight, 0.5, places=12)

    def test_marginals_match_partial_trace(self):
        coeffs = family_coeffs(3, math.pi / 3)
        spec = SgwsSpec(3, 3, coeffs, critical_v(coeffs, 3) / 2)
        decomp = decompose_sgws(spec)
        rho = build_sgws(spec)
        expected = spec.v * np.diag(np.abs(coeffs.array) ** 2) + (1 - spec.v) * np.eye(3) / 3

        marginals = decomp.summary()["marginals"]

        self.assertEqual(len(marginals), 3)
        for r, marginal in enumerate(marginals, start=1):
            reduced = partial_trace(reconstruct(decomp), spec.dims, {r})
            np.testing.assert_allclose(marginal, reduced, atol=1e-12)
            np.testing.assert_allclose(marginal, partial_trace(rho, spec.dims, {r}), atol=1e-10)
            np.testing.assert_allclose(marginal, expected, atol=1e-10)

    def test_above_threshold_refused(self):
        spec = SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.21)

        with self.assertRaises(AboveThresholdError) as ctx:
            decompose_sgws(spec)

        self.assertAlmostEqual(ctx.exception.critical_v, 0.2, places=12)

    def test_acceptance_grid(self):
        """Test every decomposition at or below the threshold verifies"""
        for coeffs in sample_coeffs():
            for N in (2, 3):
                threshold = critical_v(coeffs, N)
                for v in (0.0, threshold / 3, threshold / 2, threshold):
                    with self.subTest(d=coeffs.d, N=N, v=v):
                        spec = SgwsSpec(coeffs.d, N, coeffs, v)
                        record = verify_decomposition(decompose_sgws(spec), build_sgws(spec))
                        self.assertTrue(record.passed)


class VerifyDecompositionTests(SimpleTestCase):
    """Test the verification record"""

    def test_maximally_mixed(self):
        decomp = ProductDecomposition(d=2, N=3, terms=[identity_term(2, 3, 1.0)])

        record = verify_decomposition(decomp, np.eye(8, dtype=np.complex128) / 8)

        self.assertTrue(record.passed)
        self.assertEqual(record.reconstruction_error, 0.0)

    def test_corrupted_weight(self):
        coeffs = uniform_coeffs(2)
        spec = SgwsSpec(2, 2, coeffs, critical_v(coeffs, 2))
        decomp = decompose_sgws(spec)
        first = decomp.terms[0]
        decomp.terms[0] = ProductTerm(weight=first.weight * 1.5, factors=first.factors, kind=first.kind)

        record = verify_decomposition(decomp, build_sgws(spec))

        self.assertFalse(record.passed)
        self.assertGreater(record.weight_sum_error, 1e-12)

    def test_dimension_mismatch(self):
        decomp = ProductDecomposition(d=2, N=2, terms=[identity_term(2, 2, 1.0)])

        with self.assertRaises(ShapeError):
            verify_decomposition(decomp, np.eye(8, dtype=np.complex128) / 8)

    def test_spectral_single_qudit(self):
        spec = SgwsSpec(3, 1, validate_coeffs(THIRDS, 3), 0.9)
        rho = build_sgws(spec)

        decomp = spectral_decomposition(rho)

        self.assertTrue(all(term.kind == SPECTRAL for term in decomp.terms))
        self.assertTrue(verify_decomposition(decomp, rho).passed)


class BipartitionTests(SimpleTestCase):
    def test_small_systems(self):
        self.assertEqual(bipartitions(1), [])
        self.assertEqual(bipartitions(2), [(2,)])
        self.assertEqual(bipartitions(3), [(2,), (3,), (2, 3)])
        self.assertEqual(len(bipartitions(4)), 7)

    def test_single_qudit_splits_beyond_four(self):
        self.assertEqual(bipartitions(5), [(1,), (2,), (3,), (4,), (5,)])


class PptTests(SimpleTestCase):
    """Test partial-transpose probes and thresholds"""

    def test_product_state(self):
        a = np.diag([0.3, 0.7]).astype(np.complex128)
        b = 0.5 * np.array([[1, 1j], [-1j, 1]])

        self.assertGreaterEqual(ppt_min_eig(kron(a, b), (2, 2), {2}), -1e-10)

    def test_bell_projector(self):
        rho = build_sgws(SgwsSpec(2, 2, uniform_coeffs(2), 1.0))

        self.assertAlmostEqual(ppt_min_eig(rho, (2, 2), {2}), -0.5, places=10)

    def test_boundary(self):
        rho = build_sgws(SgwsSpec(2, 2, uniform_coeffs(2), 1 / 3))

        self.assertLessEqual(abs(ppt_min_eig(rho, (2, 2), {2})), 1e-10)

    def test_threshold_uniform_qubits(self):
        threshold = ppt_threshold(uniform_coeffs(2), 2, {2})

        self.assertTrue(threshold.crossed)
        self.assertAlmostEqual(threshold.v, 1 / 3, delta=1e-8)

    def test_threshold_thirds(self):
        threshold = ppt_threshold(validate_coeffs(THIRDS, 3), 2, {2})

        self.assertAlmostEqual(threshold.v, 0.2, delta=1e-6)

    def test_threshold_three_qubits(self):
        threshold = ppt_threshold(uniform_coeffs(2), 3, {3})

        self.assertAlmostEqual(threshold.v, 0.2, delta=1e-6)

    def test_no_crossing(self):
        with patch("sep.services.criteria.ppt_min_eig", return_value=0.0):
            threshold = ppt_threshold(uniform_coeffs(2), 2, {2})

        self.assertFalse(threshold.crossed)
        self.assertEqual(threshold.v, 1.0)

    def test_min_threshold_matches_critical_v(self):
        """Test the lowest bisected threshold over every split lands on the critical value"""
        for d, N in ((2, 2), (2, 3), (3, 2)):
            for coeffs in (uniform_coeffs(d), family_coeffs(d, math.pi / 3)):
                with self.subTest(d=d, N=N, alpha=coeffs.alpha):
                    threshold = min_ppt_threshold(coeffs, N)

                    self.assertLessEqual(abs(threshold.v - critical_v(coeffs, N)), 1e-6)
                    self.assertTrue(threshold.crossed)
                    self.assertIn(threshold.subset, bipartitions(N))

    def test_monotone_in_v(self):
        coeffs = validate_coeffs(THIRDS, 3)
        values = [
            ppt_min_eig(build_sgws(SgwsSpec(3, 2, coeffs, v)), (3, 3), {2})
            for v in np.linspace(0.0, 1.0, 10)
        ]

        for earlier, later in zip(values, values[1:]):
            self.assertLessEqual(later, earlier + 1e-12)

    def test_negative_above_threshold(self):
        """Test some split has a negative partial transpose just above the threshold"""
        for coeffs in sample_coeffs():
            for N in (2, 3):
                with self.subTest(d=coeffs.d, N=N):
                    v = critical_v(coeffs, N) + 1e-6
                    rho = build_sgws(SgwsSpec(coeffs.d, N, coeffs, v))
                    dims = (coeffs.d,) * N
                    lowest = min(ppt_min_eig(rho, dims, subset) for subset in bipartitions(N))
                    self.assertLess(lowest, -1e-10)


class CauchySchwarzTests(SimpleTestCase):
    """Test the element-wise necessary condition"""

    def test_maximally_mixed(self):
        self.assertEqual(cauchy_schwarz_scan(np.eye(4, dtype=np.complex128) / 4, (2, 2)), [])

    def test_uniform_qubits_half(self):
        rho = build_sgws(SgwsSpec(2, 2, uniform_coeffs(2), 0.5))

        violations = cauchy_schwarz_scan(rho, (2, 2))

        found = [
            violation for violation in violations
            if (violation.n, violation.m, violation.mu, violation.nu) == ((0, 1), (1, 0), (0, 0), (1, 1))
        ]
        self.assertEqual(len(found), 1)
        self.assertAlmostEqual(found[0].lhs, 0.125, places=12)
        self.assertAlmostEqual(found[0].rhs, 0.25, places=12)

    def test_boundary_has_no_violation(self):
        coeffs = uniform_coeffs(2)
        rho = build_sgws(SgwsSpec(2, 2, coeffs, critical_v(coeffs, 2)))

        self.assertEqual(cauchy_schwarz_scan(rho, (2, 2)), [])

    def test_agrees_with_threshold(self):
        """Test violations appear exactly above the threshold, at the designated pair"""
        for coeffs in sample_coeffs():
            for N in (2, 3):
                with self.subTest(d=coeffs.d, N=N):
                    dims = (coeffs.d,) * N
                    threshold = critical_v(coeffs, N)
                    below = build_sgws(SgwsSpec(coeffs.d, N, coeffs, 0.99 * threshold))
                    above = build_sgws(SgwsSpec(coeffs.d, N, coeffs, threshold + 1e-6))

                    self.assertEqual(cauchy_schwarz_scan(below, dims), [])
                    tuples = {
                        (violation.n, violation.m, violation.mu, violation.nu)
                        for violation in cauchy_schwarz_scan(above, dims)
                    }
                    self.assertIn(designated_cauchy_schwarz_pair(coeffs, N), tuples)

    def test_designated_pair_needs_two_parties(self):
        with self.assertRaises(ContractViolation):
            designated_cauchy_schwarz_pair(uniform_coeffs(2), 1)

    def test_mixed_dimensions_rejected(self):
        with self.assertRaises(ShapeError):
            cauchy_schwarz_scan(np.eye(6, dtype=np.complex128) / 6, (2, 3))


class CertifyTests(SimpleTestCase):
    """Test certification verdicts"""

    def test_thirds_below(self):
        report = certify(SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.19))

        self.assertEqual(report.verdict, SEPARABLE)
        self.assertTrue(report.verification.passed)
        self.assertAlmostEqual(report.threshold_formula, 0.2, places=12)
        self.assertIsNone(report.threshold_numeric)

    def test_thirds_above(self):
        report = certify(SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.21))

        self.assertEqual(report.verdict, ENTANGLED)
        self.assertIsNotNone(report.cauchy_schwarz_witness)
        self.assertIsNone(report.decomposition)

    def test_uniform_qubits_above(self):
        report = certify(SgwsSpec(2, 2, uniform_coeffs(2), 0.34))

        self.assertEqual(report.verdict, ENTANGLED)
        self.assertEqual(report.ppt_witness.subset, (2,))
        self.assertLess(report.ppt_witness.min_eigenvalue, -1e-10)

    def test_numeric_threshold(self):
        report = certify(SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.19), numeric_threshold=True)

        self.assertAlmostEqual(report.threshold_numeric, 0.2, delta=1e-6)

    def test_single_qudit(self):
        report = certify(SgwsSpec(2, 1, uniform_coeffs(2), 0.9))

        self.assertEqual(report.verdict, SEPARABLE)
        self.assertEqual(report.decomposition.N, 1)
        self.assertTrue(report.notes)

    def test_restriction_failure_inconclusive(self):
        coeffs = validate_coeffs(FAILING, 3)

        report = certify(SgwsSpec(3, 2, coeffs, 0.5 * critical_v(coeffs, 2)))

        self.assertEqual(report.verdict, INCONCLUSIVE)
        self.assertIsNone(report.decomposition)
        self.assertTrue(any("restriction (ii)" in note for note in report.notes))

    def test_restriction_override_reported(self):
        coeffs = validate_coeffs(FAILING, 3)
        spec = SgwsSpec(3, 2, coeffs, 0.5 * critical_v(coeffs, 2))

        with self.assertLogs("sep", level="WARNING"):
            report = certify(spec, allow_restriction2_failure=True)

        self.assertEqual(report.verdict, INCONCLUSIVE)
        self.assertFalse(report.verification.passed)

    def test_tolerances_embedded(self):
        report = certify(SgwsSpec(2, 2, uniform_coeffs(2), 0.2))

        self.assertEqual(report.tolerances["psd"], 1e-10)
        self.assertEqual(report.tolerances["reconstruction"], 1e-10)


class ConjectureScanTests(SimpleTestCase):
    """Test the restriction (ii) exploration"""

    def test_qubits_never_sampled(self):
        self.assertEqual(conjecture_scan(2, 2, 10, seed=1), [])

    def test_deterministic(self):
        first = conjecture_scan(3, 2, 20, seed=7)
        second = conjecture_scan(3, 2, 20, seed=7)

        self.assertEqual(first, second)
        self.assertEqual(len(first), 20)
        for row in first:
            self.assertLess(row.restriction2_min_eig, -1e-10)
            self.assertAlmostEqual(row.difference, row.ppt_v - row.formula_v, places=15)
            self.assertTrue(0.0 <= row.ppt_v <= 1.0)

    def test_seed_changes_samples(self):
        self.assertNotEqual(
            conjecture_scan(3, 2, 3, seed=1)[0].alpha,
            conjecture_scan(3, 2, 3, seed=2)[0].alpha,
        )

    def test_limits(self):
        with self.assertRaises(ContractViolation):
            conjecture_scan(3, 1, 5, seed=1)
        with self.assertRaises(ContractViolation):
            conjecture_scan(3, 6, 5, seed=1)


class DecompositionDocumentTests(SimpleTestCase):
    """Test the JSON document form of decompositions"""

    def test_json_preserves_values(self):
        spec = SgwsSpec(2, 2, qubit_coeffs(0.3), 0.1)
        decomp = decompose_sgws(spec)

        document = json.loads(JSONRenderer().render(dump_decomposition(decomp)))
        loaded = load_decomposition(document)

        self.assertEqual(len(loaded.terms), len(decomp.terms))
        for original, restored in zip(decomp.terms, loaded.terms):
            self.assertEqual(original.weight, restored.weight)
            for a, b in zip(original.factors, restored.factors):
                np.testing.assert_array_equal(a, b)
        self.assertTrue(verify_decomposition(loaded, build_sgws(spec)).passed)

    def test_missing_terms(self):
        with self.assertRaises(DecompositionFormatError):
            load_decomposition({"d": 2, "N": 2})

    def test_zero_weight(self):
        document = {"d": 1, "N": 1, "terms": [{"weight": 0, "factors": [[[[1, 0]]]]}]}

        with self.assertRaises(DecompositionFormatError):
            load_decomposition(document)

    def test_factor_count(self):
        document = {"d": 1, "N": 2, "terms": [{"weight": 1, "factors": [[[[1, 0]]]]}]}

        with self.assertRaises(DecompositionFormatError):
            load_decomposition(document)

    def test_report_serializer(self):
        report = certify(SgwsSpec(3, 2, validate_coeffs(THIRDS, 3), 0.19))

        data = CertReportSerializer(report).data

        self.assertEqual(data["verdict"], SEPARABLE)
        self.assertEqual(data["decomposition"]["term_count"], 3 + 64 + 1)
        self.assertEqual(len(data["decomposition"]["marginals"]), 2)
        first = data["decomposition"]["marginals"][0]
        self.assertAlmostEqual(sum(row[r][0] for r, row in enumerate(first)), 1.0, places=12)
        self.assertIsNone(data["ppt_witness"])
