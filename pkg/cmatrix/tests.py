import numpy as np
from django.test import SimpleTestCase, override_settings

from cmatrix.exceptions import (
    ContractViolation,
    NotPSDError,
    NumericError,
    ShapeError,
    SizeLimitError,
)
from cmatrix.services.eigen import (
    hermitian_eigen,
    is_psd,
    jacobi_eigen,
    min_eigenvalue,
    psd_sqrt,
)
from cmatrix.services.linalg import (
    as_matrix,
    frobenius_distance,
    is_hermitian,
    kron,
    kron_all,
    partial_trace,
    partial_transpose,
)

EXCHANGE = np.array([[0, 1], [1, 0]], dtype=complex)
BELL = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)


def random_hermitian(rng, n):
    raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (raw + raw.conj().T) / 2


def random_density(rng, n):
    raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = raw @ raw.conj().T
    return rho / np.trace(rho).real


class KronTests(SimpleTestCase):
    """Test Kronecker products"""

    def test_identity(self):
        """Test kron of identities is the identity"""
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_basis_projectors(self):
        """Test kron of diagonal projectors"""
        result = kron(np.diag([1, 0]).astype(complex), np.diag([0, 1]).astype(complex))
        np.testing.assert_array_equal(result, np.diag([0, 1, 0, 0]))

    def test_exchange_block(self):
        """Test |0><0| (x) X puts X in the top-left block"""
        projector = np.diag([1, 0]).astype(complex)
        result = kron(projector, EXCHANGE)

        expected = np.zeros((4, 4), dtype=complex)
        expected[:2, :2] = EXCHANGE
        np.testing.assert_array_equal(result, expected)

    def test_index_convention(self):
        """Test (a (x) b)[i*rows_b + k, j*cols_b + l] = a_ij * b_kl"""
        rng = np.random.default_rng(3)
        a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        b = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
        result = kron(a, b)

        self.assertEqual(result.shape, (6, 6))
        self.assertEqual(result[1 * 3 + 2, 2 * 2 + 1], a[1, 2] * b[2, 1])

    def test_associativity_is_exact(self):
        """Test kron(kron(a, b), c) == kron(a, kron(b, c)) entrywise"""
        rng = np.random.default_rng(5)
        a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))

        np.testing.assert_array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))
        np.testing.assert_array_equal(kron_all([a, b, c]), kron(a, kron(b, c)))

    @override_settings(SGWS_MAX_DIMENSION=8)
    def test_size_limit(self):
        """Test exceeding the configured dimension cap"""
        with self.assertRaises(SizeLimitError):
            kron(np.eye(4), np.eye(4))


class HermitianEigenTests(SimpleTestCase):
    """Test the Hermitian eigensolvers"""

    def test_identity_spectrum(self):
        """Test I_3 has eigenvalues (1, 1, 1)"""
        result = hermitian_eigen(np.eye(3, dtype=complex))
        np.testing.assert_allclose(result.eigenvalues, [1, 1, 1], atol=1e-12)

    def test_pauli_x_spectrum(self):
        """Test the exchange matrix has eigenvalues (-1, 1)"""
        result = hermitian_eigen(EXCHANGE)
        np.testing.assert_allclose(result.eigenvalues, [-1, 1], atol=1e-12)

    def test_two_by_two_analytic_spectra(self):
        """Test 2x2 spectra against (a+c)/2 +- sqrt(((a-c)/2)^2 + |b|^2)"""
        rng = np.random.default_rng(11)
        for _ in range(20):
            a, c = rng.normal(size=2)
            b = complex(*rng.normal(size=2))
            matrix = np.array([[a, b], [np.conj(b), c]])
            radius = np.hypot((a - c) / 2, abs(b))
            expected = [(a + c) / 2 - radius, (a + c) / 2 + radius]

            np.testing.assert_allclose(hermitian_eigen(matrix).eigenvalues, expected, atol=1e-12)

    def test_random_reconstruction(self):
        """Test ||A - V L V^dagger|| and V^dagger V = I on 100 random matrices"""
        rng = np.random.default_rng(2024)
        sizes = np.linspace(2, 64, 100).astype(int)
        for n in sizes:
            a = random_hermitian(rng, n)
            result = hermitian_eigen(a, method="jacobi")
            scale = max(1.0, np.linalg.norm(a))
            vectors = result.eigenvectors

            self.assertLessEqual(np.linalg.norm(a - result.reconstruct()), 1e-10 * scale)
            self.assertLessEqual(np.max(np.abs(vectors.conj().T @ vectors - np.eye(n))), 1e-10)
            self.assertTrue(np.all(np.diff(result.eigenvalues) >= 0))

    def test_jacobi_matches_lapack(self):
        """Test both solvers agree on the spectrum as a multiset"""
        rng = np.random.default_rng(7)
        a = random_hermitian(rng, 12)

        np.testing.assert_allclose(
            hermitian_eigen(a, method="jacobi").eigenvalues,
            hermitian_eigen(a, method="lapack").eigenvalues,
            atol=1e-10,
        )

    def test_non_hermitian_rejected(self):
        """Test non-Hermitian input raises a contract violation"""
        with self.assertRaises(ContractViolation):
            hermitian_eigen(np.array([[0, 1], [0, 0]], dtype=complex))

    def test_unknown_method_rejected(self):
        """Test an unknown solver name"""
        with self.assertRaises(ContractViolation):
            hermitian_eigen(np.eye(2), method="qr")

    def test_non_convergence_reports_residual(self):
        """Test Jacobi gives up after the sweep limit"""
        with self.assertRaises(NumericError) as ctx:
            jacobi_eigen(random_hermitian(np.random.default_rng(1), 6), max_sweeps=0)

        self.assertGreater(ctx.exception.residual, 0)


class PsdTests(SimpleTestCase):
    """Test min eigenvalue, PSD checks and the PSD square root"""

    def test_min_eigenvalue(self):
        """Test min_eigenvalue on diagonal examples"""
        self.assertAlmostEqual(min_eigenvalue(np.eye(2) / 2), 0.5, places=12)
        self.assertAlmostEqual(min_eigenvalue(np.diag([1.0, -3.0])), -3.0, places=12)

    def test_is_psd_tolerance(self):
        """Test eigenvalues down to -1e-10 are accepted"""
        self.assertTrue(is_psd(np.diag([1.0, -5e-11])))
        self.assertFalse(is_psd(np.diag([1.0, -1e-9])))

    def test_sqrt_examples(self):
        """Test square roots of identity, a diagonal and a projector"""
        np.testing.assert_allclose(psd_sqrt(np.eye(4)), np.eye(4), atol=1e-12)
        np.testing.assert_allclose(psd_sqrt(np.diag([4.0, 1.0, 0.0])), np.diag([2, 1, 0]), atol=1e-12)

        plus = np.array([1, 1]) / np.sqrt(2)
        projector = np.outer(plus, plus).astype(complex)
        np.testing.assert_allclose(psd_sqrt(projector), projector, atol=1e-12)

    def test_sqrt_clamps_tiny_negative(self):
        """Test eigenvalues in [-1e-10, 0) are clamped to zero"""
        root = psd_sqrt(np.diag([1.0, -1e-11]))
        np.testing.assert_allclose(root, np.diag([1.0, 0.0]), atol=1e-12)

    def test_sqrt_rejects_negative(self):
        """Test NotPSDError carries the offending eigenvalue"""
        with self.assertRaises(NotPSDError) as ctx:
            psd_sqrt(np.diag([1.0, -0.25]))

        self.assertAlmostEqual(ctx.exception.eigenvalue, -0.25, places=12)

    def test_sqrt_squares_back(self):
        """Test psd_sqrt(S S) squares back to S S"""
        rng = np.random.default_rng(9)
        for n in (2, 5, 9):
            rho = random_density(rng, n)
            square = rho @ rho
            root = psd_sqrt(square)

            self.assertLessEqual(np.linalg.norm(root @ root - square), 1e-9 * max(1, np.linalg.norm(square)))
            self.assertTrue(is_psd(root))


class PartialTransposeTests(SimpleTestCase):
    """Test partial transpose and partial trace"""

    def test_identity_invariant(self):
        """Test the maximally mixed state is unchanged"""
        rho = np.eye(4, dtype=complex) / 4
        np.testing.assert_array_equal(partial_transpose(rho, (2, 2), {2}), rho)

    def test_bell_spectrum(self):
        """Test PT of the Bell projector has spectrum (-1/2, 1/2, 1/2, 1/2)"""
        rho = np.outer(BELL, BELL.conj())
        transposed = partial_transpose(rho, (2, 2), {2})

        np.testing.assert_allclose(hermitian_eigen(transposed).eigenvalues, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)
        self.assertAlmostEqual(min_eigenvalue(transposed), -0.5, places=12)

    def test_product_state(self):
        """Test PT of a product state transposes the second factor"""
        rng = np.random.default_rng(4)
        rho_a, rho_b = random_density(rng, 2), random_density(rng, 3)
        transposed = partial_transpose(kron(rho_a, rho_b), (2, 3), {2})

        np.testing.assert_allclose(transposed, kron(rho_a, rho_b.T), atol=1e-15)
        self.assertTrue(is_psd(transposed))

    def test_involution_and_trace(self):
        """Test PT twice is the identity map and PT preserves the trace"""
        rng = np.random.default_rng(8)
        rho = random_density(rng, 12)
        for subset in ({1}, {2}, {3}, {1, 3}):
            once = partial_transpose(rho, (2, 3, 2), subset)

            np.testing.assert_array_equal(partial_transpose(once, (2, 3, 2), subset), rho)
            self.assertAlmostEqual(np.trace(once), np.trace(rho), delta=1e-14)

    def test_bad_subset(self):
        """Test empty and full subsets are rejected"""
        rho = np.eye(4, dtype=complex) / 4
        with self.assertRaises(ContractViolation):
            partial_transpose(rho, (2, 2), set())
        with self.assertRaises(ContractViolation):
            partial_transpose(rho, (2, 2), {1, 2})

    def test_dimension_mismatch(self):
        """Test dims whose product differs from the matrix size"""
        with self.assertRaises(ShapeError):
            partial_transpose(np.eye(4), (2, 3), {2})

    def test_partial_trace_of_product(self):
        """Test tracing out parts of rho_a (x) rho_b (x) rho_c"""
        rng = np.random.default_rng(12)
        rho_a, rho_b, rho_c = random_density(rng, 2), random_density(rng, 3), random_density(rng, 2)
        rho = kron_all([rho_a, rho_b, rho_c])

        np.testing.assert_allclose(partial_trace(rho, (2, 3, 2), {2}), rho_b, atol=1e-14)
        np.testing.assert_allclose(partial_trace(rho, (2, 3, 2), {1, 3}), kron(rho_a, rho_c), atol=1e-14)
        np.testing.assert_allclose(partial_trace(rho, (2, 3, 2), {1, 2, 3}), rho, atol=0)


class FrobeniusDistanceTests(SimpleTestCase):
    """Test the Frobenius distance metric"""

    def test_examples(self):
        """Test the three reference distances"""
        self.assertEqual(frobenius_distance(np.eye(2), np.eye(2)), 0.0)
        self.assertAlmostEqual(frobenius_distance(np.eye(2), np.zeros((2, 2))), np.sqrt(2), places=14)
        self.assertAlmostEqual(
            frobenius_distance(np.diag([1.0, 0.0]), np.diag([0.0, 1.0])), np.sqrt(2), places=14
        )

    def test_shape_mismatch(self):
        """Test mismatched shapes raise ShapeError"""
        with self.assertRaises(ShapeError):
            frobenius_distance(np.eye(2), np.eye(3))

    def test_as_matrix_hermitian_flag(self):
        """Test the Hermitian construction flag"""
        as_matrix([[1, 1j], [-1j, 1]], hermitian=True)
        with self.assertRaises(ContractViolation):
            as_matrix([[1, 1j], [1j, 1]], hermitian=True)

    def test_is_hermitian(self):
        """Test the Hermitian predicate and its tolerance"""
        self.assertTrue(is_hermitian(np.array([[1, 1j], [-1j, 2]])))
        self.assertFalse(is_hermitian(np.array([[1, 1j], [1j, 2]])))
        self.assertFalse(is_hermitian(np.ones((2, 3))))

        nearly = np.array([[1, 1e-13], [0, 1]], dtype=complex)
        self.assertTrue(is_hermitian(nearly))
        self.assertFalse(is_hermitian(nearly, tol=1e-14))
