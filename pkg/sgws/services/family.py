"""
The one-parameter family alpha_0 = cos(theta)/sqrt(d),
alpha_i = sqrt((d - cos^2 theta) / (d (d - 1))) for i >= 1.

Only cos^2(theta) enters, so theta is canonicalized through |cos theta|.
The printed closed forms rely on the largest coefficient product being
alpha_i alpha_j with i, j >= 1, which needs d >= 3; for qubits the single
pair alpha_0 alpha_1 sets T and the exact qubit expressions are used.
"""

import math

from sgws.services.states import validate_coeffs


def _cos(theta):
    return min(1.0, abs(math.cos(theta)))


def family_alpha(d, theta):
    c = _cos(theta)
    rest = math.sqrt((d - c * c) / (d * (d - 1)))
    return [c / math.sqrt(d)] + [rest] * (d - 1)


def family_coeffs(d, theta):
    return validate_coeffs(family_alpha(d, theta), d)


def family_critical_v(d, N, theta):
    family_coeffs(d, theta)
    c = _cos(theta)
    if d == 2:
        return 2.0 / (2**N * c * math.sqrt(2.0 - c * c) + 2.0)
    return d * (d - 1) / (d**N * (d - c * c) + d * (d - 1))


def family_rho_eigs(d, theta):
    """Two nonzero eigenvalues (1 +- r)/2 followed by d - 2 zeros"""
    family_coeffs(d, theta)
    c = _cos(theta)
    if d == 2:
        return [1.0, 0.0]
    radius = math.sqrt(((d - 2) ** 2 + (3 * d - 4) * c * c) / (d * (d - c * c)))
    return [(1 + radius) / 2, (1 - radius) / 2] + [0.0] * (d - 2)
