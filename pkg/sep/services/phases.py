"""
The 4^d phase vectors z = (z_0, ..., z_{d-1}) with z_r in {1, i, -1, -i}.

Vector k is read off the base-4 digits of k, least significant first:
z_r = i^{(k // 4^r) mod 4}. Phases are carried as integer exponents so
products and conjugates stay exact.
"""

import numpy as np

from cmatrix import conf
from sep.exceptions import PhaseDimensionError

UNIT_PHASES = np.array([1, 1j, -1, -1j], dtype=np.complex128)


def phase_exponents(d):
    if d < 1 or d > conf.max_phase_dimension():
        raise PhaseDimensionError(
            f"phase vectors need 1 <= d <= {conf.max_phase_dimension()}, got d={d}"
        )
    k = np.arange(4**d)[:, None]
    return (k // 4 ** np.arange(d)[None, :]) % 4


def phases_from_exponents(exponents):
    return UNIT_PHASES[np.asarray(exponents) % 4]


def phase_vectors(d):
    return [tuple(complex(z) for z in row) for row in phases_from_exponents(phase_exponents(d))]


def second_moment(d):
    """(1/4^d) sum_k z_r conj(z_s), as a d x d matrix"""
    z = phases_from_exponents(phase_exponents(d))
    return z.T @ z.conj() / 4**d


def fourth_moment(d, conjugate_second_pair=True):
    """
    M[i, j, r, s] = (1/4^d) sum_k z_i conj(z_j) w_r conj(w_s).

    With ``conjugate_second_pair`` w = conj(z), which is the pairing that
    gives delta(i, r) delta(j, s); with w = z the average is
    delta(i, s) delta(j, r) instead, because the mean of z^2 vanishes.
    """
    z = phases_from_exponents(phase_exponents(d))
    w = z.conj() if conjugate_second_pair else z
    return np.einsum("ki,kj,kr,ks->ijrs", z, z.conj(), w, w.conj()) / 4**d
