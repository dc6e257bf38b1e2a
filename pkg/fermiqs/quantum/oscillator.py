"""Module for the harmonic oscillator in a curved, accelerated frame

For an isotropic trap V = m omega^2 x^2 / 2 and a frame with
R_0i0j = -alpha delta_ij, the leading corrections keep the oscillator
harmonic: the frequency becomes omega'^2 = omega^2 - alpha, the center moves
to -a / omega'^2 and the ground state energy drops by m a^2 / (2 omega'^2).
"""

import math

import numpy as np

from fermiqs.constants import UNBOUNDED
from fermiqs.decorators import check_finite
from fermiqs.exceptions import DomainError


class OscillatorSpec(object):
    """Isotropic harmonic trap

    Attributes
    ----------
    m : float
        rest mass
    omega : float
        trap frequency
    dimension : int
        1 or 3
    """

    def __init__(self, m, omega, dimension=1):
        if not (math.isfinite(m) and m > 0):
            raise DomainError('m must be finite and positive')
        if not (math.isfinite(omega) and omega >= 0):
            raise DomainError('omega must be finite and non-negative')
        if dimension not in (1, 3):
            raise DomainError('dimension must be 1 or 3')
        self.m = float(m)
        self.omega = float(omega)
        self.dimension = dimension

    def __repr__(self):
        return 'OscillatorSpec(m=%r, omega=%r, dimension=%r)' % (self.m, self.omega, self.dimension)

    def potential(self, x):
        """ V(x) = m omega^2 x^2 / 2 """
        return 0.5 * self.m * self.omega ** 2 * np.asarray(x, dtype=float) ** 2

    def energy(self, k):
        """ Uncorrected level k of the 1-D oscillator, rest mass included """
        return self.m + self.omega * (k + 0.5)


class CorrectedSpectrum(object):
    """Closed-form spectrum of the corrected oscillator

    Attributes
    ----------
    omega_prime : float
        corrected frequency, nan when invalid
    displacement : ndarray
        shift of the trap center, -a / omega'^2
    ground_shift : float
        energy shift -m a^2 / (2 omega'^2)
    valid : bool
        false when omega^2 <= alpha and the particle is not trapped
    m : float
        rest mass
    """

    def __init__(self, omega_prime, displacement, ground_shift, valid, m):
        self.omega_prime = omega_prime
        self.displacement = np.asarray(displacement, dtype=float)
        self.ground_shift = ground_shift
        self.valid = valid
        self.m = m

    def __repr__(self):
        return 'CorrectedSpectrum(omega_prime=%r, ground_shift=%r, valid=%r)' % (
            self.omega_prime, self.ground_shift, self.valid)

    def energy(self, k, **kwargs):
        """Energy of level k

        Parameters
        ----------
        k : int
            level index (total quantum number in 3-D)
        **kwargs :
            optional keyword arguments

        Keyword Arguments
        -----------------
        dimension : int
            1 or 3 (default 1)
        include_rest_mass : bool
            add m to the energy (default True)

        Returns
        -------
        float
            m + ground_shift + omega' (k + dimension / 2), nan when invalid
        """

        dimension = kwargs.pop('dimension', 1)
        include_rest_mass = kwargs.pop('include_rest_mass', True)
        if not self.valid:
            return float('nan')
        energy = self.ground_shift + self.omega_prime * (k + 0.5 * dimension)
        return energy + self.m if include_rest_mass else energy


@check_finite
def oscillator_corrected_spectrum(spec, alpha, a):
    """Closed-form corrected oscillator

    Parameters
    ----------
    spec : OscillatorSpec
        the trap
    alpha : float
        curvature constant, R_0i0j = -alpha delta_ij
    a : float, list
        acceleration (a scalar is taken along the first axis)

    Returns
    -------
    CorrectedSpectrum
        valid=False with nan fields when omega^2 <= alpha
    """

    a = np.array([a, 0.0, 0.0] if np.ndim(a) == 0 else a, dtype=float)
    omega_prime_sq = spec.omega ** 2 - alpha
    if omega_prime_sq <= 0.0:
        return CorrectedSpectrum(float('nan'), np.full(3, np.nan), float('nan'), False, spec.m)

    return CorrectedSpectrum(math.sqrt(omega_prime_sq),
                             -a / omega_prime_sq,
                             -spec.m * float(a.dot(a)) / (2.0 * omega_prime_sq),
                             True,
                             spec.m)


def oscillator_localization(spec, mean_n=0.0):
    """ Extent r / sqrt(m omega) with r = sqrt(2 <n> + 1); unbounded for a free particle """

    if mean_n < 0:
        raise DomainError('mean_n must be non-negative')
    if spec.omega == 0.0:
        return UNBOUNDED
    return math.sqrt(2.0 * mean_n + 1.0) / math.sqrt(spec.m * spec.omega)


@check_finite
def minimum_trapping_frequency(a, lambda_value, m, mean_n=0.0):
    """Smallest trap frequency keeping an oscillator inside the Fermi bound

    Parameters
    ----------
    a : float
        acceleration norm
    lambda_value : float
        tidal eigenvalue lambda_R
    m : float
        rest mass
    mean_n : float
        mean excitation number

    Returns
    -------
    float
        (a + sqrt(lambda_R))^2 (2 <n> + 1) / m
    """

    if not m > 0:
        raise DomainError('m must be positive')
    return (abs(a) + math.sqrt(max(lambda_value, 0.0))) ** 2 * (2.0 * mean_n + 1.0) / m
