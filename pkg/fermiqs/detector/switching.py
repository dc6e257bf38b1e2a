"""Module for detector switching functions"""

import math

import numpy as np

from fermiqs.exceptions import DomainError


class GaussianSwitching(object):
    """Gaussian switching chi(tau) = exp(-(tau - tau_0)^2 / (2 T^2))

    Attributes
    ----------
    width : float
        proper time width T
    center : float
        proper time center tau_0
    """

    def __init__(self, width, center=0.0):
        if not (math.isfinite(width) and width > 0):
            raise DomainError('switching width must be finite and positive')
        if not math.isfinite(center):
            raise DomainError('switching center must be finite')
        self.width = float(width)
        self.center = float(center)

    def __repr__(self):
        return 'GaussianSwitching(width=%r, center=%r)' % (self.width, self.center)

    def __call__(self, tau):
        return np.exp(-(np.asarray(tau) - self.center) ** 2 / (2.0 * self.width ** 2))

    def autocorrelation(self, u):
        """ K(u) = sqrt(pi) T exp(-u^2 / 4T^2) """
        return math.sqrt(math.pi) * self.width * np.exp(-np.asarray(u) ** 2 / (4.0 * self.width ** 2))

    def fourier_magnitude(self, omega):
        """ |chi~(omega)| = sqrt(2 pi) T exp(-omega^2 T^2 / 2), independent of the center """
        return math.sqrt(2.0 * math.pi) * self.width * np.exp(
            -np.asarray(omega) ** 2 * self.width ** 2 / 2.0)


def switching_autocorrelation(chi, u):
    """Autocorrelation of a switching function

    Parameters
    ----------
    chi : GaussianSwitching
        the switching function
    u : float
        proper time difference

    Returns
    -------
    float
        integral of chi(s + u/2) chi(s - u/2) over s
    """

    return chi.autocorrelation(u)
