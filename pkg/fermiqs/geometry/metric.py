"""Module for the Fermi normal coordinate metric, redshift and volume factors"""

import numpy as np
from scipy import linalg

from fermiqs.constants import TOLERANCES
from fermiqs.decorators import check_finite
from fermiqs.exceptions import DegenerateMetricError, DomainError


class MetricComponents(object):
    """Metric components at one point of the rest space

    Attributes
    ----------
    g_tt : float
        g_tau tau component
    g_ti : ndarray
        g_tau i components, shape (3,)
    h : ndarray
        induced spatial metric h_ij, shape (3, 3)
    """

    def __init__(self, g_tt, g_ti, h):
        self.g_tt = float(g_tt)
        self.g_ti = np.array(g_ti, dtype=float)
        self.h = np.array(h, dtype=float)
        if self.g_ti.shape != (3,) or self.h.shape != (3, 3):
            raise DomainError('g_ti must have shape (3,) and h shape (3, 3)')
        if not (np.isfinite(self.g_tt) and np.all(np.isfinite(self.g_ti)) and
                np.all(np.isfinite(self.h))):
            raise DomainError('metric components must be finite')

    def __repr__(self):
        return 'MetricComponents(g_tt=%r, g_ti=%r, h=%r)' % (
            self.g_tt, self.g_ti.tolist(), self.h.tolist())

    def full(self):
        """ The 4x4 spacetime metric in (tau, x) ordering """

        metric = np.empty((4, 4))
        metric[0, 0] = self.g_tt
        metric[0, 1:] = self.g_ti
        metric[1:, 0] = self.g_ti
        metric[1:, 1:] = self.h
        return metric

    @property
    def redshift(self):
        """ Redshift factor, see redshift_exact() """
        return redshift_exact(self)

    @property
    def sqrt_g_sigma(self):
        """ sqrt(det h), see volume_factors() """
        return volume_factors(self)[0]

    @property
    def sqrt_minus_g(self):
        """ sqrt(-det g), see volume_factors() """
        return volume_factors(self)[1]


@check_finite
def eval_fermi_metric(frame, x):
    """Evaluate the second order Fermi normal coordinate metric

    Parameters
    ----------
    frame : FermiFrameSample
        the frame components at the current proper time
    x : list
        point in the rest space (Fermi coordinates)

    Returns
    -------
    MetricComponents
        g_tt = -(1 + a.x)^2 - R_0i0j x^i x^j,
        g_ti = -(2/3) R_0jik x^j x^k,
        h_ij = delta_ij - (1/3) R_ikjl x^k x^l

    Notes
    -----
    No truncation is applied; keeping |x| inside the validity radius is
    the caller's responsibility
    """

    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise DomainError('x must be a 3-vector')

    g_tt = -(1.0 + frame.a.dot(x)) ** 2 - x.dot(frame.r0i0j).dot(x)
    g_ti = -(2.0 / 3.0) * np.einsum('jik,j,k->i', frame.r0jik, x, x)
    h = np.eye(3) - (1.0 / 3.0) * np.einsum('ikjl,k,l->ij', frame.rikjl, x, x)
    return MetricComponents(g_tt, g_ti, h)


def redshift_exact(g):
    """Redshift factor of the tau = const foliation

    Parameters
    ----------
    g : MetricComponents
        metric at the point

    Returns
    -------
    float
        |g_tt - g_ti g_tj h^ij|^(1/2)

    Raises
    ------
    DegenerateMetricError
        if h is singular, which signals a point outside the Fermi bound
    """

    if abs(linalg.det(g.h)) < TOLERANCES['DEGENERATE_DET']:
        raise DegenerateMetricError('Induced metric is singular')
    shift = g.g_ti.dot(np.linalg.solve(g.h, g.g_ti))
    return float(np.sqrt(abs(g.g_tt - shift)))


@check_finite
def redshift_series(frame, x):
    """ Truncated redshift 1 + a_i x^i + R_0i0j x^i x^j / 2 """

    x = np.asarray(x, dtype=float)
    return float(1.0 + frame.a.dot(x) + 0.5 * x.dot(frame.r0i0j).dot(x))


def volume_factors(g):
    """Spatial and spacetime volume factors

    Parameters
    ----------
    g : MetricComponents
        metric at the point

    Returns
    -------
    tuple
        (sqrt(g_Sigma), sqrt(-g)), where sqrt(-g) is computed from the full
        4x4 determinant so that sqrt(g_Sigma) * redshift == sqrt(-g) is a
        genuine identity check

    Raises
    ------
    DegenerateMetricError
        if h is not positive definite or the spacetime metric is not Lorentzian
    """

    try:
        cholesky = linalg.cholesky(g.h, lower=True)
    except linalg.LinAlgError:
        raise DegenerateMetricError('Induced metric is not positive definite')
    sqrt_g_sigma = float(np.prod(np.diag(cholesky)))

    minus_det = -np.linalg.det(g.full())
    if minus_det <= 0.0:
        raise DegenerateMetricError('Spacetime metric is not Lorentzian (det g = %s)' % -minus_det)
    return sqrt_g_sigma, float(np.sqrt(minus_det))
