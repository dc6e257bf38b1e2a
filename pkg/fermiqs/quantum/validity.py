"""Module for the localization and non-relativistic validity checks"""

import collections
import math

from scipy import constants as si

from fermiqs.constants import HYDROGEN, UNBOUNDED, VALIDITY
from fermiqs.exceptions import DomainError
from fermiqs.geometry import ell_estimate, lambda_r
from fermiqs.logger import Logger
from .grid import WaveFunction, position_spread

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name

ValidityReport = collections.namedtuple(
    'ValidityReport',
    ['localization', 'bound', 'energy_ratio', 'localized_ok', 'nonrelativistic_ok'])

HydrogenValidity = collections.namedtuple('HydrogenValidity', ['valid', 'threshold', 'extent'])


def validity_report(localization, frame, m, h_nr_expectation, **kwargs):
    """Check a state is localized inside the Fermi bound and non-relativistic

    Parameters
    ----------
    localization : float, WaveFunction
        the extent of the state, or a grid state whose sqrt(<x^2>) is used
    frame : FermiFrameSample
        frame at the current proper time
    m : float
        rest mass
    h_nr_expectation : float
        <H_NR>, the energy above the rest mass
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    threshold : float
        largest acceptable <H_NR> / m (default constants value)

    Returns
    -------
    ValidityReport
        localized_ok is localization < 1 / (a + sqrt(lambda_R)),
        nonrelativistic_ok is energy_ratio < threshold
    """

    threshold = kwargs.pop('threshold', VALIDITY['ENERGY_RATIO_THRESHOLD'])
    if not m > 0:
        raise DomainError('m must be positive')

    if isinstance(localization, WaveFunction):
        localization = position_spread(localization)
    bound = ell_estimate(frame.acceleration_norm(), lambda_r(frame.r0i0j))
    energy_ratio = h_nr_expectation / m

    report = ValidityReport(localization,
                            bound,
                            energy_ratio,
                            bound == UNBOUNDED or localization < bound,
                            energy_ratio < threshold)
    logger.debug('Validity report: %s', report)
    return report


def hydrogen_validity(n, a_si, lambda_r_si=0.0):
    """Check a hydrogen atom in level n is small enough for its frame

    Parameters
    ----------
    n : int
        principal quantum number
    a_si : float
        acceleration in m/s^2
    lambda_r_si : float
        tidal eigenvalue in 1/m^2

    Returns
    -------
    HydrogenValidity
        extent 2 n^2 hbar / (alpha^2 m_e c) in meters, threshold c^2 / extent
        in m/s^2, and valid = a + c^2 sqrt(lambda_R) < threshold

    Raises
    ------
    DomainError
        if n is outside 1..10^6 or the inputs are negative
    """

    if not 1 <= n <= HYDROGEN['MAX_PRINCIPAL_NUMBER']:
        raise DomainError('n must be between 1 and %s' % HYDROGEN['MAX_PRINCIPAL_NUMBER'])
    if a_si < 0 or lambda_r_si < 0:
        raise DomainError('a and lambda_R must be non-negative')

    extent = 2.0 * n ** 2 * si.hbar / (si.fine_structure ** 2 * si.m_e * si.c)
    threshold = si.c ** 2 / extent
    return HydrogenValidity(a_si + si.c ** 2 * math.sqrt(lambda_r_si) < threshold, threshold, extent)


def unruh_temperature(a_si):
    """ Unruh temperature hbar a / (2 pi c k_B) in kelvin """

    return si.hbar * a_si / (2.0 * math.pi * si.c * si.k)
