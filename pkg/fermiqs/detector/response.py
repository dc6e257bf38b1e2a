"""Module for the field-induced response of a pointlike Unruh-DeWitt detector

For a stationary trajectory the double proper time integral collapses to

    p(Omega) = lambda^2 * integral du K(u) exp(-i Omega u) W(u)

with K the switching autocorrelation. The integral is folded onto [0, U],
split into geometric core intervals around the regulated singularity and an
oscillatory tail handled with QUADPACK's cos/sin weights, then Richardson
extrapolated in epsilon.
"""

import collections
import math
import warnings

import numpy as np
from retry import retry
from scipy import integrate, special

from fermiqs.constants import QUADRATURE, RETRIES, VALIDITY
from fermiqs.exceptions import DomainError, NonConvergenceError, QuadratureError
from fermiqs.logger import Logger
from .wightman import WightmanSpec, pulled_back_wightman, regulator

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name

FieldResponse = collections.namedtuple('FieldResponse', ['probability', 'error', 'converged'])


class UDWDetector(object):
    """Pointlike two-level probe coupled linearly to a scalar field

    Attributes
    ----------
    gap : float
        energy gap Omega = E_n - E_m of the probed transition
    coupling : float
        coupling constant lambda
    switching : GaussianSwitching
        switching function
    internal : OscillatorSpec
        internal oscillator whose matrix elements enter the relativistic
        noise, or None
    static_corrections_absorbed : bool
        true when constant acceleration and curvature corrections have been
        absorbed into the internal Hamiltonian
    """

    def __init__(self, gap, coupling, switching, **kwargs):
        if not (math.isfinite(gap) and math.isfinite(coupling)):
            raise DomainError('gap and coupling must be finite')
        self.gap = float(gap)
        self.coupling = float(coupling)
        self.switching = switching
        self.internal = kwargs.pop('internal', None)
        self.static_corrections_absorbed = kwargs.pop('static_corrections_absorbed', False)

    def __repr__(self):
        return 'UDWDetector(gap=%r, coupling=%r, switching=%r, internal=%r)' % (
            self.gap, self.coupling, self.switching, self.internal)

    def with_gap(self, gap):
        """ Copy probing another gap """
        return UDWDetector(gap, self.coupling, self.switching, internal=self.internal,
                           static_corrections_absorbed=self.static_corrections_absorbed)


class _Integrator(object):
    """Single QUADPACK integral, retried with a larger subdivision limit

    Integration warnings are turned into QuadratureError; the retry decorator
    repeats the attempt and the last estimate is kept for non-strict callers.
    """

    def __init__(self, function, lower, upper, **kwargs):
        self.function = function
        self.lower = lower
        self.upper = upper
        self.quad_kwargs = kwargs
        self.limit = QUADRATURE['LIMIT']
        self.last = None

    @retry(exceptions=QuadratureError,
           tries=RETRIES['QUADRATURE'],
           delay=RETRIES['DELAY_IN_SECS'])
    def _attempt(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always', integrate.IntegrationWarning)
            value, error = integrate.quad(self.function, self.lower, self.upper,
                                          epsabs=QUADRATURE['EPSABS'],
                                          epsrel=QUADRATURE['EPSREL'],
                                          limit=self.limit,
                                          **self.quad_kwargs)
        self.last = (value, error)
        issues = [w for w in caught if issubclass(w.category, integrate.IntegrationWarning)]
        if issues:
            logger.debug('Quadrature on [%s, %s] with limit %s failed: %s',
                         self.lower, self.upper, self.limit, issues[0].message)
            self.limit *= RETRIES['LIMIT_GROWTH']
            raise QuadratureError(str(issues[0].message))
        return value, error

    def integrate(self, strict=True):
        """Run the integral

        Parameters
        ----------
        strict : bool
            raise instead of returning the last estimate

        Returns
        -------
        tuple
            (value, error, converged)

        Raises
        ------
        NonConvergenceError
            if every attempt failed and strict is set
        """

        try:
            value, error = self._attempt()
            return value, error, True
        except QuadratureError as err:
            if strict:
                raise NonConvergenceError('Quadrature on [%s, %s] did not converge: %s' % (
                    self.lower, self.upper, err))
            value, error = self.last
            return value, error, False


def _window(switching, omega, window_factor):
    """ Half window U >= factor * max(T, 1/|omega|) """

    scale = switching.width if omega == 0 else max(switching.width, 1.0 / abs(omega))
    return window_factor * scale


def _folded_response(det, spec, omega, window_factor, strict):
    """Integral of K(u) exp(-i omega u) W(u) over the real line at fixed epsilon

    Returns
    -------
    tuple
        (value, error, scale, converged), scale being the sum of absolute
        segment contributions
    """

    switching = det.switching

    def _even(u):
        # multiplies cos(omega u)
        return switching.autocorrelation(u) * (pulled_back_wightman(spec, u) +
                                               pulled_back_wightman(spec, -u))

    def _odd(u):
        # multiplies sin(omega u)
        return 1j * switching.autocorrelation(u) * (pulled_back_wightman(spec, -u) -
                                                    pulled_back_wightman(spec, u))

    def _full(u):
        return np.cos(omega * u) * _even(u) + np.sin(omega * u) * _odd(u)

    upper = _window(switching, omega, window_factor)
    edges = [0.0] + [spec.epsilon * QUADRATURE['CORE_RATIO'] ** k
                     for k in range(QUADRATURE['CORE_DECADES'] + 1)]
    edges = [edge for edge in edges if edge < upper] + [upper]
    core_end = edges[-2] if len(edges) > 2 else edges[-1]
    core_edges = [edge for edge in edges if edge <= core_end]

    pieces = []
    for lower, higher in zip(core_edges[:-1], core_edges[1:]):
        pieces.append(('real', _Integrator(lambda u: _full(u).real, lower, higher)))
        pieces.append(('imag', _Integrator(lambda u: _full(u).imag, lower, higher)))

    # the Gaussian envelope makes everything beyond window_factor * T negligible
    split = min(upper, max(core_end, window_factor * switching.width))
    tail_edges = [edge for edge in (core_end, split, upper) if edge >= core_end]
    tail_edges = sorted(set(tail_edges))
    sign = math.copysign(1.0, omega)
    for lower, higher in zip(tail_edges[:-1], tail_edges[1:]):
        if omega == 0:
            pieces.append(('real', _Integrator(lambda u: _even(u).real, lower, higher)))
            pieces.append(('imag', _Integrator(lambda u: _even(u).imag, lower, higher)))
            continue
        weights = {'weight': 'cos', 'wvar': abs(omega)}
        pieces.append(('real', _Integrator(lambda u: _even(u).real, lower, higher, **weights)))
        pieces.append(('imag', _Integrator(lambda u: _even(u).imag, lower, higher, **weights)))
        weights = {'weight': 'sin', 'wvar': abs(omega)}
        pieces.append(('real', _Integrator(lambda u: sign * _odd(u).real, lower, higher, **weights)))
        pieces.append(('imag', _Integrator(lambda u: sign * _odd(u).imag, lower, higher, **weights)))

    real = imag = error = scale = 0.0
    converged = True
    for part, integrator in pieces:
        value, piece_error, piece_converged = integrator.integrate(strict=strict)
        logger.trace('%s part on [%s, %s]: %s (+/- %s)', part, integrator.lower,
                     integrator.upper, value, piece_error)
        converged = converged and piece_converged
        error += piece_error
        if part == 'real':
            real += value
            scale += abs(value)
        else:
            imag += value
    return real, error + abs(imag), scale, converged


def field_response(det, spec, omega=None, **kwargs):
    """Excitation probability due to the interaction with the field

    Parameters
    ----------
    det : UDWDetector
        the detector
    spec : WightmanSpec
        stationary trajectory and regulator epsilon
    omega : float
        gap to probe (default det.gap)
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    window_factor : float
        integration half window in units of max(T, 1/|omega|)
    strict : bool
        raise NonConvergenceError on failure (default True)

    Returns
    -------
    FieldResponse
        Richardson extrapolation 2 p(eps/2) - p(eps), with an error estimate
        combining both quadratures and the imaginary residue

    Raises
    ------
    NonConvergenceError
        if the quadrature fails after all retries, or its error exceeds the
        tolerance, and strict is set
    """

    window_factor = kwargs.pop('window_factor', QUADRATURE['WINDOW_FACTOR'])
    strict = kwargs.pop('strict', True)
    omega = det.gap if omega is None else omega
    if not math.isfinite(omega):
        raise DomainError('omega must be finite')

    if det.coupling == 0.0:
        return FieldResponse(0.0, 0.0, True)

    coarse = _folded_response(det, spec, omega, window_factor, strict)
    fine = _folded_response(det, spec.with_epsilon(0.5 * spec.epsilon), omega,
                            window_factor, strict)

    value = 2.0 * fine[0] - coarse[0]
    error = 2.0 * fine[1] + coarse[1]
    scale = max(coarse[2], fine[2])
    converged = (coarse[3] and fine[3] and
                 error <= max(QUADRATURE['RTOL'] * scale, QUADRATURE['ATOL']))
    logger.debug('Field response at omega=%s: %s (+/- %s, converged=%s)',
                 omega, value, error, converged)

    if strict and not converged:
        raise NonConvergenceError('Field response at omega=%s did not converge (error %.3e)' % (
            omega, error))

    factor = det.coupling ** 2
    return FieldResponse(factor * value, factor * error, converged)


def detailed_balance_ratio(det, a, omega=None, **kwargs):
    """Excitation to de-excitation ratio for a uniformly accelerated detector

    Parameters
    ----------
    det : UDWDetector
        the detector
    a : float
        proper acceleration
    omega : float
        gap (default det.gap)
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    epsilon_factor : float
        regulator factor
    window_factor : float
        integration half window factor

    Returns
    -------
    tuple
        (measured p(omega) / p(-omega), KMS value exp(-2 pi omega / a)); the
        measured ratio is None when p(-omega) vanishes, e.g. at zero coupling

    Notes
    -----
    The KMS value is only approached for long switching; a warning is logged
    when |omega| T or a T falls below VALIDITY['KMS_MIN_PRODUCT']
    """

    if not (math.isfinite(a) and a > 0):
        raise DomainError('a must be positive')
    omega = det.gap if omega is None else omega
    width = det.switching.width
    minimum = VALIDITY['KMS_MIN_PRODUCT']
    if min(abs(omega), a) * width < minimum:
        logger.warning('Detailed balance needs |omega| T and a T of at least %s, got %.3g and %.3g',
                       minimum, abs(omega) * width, a * width)
    epsilon = regulator(det.switching, a,
                        epsilon_factor=kwargs.pop('epsilon_factor', QUADRATURE['EPSILON_FACTOR']))
    spec = WightmanSpec.rindler(a, epsilon)

    excitation = field_response(det, spec, omega, **kwargs)
    de_excitation = field_response(det, spec, -omega, **kwargs)
    kms = math.exp(-2.0 * math.pi * omega / a)
    if de_excitation.probability == 0.0:
        return None, kms
    return excitation.probability / de_excitation.probability, kms


def inertial_reference_response(det, omega=None):
    """ Closed form inertial vacuum response lambda^2/(4 pi) [e^-(wT)^2 - sqrt(pi) wT erfc(wT)] """

    omega = det.gap if omega is None else omega
    product = omega * det.switching.width
    return det.coupling ** 2 / (4.0 * math.pi) * (
        math.exp(-product ** 2) - math.sqrt(math.pi) * product * special.erfc(product))


def _planck_rate(a, omega):
    """ omega / (2 pi (exp(2 pi omega / a) - 1)), a / (4 pi^2) at omega = 0 """

    return a / (4.0 * math.pi ** 2) / special.exprel(2.0 * math.pi * omega / a)


def thermal_reference_response(det, a, omega=None):
    """Gaussian smeared Planckian response of a uniformly accelerated detector

    Parameters
    ----------
    det : UDWDetector
        the detector
    a : float
        proper acceleration
    omega : float
        gap (default det.gap)

    Returns
    -------
    float
        lambda^2 T^2 * integral d nu exp(-(omega - nu)^2 T^2) F_a(nu)
    """

    if not (math.isfinite(a) and a > 0):
        raise DomainError('a must be positive')
    omega = det.gap if omega is None else omega
    width = det.switching.width
    reach = QUADRATURE['WINDOW_FACTOR'] / width

    value, _, _ = _Integrator(
        lambda nu: math.exp(-(omega - nu) ** 2 * width ** 2) * _planck_rate(a, nu),
        omega - reach, omega + reach, points=[omega]).integrate()
    return det.coupling ** 2 * width ** 2 * value
