"""Module for the relativistic noise term and the probe validity report"""

import collections
import math

import numpy as np

from fermiqs.constants import VALIDITY
from fermiqs.exceptions import DomainError, InputRequiredError, NonStationaryFrameError
from fermiqs.geometry import TrajectoryModel
from fermiqs.logger import Logger
from fermiqs.quantum import OscillatorSpec, oscillator_corrected_spectrum
from .response import UDWDetector, field_response

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name

ResponseResult = collections.namedtuple(
    'ResponseResult',
    ['p_field', 'p_rel', 'noise_ratio', 'converged', 'quadrature_error_estimate', 'probe_valid'])


def _constant_frame(frame, tau):
    """ A FermiFrameSample, rejecting trajectories whose frame changes """

    if not isinstance(frame, TrajectoryModel):
        return frame
    if not frame.is_stationary():
        raise NonStationaryFrameError('The correction Hamiltonian must be constant in tau')
    lower, upper = frame.tau_range
    return frame.frame_at(min(max(tau, lower), upper))


def _axis_couplings(frame):
    """ (a_1, R_0101): the internal oscillator sits on the first Fermi axis """

    if np.any(frame.a[1:]) or np.any(frame.r0i0j[0, 1:]):
        raise DomainError('acceleration and tidal terms must not couple the first Fermi axis '
                          'to transverse directions; rotate the frame onto that axis')
    return frame.a[0], frame.r0i0j[0, 0]


def position_element(spec, final, initial):
    """ <final|x|initial> for a 1-D oscillator """

    scale = 1.0 / math.sqrt(2.0 * spec.m * spec.omega)
    if final == initial + 1:
        return math.sqrt(initial + 1) * scale
    if final == initial - 1:
        return math.sqrt(initial) * scale
    return 0.0


def position_squared_element(spec, final, initial):
    """ <final|x^2|initial> for a 1-D oscillator """

    scale = 1.0 / (2.0 * spec.m * spec.omega)
    if final == initial + 2:
        return math.sqrt((initial + 1) * (initial + 2)) * scale
    if final == initial - 2:
        return math.sqrt(initial * (initial - 1)) * scale
    if final == initial:
        return (2 * initial + 1) * scale
    return 0.0


def rel_noise_probability(det, frame, transition, **kwargs):
    """Transition probability driven by the acceleration and curvature corrections

    Parameters
    ----------
    det : UDWDetector
        the detector, its internal oscillator supplies the matrix elements
    frame : FermiFrameSample, TrajectoryModel
        constant frame over the switching support
    transition : tuple
        (n, m) initial and final oscillator levels
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    mass : float
        rest mass multiplying the correction Hamiltonian (default internal m)

    Returns
    -------
    float
        |chi~(omega (m - n))|^2 |<m| M a x + (M/2) R_00 x^2 |n>|^2 along the
        first Fermi axis; zero without an internal oscillator or once static
        corrections are absorbed

    Raises
    ------
    NonStationaryFrameError
        if the frame changes with tau
    DomainError
        if the transition is not between two distinct levels, or the frame
        couples the first Fermi axis to transverse directions
    """

    initial, final = transition
    if initial < 0 or final < 0 or initial == final:
        raise DomainError('transition must connect two distinct non-negative levels')
    frame = _constant_frame(frame, det.switching.center)

    spec = det.internal
    if spec is None or det.static_corrections_absorbed or spec.omega == 0.0:
        return 0.0
    mass = kwargs.pop('mass', spec.m)
    a_axis, tidal = _axis_couplings(frame)

    amplitude = (mass * a_axis * position_element(spec, final, initial) +
                 0.5 * mass * tidal * position_squared_element(spec, final, initial))
    gap = spec.omega * (final - initial)
    return float(det.switching.fourier_magnitude(gap) ** 2 * amplitude ** 2)


def response_report(det, spec, frame, transition, **kwargs):
    """Compare the field-induced and the relativistic transition probabilities

    Parameters
    ----------
    det : UDWDetector
        the detector
    spec : WightmanSpec
        field two-point function along the trajectory
    frame : FermiFrameSample, TrajectoryModel
        constant frame components
    transition : tuple
        (n, m) levels for the relativistic noise
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    threshold : float
        largest noise ratio for a valid probe (default constants value)
    mass : float
        rest mass in the correction Hamiltonian
    window_factor : float
        passed to field_response
    strict : bool
        passed to field_response

    Returns
    -------
    ResponseResult
        noise_ratio and probe_valid are None unless p_field exceeds ten times
        its error estimate
    """

    threshold = kwargs.pop('threshold', VALIDITY['NOISE_RATIO_THRESHOLD'])
    noise_kwargs = {key: kwargs.pop(key) for key in ('mass',) if key in kwargs}

    field = field_response(det, spec, **kwargs)
    p_rel = rel_noise_probability(det, frame, transition, **noise_kwargs)

    noise_ratio = None
    if field.probability > 0 and field.probability > VALIDITY['SIGNIFICANCE'] * field.error:
        noise_ratio = p_rel / field.probability
    result = ResponseResult(field.probability,
                            p_rel,
                            noise_ratio,
                            field.converged,
                            field.error,
                            None if noise_ratio is None else noise_ratio < threshold)
    logger.debug('Response report: %s', result)
    return result


def absorb_static_corrections(det, frame):
    """Absorb constant corrections into the internal oscillator

    Parameters
    ----------
    det : UDWDetector
        the detector, with an internal oscillator
    frame : FermiFrameSample, TrajectoryModel
        constant frame components

    Returns
    -------
    UDWDetector
        detector with omega' = sqrt(omega^2 - alpha), alpha = -R_00, gap
        scaled by omega' / omega (set to omega' for a free particle) and no
        remaining relativistic noise

    Raises
    ------
    InputRequiredError
        without an internal oscillator
    DomainError
        if omega^2 <= alpha and the particle is not trapped, or the frame
        couples the first Fermi axis to transverse directions
    """

    if det.internal is None:
        raise InputRequiredError('Absorbing corrections needs an internal oscillator')
    frame = _constant_frame(frame, det.switching.center)

    internal = det.internal
    a_axis, tidal = _axis_couplings(frame)
    corrected = oscillator_corrected_spectrum(internal, -tidal, a_axis)
    if not corrected.valid:
        raise DomainError('omega^2 <= alpha: the corrected oscillator is not trapping')

    gap = det.gap * corrected.omega_prime / internal.omega if internal.omega else corrected.omega_prime
    return UDWDetector(gap,
                       det.coupling,
                       det.switching,
                       internal=OscillatorSpec(internal.m, corrected.omega_prime, internal.dimension),
                       static_corrections_absorbed=True)
