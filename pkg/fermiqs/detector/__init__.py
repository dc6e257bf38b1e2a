"""Module for Unruh-DeWitt detector responses

    Example - Basic::

        from fermiqs.detector import GaussianSwitching, UDWDetector, WightmanSpec
        from fermiqs.detector import field_response, detailed_balance_ratio

        det = UDWDetector(1.0, 0.01, GaussianSwitching(20.0))
        spec = WightmanSpec.rindler(6.283185307179586, 1e-3 / 6.283185307179586)
        field_response(det, spec).probability

        detailed_balance_ratio(det, 6.283185307179586)  # (~0.368, 0.368)

    Example - Relativistic noise::

        from fermiqs.geometry import FermiFrameSample
        from fermiqs.quantum import OscillatorSpec
        from fermiqs.detector import rel_noise_probability

        det = UDWDetector(1.0, 0.01, GaussianSwitching(1.0), internal=OscillatorSpec(1.0, 1.0))
        rel_noise_probability(det, FermiFrameSample.uniform_acceleration(0.1), (0, 1))  # 0.011557
"""

from .switching import GaussianSwitching, switching_autocorrelation
from .wightman import WightmanKind, WightmanSpec, pulled_back_wightman, regulator
from .response import (FieldResponse, UDWDetector, detailed_balance_ratio, field_response,
                       inertial_reference_response, thermal_reference_response)
from .noise import (ResponseResult, absorb_static_corrections, position_element,
                    position_squared_element, rel_noise_probability, response_report)

__all__ = [
    'GaussianSwitching',
    'switching_autocorrelation',
    'WightmanKind',
    'WightmanSpec',
    'pulled_back_wightman',
    'regulator',
    'FieldResponse',
    'UDWDetector',
    'detailed_balance_ratio',
    'field_response',
    'inertial_reference_response',
    'thermal_reference_response',
    'ResponseResult',
    'absorb_static_corrections',
    'position_element',
    'position_squared_element',
    'rel_noise_probability',
    'response_report'
]
