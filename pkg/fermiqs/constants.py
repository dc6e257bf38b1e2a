""" Constants used throughout this package """

import logging

VERSION = '0.4.0'
DFL_LOG_LEVEL = logging.WARNING

# largest representable "no bound" value, rendered as 'unbounded' in CSV output
UNBOUNDED = float('inf')

ENV_VARS = {
    'LOG_LEVEL_ENV_VAR': 'FERMIQS_LOG_LEVEL'
}

SPATIAL_DIMENSION = 3

FINITE_DIFFERENCE = {
    'DFL_ORDER': 8,
    'MIN_POINTS': 8,
    # central first-derivative weights for offsets 1..order/2 (antisymmetric stencil)
    'FIRST_DERIVATIVE': {
        2: (1.0 / 2.0,),
        4: (2.0 / 3.0, -1.0 / 12.0),
        6: (3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0),
        8: (4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0)
    },
    # central second-derivative weights for offsets 0..order/2 (symmetric stencil)
    'SECOND_DERIVATIVE': {
        2: (-2.0, 1.0),
        4: (-5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0),
        6: (-49.0 / 18.0, 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0),
        8: (-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0)
    }
}

GRID = {
    'DFL_POINTS': 2001,
    'DFL_X_MIN': -10.0,
    'DFL_X_MAX': 10.0
}

TOLERANCES = {
    'SYMMETRY': 1e-12,
    'HERMITIAN': 1e-12,
    'DEGENERATE_DET': 1e-14
}

QUADRATURE = {
    # regulator epsilon = EPSILON_FACTOR * min(T, 1/a)
    'EPSILON_FACTOR': 1e-3,
    # half window U >= WINDOW_FACTOR * max(T, 1/|omega|)
    'WINDOW_FACTOR': 10.0,
    # core intervals [0, eps], [eps, 10 eps], ... are split by this ratio
    'CORE_RATIO': 10.0,
    'CORE_DECADES': 4,
    'EPSABS': 1e-13,
    'EPSREL': 1e-10,
    'LIMIT': 200,
    # converged when error <= max(RTOL * sum of |segment values|, ATOL)
    'RTOL': 1e-6,
    'ATOL': 1e-10
}

RETRIES = {
    'QUADRATURE': 3,
    'DELAY_IN_SECS': 0,
    'LIMIT_GROWTH': 4
}

VALIDITY = {
    'ENERGY_RATIO_THRESHOLD': 0.01,
    'NOISE_RATIO_THRESHOLD': 0.1,
    # noise ratio is only defined when p_field exceeds this multiple of its error
    'SIGNIFICANCE': 10.0,
    # detailed balance holds once |omega| T and a T both reach this
    'KMS_MIN_PRODUCT': 5.0
}

HYDROGEN = {
    'MAX_PRINCIPAL_NUMBER': 10 ** 6,
    'REFERENCE_THRESHOLD_SI': 1e25
}

CSV = {
    'FLOAT_FORMAT': '%.11e',
    'UNBOUNDED': 'unbounded',
    'UNDEFINED': 'undefined',
    'COMMENT': '#'
}

EXIT_CODES = {
    'OK': 0,
    'CONFIG_ERROR': 1,
    'NON_CONVERGENCE': 2
}
