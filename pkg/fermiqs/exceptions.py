""" Exceptions used throughout this package """


class FermiqsError(Exception):
    """ Base class for errors raised by this package """


class DomainError(FermiqsError, ValueError):
    """ Error raised if an input is non-finite or physically invalid """


class InputRequiredError(FermiqsError):
    """ Error raised if input is required """


class SymmetryError(DomainError):
    """ Error raised if a tensor input lacks a required symmetry """


class DegenerateMetricError(DomainError):
    """ Error raised if the induced metric is singular or not positive definite """


class GridMismatchError(FermiqsError):
    """ Error raised if wavefunctions or operators live on different grids """


class HermiticityError(FermiqsError):
    """ Error raised if an operator fails its hermiticity check """


class NonStationaryFrameError(FermiqsError):
    """ Error raised if a time-varying frame is supplied where a constant one is required """


class QuadratureError(FermiqsError):
    """ Error raised if a single quadrature attempt fails """


class NonConvergenceError(FermiqsError):
    """ Error raised if quadrature fails to converge after all retries """


class ConfigError(FermiqsError):
    """ Error raised if a run configuration is invalid """


class FileLoadError(FermiqsError):
    """ Error raised if file load error occurs """
