"""Python module containing helpful decorators

Note
----

Wraps makes doc string available for decorated functions, this is used
during documentation engine retrieval
"""

from functools import wraps

import numpy as np

from fermiqs.exceptions import DomainError, HermiticityError


def _is_finite(value):
    """ True when a scalar or array-like numeric value has only finite entries """

    if isinstance(value, (bool, str)) or value is None:
        return True
    try:
        return bool(np.all(np.isfinite(np.asarray(value, dtype=complex))))
    except (TypeError, ValueError):
        # non-numeric objects (frames, specs) validate themselves
        return True


def check_finite(function):
    """Checks numeric positional arguments are finite

    Parameters
    ----------
    function : function
        a function to decorate with a finiteness check

    Returns
    -------
    function
        a decorated function
    """

    @wraps(function)
    def _wrapper(*args, **kwargs):
        for index, value in enumerate(args):
            if not _is_finite(value):
                raise DomainError('Non-finite input in argument %s of %s' % (
                    index, function.__name__))
        return function(*args, **kwargs)
    return _wrapper


def check_hermitian(function):
    """Checks the returned operator is hermitian

    Parameters
    ----------
    function : function
        a function returning an OperatorMatrix

    Returns
    -------
    function
        a decorated function
    """

    @wraps(function)
    def _wrapper(*args, **kwargs):
        operator = function(*args, **kwargs)
        if not operator.is_hermitian():
            raise HermiticityError('%s returned a non-hermitian operator (residual %.3e)' % (
                function.__name__, operator.hermiticity_residual()))
        operator.hermitian = True
        return operator
    return _wrapper
