"""Python module for logging

    Example - Basic::

        from fermiqs.logger import Logger
        logger = Logger(__name__).get_logger()
        logger.trace('per-interval quadrature details')

    Example - Log level set using environment variable::

        # export FERMIQS_LOG_LEVEL='DEBUG'

    Example - Log level set for the whole package (the --log-level option)::

        from fermiqs.logger import set_level
        set_level('INFO')
"""

import os
import logging

from fermiqs.constants import DFL_LOG_LEVEL, ENV_VARS

PACKAGE = __name__.split('.')[0]
FORMAT = '%(asctime)s - %(name)s - %(levelname)s: %(message)s'

TRACE = 5
logging.addLevelName(TRACE, 'TRACE')
logging.TRACE = TRACE

# level chosen with set_level, wins over the environment variable
_OVERRIDE = {'level': None}


class TraceLogger(logging.getLoggerClass()):
    """ Logger with a trace() method below DEBUG """

    def trace(self, msg, *args, **kwargs):
        """ Log at the TRACE level """
        if self.isEnabledFor(TRACE):
            self._log(TRACE, msg, args, **kwargs)


logging.setLoggerClass(TraceLogger)


def _package_handler():
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(FORMAT))
    return handler


_HANDLER = _package_handler()


def _default_level():
    """ set_level override, then environment variable, then package default """

    if _OVERRIDE['level'] is not None:
        return _OVERRIDE['level']
    return os.environ.get(ENV_VARS['LOG_LEVEL_ENV_VAR']) or DFL_LOG_LEVEL


class Logger():
    """Thin wrapper around a named logger of the logging module

    Attributes
    ----------
    name : str
        the logger name
    level : str
        ERROR, WARNING, INFO, DEBUG or TRACE

    Methods
    -------
    get_logger()
        Refer to method documentation
    """

    def __init__(self, name, **kwargs):
        """Class initialization

        Parameters
        ----------
        name : str
            the logger name
        **kwargs :
            optional keyword arguments

        Keyword Arguments
        -----------------
        level : str
            the logging level (default set_level value, FERMIQS_LOG_LEVEL or
            WARNING, in that order)

        Returns
        -------
        None
        """

        self.name = name
        self.level = kwargs.pop('level', None) or _default_level()

    def get_logger(self):
        """Get the configured logger

        Returns
        -------
        TraceLogger
            the named logger; the package stream handler is attached at most once
        """

        logger = logging.getLogger(self.name)
        logger.setLevel(self.level)
        if _HANDLER not in logger.handlers:
            logger.addHandler(_HANDLER)
        return logger


def set_level(level):
    """Set the level of every logger created by this package

    Parameters
    ----------
    level : str
        the logging level; None drops a previous override

    Returns
    -------
    None
    """

    _OVERRIDE['level'] = level
    resolved = _default_level()
    for name in list(logging.root.manager.loggerDict):
        if name.split('.')[0] == PACKAGE:
            logging.getLogger(name).setLevel(resolved)
