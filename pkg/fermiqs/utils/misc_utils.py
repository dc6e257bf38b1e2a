"""Python module containing helper utility functions """

import hashlib
import json
import math

from fermiqs.constants import CSV
from fermiqs.exceptions import InputRequiredError
from . import file_utils


def resolve_config(config, config_file, **kwargs):
    """Resolve config options: config|config_file

    Parameters
    ----------
    config : str, dict
        configuration (resolved)
    config_file : str
        configuration file (to resolve)
    required : bool
        when false, input is not required and none object may be returned

    Returns
    -------
    str
        the configuration document text
    """

    if not config and not config_file:
        if kwargs.pop('required', True):
            raise InputRequiredError('One of config|config_file must be provided')
        return None

    if config_file:
        config = file_utils.load_file(config_file, file_type='raw')
    if isinstance(config, dict):
        config = json.dumps(config)
    return config


def canonical_json(document):
    """Serialize a mapping deterministically

    Parameters
    ----------
    document : dict
        the mapping to serialize

    Returns
    -------
    str
        compact JSON with sorted keys
    """

    return json.dumps(document, sort_keys=True, separators=(',', ':'))


def sha256_hex(text):
    """ Hex SHA-256 digest of a text """

    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def format_value(value):
    """Format a single CSV cell

    Parameters
    ----------
    value : float, int, bool, str, None
        the value to format

    Returns
    -------
    str
        12 significant digits in lowercase scientific notation for floats,
        'unbounded' for +inf and 'undefined' for None
    """

    if value is None:
        return CSV['UNDEFINED']
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    value = float(value)
    if math.isinf(value) and value > 0:
        return CSV['UNBOUNDED']
    if not math.isfinite(value):
        return CSV['UNDEFINED']
    return CSV['FLOAT_FORMAT'] % value
