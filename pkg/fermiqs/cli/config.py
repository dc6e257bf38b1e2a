"""Module for run configurations

A run configuration is a flat JSON object; see the user guide for the grammar.
"""

import itertools
import json
import math

from fermiqs.constants import FINITE_DIFFERENCE, GRID, QUADRATURE, VALIDITY
from fermiqs.exceptions import ConfigError
from fermiqs.logger import Logger
from fermiqs.utils import misc_utils

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name

REQUIRED = '<required>'

COMMANDS = ('bound', 'spectrum', 'respond', 'validate', 'sweep')
TARGETS = COMMANDS[:-1]

CHOICES = {
    'command': COMMANDS,
    'target': TARGETS,
    'trajectory': ('inertial', 'uniform_acceleration', 'rindler', 'constant_curvature', 'tabulated'),
    'mode': ('leading', 'symmetrized', 'first_order', 'bare')
}

KEY_TYPES = {
    'command': 'choice',
    'output_path': 'str',
    'trajectory': 'choice',
    'a': 'vector',
    'alpha': 'float',
    'frames_path': 'str',
    'tau_min': 'float',
    'tau_max': 'float',
    'n_tau': 'int',
    'm': 'float',
    'omega': 'float',
    'n_levels': 'int',
    'mode': 'choice',
    'n_points': 'int',
    'x_min': 'float',
    'x_max': 'float',
    'fd_order': 'int',
    'gap': 'float',
    'coupling': 'float',
    'switching_width': 'float',
    'switching_center': 'float',
    'epsilon_factor': 'float',
    'window_factor': 'float',
    'n_from': 'int',
    'n_to': 'int',
    'noise_threshold': 'float',
    'mean_n': 'float',
    'h_nr_expectation': 'float',
    'energy_threshold': 'float',
    'hydrogen_n': 'int',
    'a_si': 'float',
    'lambda_r_si': 'float',
    'target': 'choice',
    'workers': 'int'
}

COMMON_DEFAULTS = {
    'command': REQUIRED,
    'output_path': None,
    'trajectory': None,
    'a': 0.0,
    'alpha': 0.0,
    'frames_path': None
}

COMMAND_DEFAULTS = {
    'bound': {
        'tau_min': 0.0,
        'tau_max': 1.0,
        'n_tau': 5
    },
    'spectrum': {
        'm': 1.0,
        'omega': 1.0,
        'n_levels': 5,
        'mode': 'leading',
        'n_points': GRID['DFL_POINTS'],
        'x_min': GRID['DFL_X_MIN'],
        'x_max': GRID['DFL_X_MAX'],
        'fd_order': FINITE_DIFFERENCE['DFL_ORDER']
    },
    'respond': {
        'gap': 1.0,
        'coupling': 0.01,
        'switching_width': 20.0,
        'switching_center': 0.0,
        'epsilon_factor': QUADRATURE['EPSILON_FACTOR'],
        'window_factor': QUADRATURE['WINDOW_FACTOR'],
        'm': None,
        'omega': None,
        'n_from': 0,
        'n_to': 1,
        'noise_threshold': VALIDITY['NOISE_RATIO_THRESHOLD']
    },
    'validate': {
        'm': 1.0,
        'omega': 1.0,
        'mean_n': 0.0,
        'h_nr_expectation': None,
        'energy_threshold': VALIDITY['ENERGY_RATIO_THRESHOLD'],
        'hydrogen_n': None,
        'a_si': None,
        'lambda_r_si': 0.0
    },
    'sweep': {
        'target': REQUIRED,
        'workers': 1
    }
}

SWEEP_KEYS = ('target', 'workers')


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_value(key, value):
    """Validate and normalize a single value

    Parameters
    ----------
    key : str
        config key
    value : object
        decoded JSON value

    Returns
    -------
    object
        normalized value: ints given for float keys become floats

    Raises
    ------
    ConfigError
        on a type mismatch, naming the key
    """

    kind = KEY_TYPES[key]
    if kind in ('float', 'vector') and _is_number(value):
        if not math.isfinite(value):
            raise ConfigError('%s: value must be finite' % key)
        return float(value)
    if kind == 'vector' and isinstance(value, list):
        if len(value) != 3 or not all(_is_number(item) for item in value):
            raise ConfigError('%s: expected a number or a list of 3 numbers' % key)
        if not all(math.isfinite(item) for item in value):
            raise ConfigError('%s: value must be finite' % key)
        return [float(item) for item in value]
    if kind == 'int' and _is_number(value) and isinstance(value, int):
        return value
    if kind == 'str' and isinstance(value, str):
        return value
    if kind == 'choice' and isinstance(value, str):
        if value not in CHOICES[key]:
            raise ConfigError('%s: %r is not one of %s' % (key, value, ', '.join(CHOICES[key])))
        return value
    raise ConfigError('%s: expected %s, got %r' % (key, kind, value))


def _allowed_defaults(command, target=None):
    """ Defaults of every key accepted by a command """

    defaults = dict(COMMON_DEFAULTS)
    if command == 'sweep':
        defaults.update(COMMAND_DEFAULTS[target] if target else {})
    defaults.update(COMMAND_DEFAULTS[command])
    return defaults


def _default_trajectory(explicit):
    if explicit.get('alpha'):
        return 'constant_curvature'
    if 'a' in explicit:
        return 'uniform_acceleration'
    return 'inertial'


class RunConfig(object):
    """A validated run configuration

    Attributes
    ----------
    command : str
        bound, spectrum, respond, validate or sweep
    explicit : dict
        the keys given in the document, normalized
    parameters : dict
        every key of the command with defaults applied
    """

    def __init__(self, command, explicit, parameters):
        self.command = command
        self.explicit = explicit
        self.parameters = parameters

    def __repr__(self):
        return 'RunConfig(%s)' % self.canonical()

    def __getitem__(self, key):
        return self.parameters[key]

    def get(self, key, default=None):
        """ Resolved value of a key """
        return self.parameters.get(key, default)

    @property
    def output_path(self):
        """ Output file, if set in the document """
        return self.parameters.get('output_path')

    def canonical(self):
        """ Canonical form of the given document """
        return misc_utils.canonical_json(self.explicit)

    def resolved(self):
        """ Canonical form with every default applied """
        return misc_utils.canonical_json(self.parameters)

    def config_hash(self):
        """ SHA-256 of the fully resolved config """
        return misc_utils.sha256_hex(self.resolved())

    def sweep_axes(self):
        """Swept keys and their values

        Returns
        -------
        list
            (key, values) pairs in sorted key order
        """

        if self.command != 'sweep':
            return []
        return [(key, value) for key, value in sorted(self.explicit.items())
                if key not in SWEEP_KEYS and isinstance(value, list)]

    def expand(self):
        """Expand a sweep into target configurations

        Returns
        -------
        list
            (assignment, RunConfig) pairs in Cartesian product order, the last
            swept key varying fastest
        """

        axes = self.sweep_axes()
        keys = [key for key, _ in axes]
        base = {key: value for key, value in self.explicit.items()
                if key not in SWEEP_KEYS and key not in keys}
        base['command'] = self.parameters['target']

        expanded = []
        for values in itertools.product(*[values for _, values in axes]):
            assignment = dict(zip(keys, values))
            document = dict(base)
            document.update(assignment)
            expanded.append((assignment, parse_config(document)))
        return expanded


def parse_config(text, **kwargs):
    """Parse and validate a configuration document

    Parameters
    ----------
    text : str, dict
        JSON text or an already decoded mapping
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    command : str
        command given on the command line; must agree with the document

    Returns
    -------
    RunConfig
        validated config with defaults applied

    Raises
    ------
    ConfigError
        on malformed JSON, unknown keys, type mismatches or missing keys
    """

    command = kwargs.pop('command', None)

    if isinstance(text, dict):
        document = dict(text)
    else:
        try:
            document = json.loads(text)
        except ValueError as err:
            raise ConfigError('Config is not valid JSON: %s' % err)
        if not isinstance(document, dict):
            raise ConfigError('Config must be a JSON object')

    for key in document:
        if key not in KEY_TYPES:
            raise ConfigError('%s: unknown key' % key)

    if command is not None:
        if document.get('command', command) != command:
            raise ConfigError('command: document says %r but %r was requested' % (
                document['command'], command))
        document['command'] = command
    if 'command' not in document:
        raise ConfigError('command: missing required key')
    command = _check_value('command', document['command'])
    target = _check_value('target', document['target']) if 'target' in document else None
    if target is None and command == 'sweep':
        raise ConfigError('target: missing required key')
    defaults = _allowed_defaults(command, target)

    explicit = {}
    for key, value in document.items():
        if key not in defaults:
            raise ConfigError('%s: not valid for command %s' % (key, command))
        if command == 'sweep' and isinstance(value, list) and key not in SWEEP_KEYS:
            if KEY_TYPES[key] not in ('float', 'int', 'vector') or not value:
                raise ConfigError('%s: only numeric keys can be swept' % key)
            explicit[key] = [_check_value(key, item) for item in value]
        else:
            explicit[key] = _check_value(key, value)

    parameters = dict(defaults)
    parameters.update(explicit)
    for key, value in parameters.items():
        if value == REQUIRED:
            raise ConfigError('%s: missing required key' % key)
    trajectory = parameters['trajectory'] or _default_trajectory(explicit)
    parameters['trajectory'] = 'uniform_acceleration' if trajectory == 'rindler' else trajectory
    if parameters['trajectory'] == 'tabulated' and not parameters['frames_path']:
        raise ConfigError('frames_path: required for tabulated trajectories')

    applied = sorted(set(parameters) - set(explicit))
    logger.debug('Applied defaults for %s', ', '.join(applied))
    return RunConfig(command, explicit, parameters)


def load_config(config=None, config_file=None, **kwargs):
    """Load a configuration from a document or a file

    Parameters
    ----------
    config : str, dict
        the document
    config_file : str
        path to a JSON file
    **kwargs :
        passed to parse_config

    Returns
    -------
    RunConfig
        the validated config
    """

    return parse_config(misc_utils.resolve_config(config, config_file), **kwargs)


def serialize(config):
    """ Canonical JSON of the keys given in a config """

    return config.canonical()


def describe_defaults():
    """ Human readable defaults per command, for --help """

    lines = ['config keys (defaults):',
             '  common: ' + ', '.join('%s=%s' % item for item in sorted(COMMON_DEFAULTS.items()))]
    for command in COMMANDS:
        lines.append('  %s: %s' % (command, ', '.join(
            '%s=%s' % item for item in sorted(COMMAND_DEFAULTS[command].items()))))
    return '\n'.join(lines)
