""" Test run configuration parsing """

import json

from fermiqs.cli import load_config, parse_config, serialize
from fermiqs.cli.config import describe_defaults
from fermiqs.exceptions import ConfigError, InputRequiredError

from ...global_test_imports import pytest
from ...shared.constants import CONFIGS


class TestParseConfig(object):
    """Test Class: config grammar """

    @staticmethod
    def test_defaults_applied():
        """Test: bound config with only a

        Assertions
        ----------
        - command and explicit values should be kept
        - command defaults should be applied
        - trajectory should default to uniform acceleration
        """

        config = parse_config(json.dumps(CONFIGS['BOUND']))

        assert config.command == 'bound'
        assert config['a'] == 2.0
        assert config['n_tau'] == 5
        assert config['trajectory'] == 'uniform_acceleration'
        assert config.output_path is None

    @staticmethod
    @pytest.mark.parametrize('document, trajectory', [
        ({'command': 'bound'}, 'inertial'),
        ({'command': 'bound', 'alpha': 0.1}, 'constant_curvature'),
        ({'command': 'bound', 'alpha': 0.1, 'a': 1}, 'constant_curvature'),
        ({'command': 'bound', 'trajectory': 'rindler', 'a': 1}, 'uniform_acceleration')
    ])
    def test_trajectory_resolution(document, trajectory):
        """Test: default and aliased trajectories

        Assertions
        ----------
        - trajectory should follow alpha, then a, then inertial
        - rindler should be normalized to uniform_acceleration
        """

        assert parse_config(document)['trajectory'] == trajectory

    @staticmethod
    def test_numbers_normalized():
        """Test: integers for float keys

        Assertions
        ----------
        - ints should become floats, vectors should become float lists
        """

        config = parse_config({'command': 'respond', 'gap': 2, 'a': [1, 0, 0]})

        assert isinstance(config['gap'], float)
        assert config['a'] == [1.0, 0.0, 0.0]

    @staticmethod
    @pytest.mark.parametrize('document, key', [
        ({'command': 'bound', 'omega_typo': 1.0}, 'omega_typo'),
        ({'command': 'bound', 'gap': 1.0}, 'gap'),
        ({'command': 'spectrum', 'n_levels': 2.5}, 'n_levels'),
        ({'command': 'spectrum', 'n_levels': True}, 'n_levels'),
        ({'command': 'bound', 'a': [1.0, 2.0]}, 'a'),
        ({'command': 'bound', 'a': 'fast'}, 'a'),
        ({'command': 'spectrum', 'mode': 'exact'}, 'mode'),
        ({'command': 'launch'}, 'command'),
        ({'a': 1.0}, 'command'),
        ({'command': 'sweep', 'a': [1.0]}, 'target'),
        ({'command': 'sweep', 'target': 'spectrum', 'mode': ['bare', 'leading']}, 'mode'),
        ({'command': 'sweep', 'target': 'bound', 'a': []}, 'a'),
        ({'command': 'bound', 'trajectory': 'tabulated'}, 'frames_path')
    ])
    def test_invalid_documents(document, key):
        """Test: invalid documents

        Assertions
        ----------
        - ConfigError should be raised naming the offending key
        """

        with pytest.raises(ConfigError) as error:
            parse_config(document)
        assert str(error.value).startswith(key)

    @staticmethod
    @pytest.mark.parametrize('text', ['{"command": ', '[1, 2]', '{"command": "bound", "a": NaN}'])
    def test_malformed_json(text):
        """Test: malformed or non-object JSON

        Assertions
        ----------
        - ConfigError should be raised
        """

        pytest.raises(ConfigError, parse_config, text)

    @staticmethod
    def test_command_must_agree():
        """Test: command line and document disagree

        Assertions
        ----------
        - ConfigError should be raised
        - a document without a command should take the requested one
        """

        pytest.raises(ConfigError, parse_config, CONFIGS['BOUND'], command='spectrum')
        assert parse_config({'a': 1.0}, command='bound').command == 'bound'


class TestRunConfig(object):
    """Test Class: serialization, hashing and sweeps """

    @staticmethod
    @pytest.mark.parametrize('name', sorted(CONFIGS))
    def test_serialize_round_trip(name):
        """Test: parse, serialize, parse

        Assertions
        ----------
        - canonical forms and hashes should be equal
        """

        config = parse_config(CONFIGS[name])
        again = parse_config(serialize(config))

        assert again.canonical() == config.canonical()
        assert again.config_hash() == config.config_hash()

    @staticmethod
    def test_canonical_is_sorted_and_compact():
        """Test: canonical JSON

        Assertions
        ----------
        - keys should be sorted without whitespace
        """

        config = parse_config({'n_tau': 3, 'command': 'bound', 'a': 1})

        assert serialize(config) == '{"a":1.0,"command":"bound","n_tau":3}'

    @staticmethod
    def test_hash_tracks_resolved_values():
        """Test: config hash

        Assertions
        ----------
        - changing a value should change the hash
        - spelling out a default should not
        """

        base = parse_config(CONFIGS['BOUND'])
        changed = parse_config(dict(CONFIGS['BOUND'], a=3.0))
        spelled = parse_config(dict(CONFIGS['BOUND'], n_tau=5))

        assert changed.config_hash() != base.config_hash()
        assert spelled.config_hash() == base.config_hash()
        assert len(base.config_hash()) == 64

    @staticmethod
    def test_sweep_expansion_order():
        """Test: Cartesian product of two swept keys

        Assertions
        ----------
        - keys should be sorted and the last should vary fastest
        - children should carry the target command and fixed keys
        """

        config = parse_config({'command': 'sweep', 'target': 'bound', 'tau_max': [1.0, 3.0],
                               'a': [1.0, 2.0], 'n_tau': 3})

        expanded = config.expand()

        assert [key for key, _ in config.sweep_axes()] == ['a', 'tau_max']
        assert [(item['a'], item['tau_max']) for item, _ in expanded] == [
            (1.0, 1.0), (1.0, 3.0), (2.0, 1.0), (2.0, 3.0)]
        assert all(child.command == 'bound' and child['n_tau'] == 3 for _, child in expanded)

    @staticmethod
    def test_vector_sweep():
        """Test: a list of acceleration vectors

        Assertions
        ----------
        - each vector should be one sweep value
        """

        config = parse_config({'command': 'sweep', 'target': 'bound',
                               'a': [[1, 0, 0], [0, 2, 0]]})

        assert [child['a'] for _, child in config.expand()] == [[1.0, 0.0, 0.0],
                                                                 [0.0, 2.0, 0.0]]

    @staticmethod
    def test_non_sweep_has_no_axes():
        """Test: plain command

        Assertions
        ----------
        - sweep axes should be empty, vectors are values
        """

        assert parse_config({'command': 'bound', 'a': [1, 0, 0]}).sweep_axes() == []


class TestLoadConfig(object):
    """Test Class: config sources """

    @staticmethod
    def test_from_file(bound_file):
        """Test: config file on disk

        Assertions
        ----------
        - loaded config should match the parsed document
        """

        assert load_config(config_file=bound_file).canonical() == parse_config(
            CONFIGS['BOUND']).canonical()

    @staticmethod
    def test_from_dict():
        """Test: in-memory mapping

        Assertions
        ----------
        - mapping should be accepted
        """

        assert load_config(config=CONFIGS['SPECTRUM'])['n_levels'] == 5

    @staticmethod
    def test_nothing_given():
        """Test: no config source

        Assertions
        ----------
        - InputRequiredError should be raised
        """

        pytest.raises(InputRequiredError, load_config)

    @staticmethod
    def test_describe_defaults():
        """Test: defaults listing for --help

        Assertions
        ----------
        - every command should be listed
        """

        text = describe_defaults()

        for command in ('bound', 'spectrum', 'respond', 'validate', 'sweep'):
            assert '  %s: ' % command in text
