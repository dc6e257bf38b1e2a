""" Test command dispatch and CSV tables """

import json
import math

from fermiqs.cli import CsvTable, parse_config, run
from fermiqs.cli.runner import build_trajectory
from fermiqs.constants import VERSION
from fermiqs.exceptions import InputRequiredError
from fermiqs.geometry import TrajectoryKind

from ...global_test_imports import pytest
from ...shared.constants import CONFIGS, OSCILLATOR


def _rows_by_first_column(table):
    return {row[0]: row for row in table.rows}


class TestCsvTable(object):
    """Test Class: result tables """

    @staticmethod
    def test_text_layout():
        """Test: provenance, header and formatted cells

        Assertions
        ----------
        - comments should come first, prefixed with '# '
        - floats should use 12 significant digits
        - inf, None and booleans should use their CSV spellings
        """

        table = CsvTable(['x', 'y', 'ok'], [[0.5, float('inf'), True], [2, None, False]],
                         provenance=['fermiqs test'])

        assert table.to_text().splitlines() == [
            '# fermiqs test',
            'x,y,ok',
            '5.00000000000e-01,unbounded,true',
            '2,undefined,false'
        ]

    @staticmethod
    def test_row_width_checked():
        """Test: ragged rows

        Assertions
        ----------
        - ValueError should be raised
        """

        pytest.raises(ValueError, CsvTable, ['x', 'y'], [[1.0]])


class TestBuildTrajectory(object):
    """Test Class: trajectories from configs """

    @staticmethod
    def test_tabulated_from_file(config_file):
        """Test: frames file

        Assertions
        ----------
        - samples should be loaded in tau order
        """

        frames = [{'tau': 1.0, 'a': [2.0, 0.0, 0.0]},
                  {'tau': 0.0, 'a': [1.0, 0.0, 0.0], 'R0i0j': [[0.0] * 3] * 3}]
        path = config_file(frames, name='frames.json')

        trajectory = build_trajectory(parse_config({'command': 'bound',
                                                    'trajectory': 'tabulated',
                                                    'frames_path': path}))

        assert trajectory.kind == TrajectoryKind.TABULATED
        assert trajectory.tau_range == (0.0, 1.0)
        assert trajectory.frame_at(1.0).a[0] == 2.0


class TestRun(object):
    """Test Class: running each command """

    @staticmethod
    def test_provenance():
        """Test: comment lines

        Assertions
        ----------
        - version, command, hash and canonical config should be recorded
        """

        config = parse_config(CONFIGS['BOUND'])
        table = run(config)

        assert table.provenance == [
            'fermiqs %s' % VERSION,
            'command: bound',
            'config_sha256: %s' % config.config_hash(),
            'config: %s' % config.canonical()
        ]

    @staticmethod
    def test_bound():
        """Test: Rindler bound with a = 2

        Assertions
        ----------
        - one row per tau sample plus an infimum row
        - the infimum should be 0.5
        """

        table = run(parse_config(CONFIGS['BOUND']))

        assert table.header == ['tau', 'a', 'lambda_r', 'ell']
        assert len(table.rows) == 6
        assert table.rows[-1][0] == 'infimum'
        assert table.rows[-1][3] == pytest.approx(0.5, abs=1e-12)

    @staticmethod
    def test_bound_inertial_unbounded():
        """Test: inertial bound

        Assertions
        ----------
        - the infimum should be written as unbounded
        """

        table = run(parse_config({'command': 'bound', 'n_tau': 2}))

        assert table.formatted_rows()[-1][-1] == 'unbounded'

    @staticmethod
    def test_spectrum():
        """Test: leading mode oscillator with alpha = 0.19, a = 0.09

        Assertions
        ----------
        - numeric and closed form energies should agree to 1e-5
        - the ground state should sit at 1 - 0.005 + 0.45
        """

        table = run(parse_config(CONFIGS['SPECTRUM']))

        assert table.header == ['k', 'e_numeric', 'e_analytic', 'abs_delta', 'e_nr_numeric']
        assert table.column('k') == [0, 1, 2, 3, 4]
        assert all(delta < 1e-5 for delta in table.column('abs_delta'))
        assert table.rows[0][2] == pytest.approx(
            1.0 + OSCILLATOR['GROUND_SHIFT'] + 0.5 * OSCILLATOR['OMEGA_PRIME'])

    @staticmethod
    def test_spectrum_untrapped():
        """Test: omega^2 <= alpha

        Assertions
        ----------
        - analytic energies and deltas should be undefined
        """

        table = run(parse_config({'command': 'spectrum', 'alpha': 2.0, 'n_levels': 1,
                                  'mode': 'bare', 'n_points': 201}))
        expected = run(parse_config({'command': 'spectrum', 'alpha': 2.0, 'n_levels': 1,
                                     'n_points': 201}))

        assert table.rows[0][2] == 1.5
        assert expected.formatted_rows()[0][2:4] == ['undefined', 'undefined']

    @staticmethod
    def test_respond():
        """Test: Rindler detector at a = 2 pi

        Assertions
        ----------
        - excitation row should show the KMS ratio within 5 percent
        - field probability should match the thermal reference within 1 percent
        - without an internal oscillator the noise vanishes
        """

        table = run(parse_config(CONFIGS['RESPOND']))
        rows = _rows_by_first_column(table)
        excitation = dict(zip(table.header, rows[1.0]))

        assert table.header == ['omega', 'p_field', 'p_rel', 'ratio', 'error', 'noise_ratio',
                                'kms_ratio', 'p_reference', 'probe_valid']
        assert excitation['kms_ratio'] == pytest.approx(math.exp(-1.0))
        assert excitation['ratio'] == pytest.approx(math.exp(-1.0), rel=0.05)
        assert excitation['p_field'] == pytest.approx(excitation['p_reference'], rel=1e-2)
        assert excitation['p_rel'] == 0.0
        assert excitation['probe_valid'] is True

    @staticmethod
    def test_respond_with_internal_oscillator():
        """Test: inertial probe with an internal oscillator

        Assertions
        ----------
        - inertial rows should have no KMS value
        - acceleration is zero so the noise vanishes
        """

        table = run(parse_config({'command': 'respond', 'gap': 1.0, 'coupling': 1.0,
                                  'switching_width': 1.0, 'm': 1.0, 'omega': 1.0}))

        assert table.column('kms_ratio') == [None, None]
        assert table.column('p_rel') == [0.0, 0.0]

    @staticmethod
    def test_validate():
        """Test: unit oscillator at a = 0.5 with hydrogen at 1e20 m/s^2

        Assertions
        ----------
        - localization 1 against bound 2 should pass
        - the energy ratio 0.5 should fail the default threshold
        - hydrogen and Unruh rows should be present
        """

        table = run(parse_config(CONFIGS['VALIDATE']))
        rows = _rows_by_first_column(table)

        assert table.header == ['criterion', 'value', 'bound', 'pass']
        assert rows['localization'][1:] == [1.0, pytest.approx(2.0), True]
        assert rows['energy_ratio'][3] is False
        assert rows['minimum_trapping_frequency'][2] == pytest.approx(0.25)
        assert rows['hydrogen'][3] is True
        assert rows['unruh_temperature'][1] == pytest.approx(0.4055, rel=1e-3)

    @staticmethod
    def test_sweep():
        """Test: bound over two accelerations

        Assertions
        ----------
        - swept values should prefix each target row
        - each point should contribute all n_tau samples plus its infimum row
        - infimum rows should follow 1/a
        """

        config = parse_config({'command': 'sweep', 'target': 'bound', 'a': [1.0, 4.0],
                               'n_tau': 2})

        table = run(config)
        infima = [row for row in table.rows if row[1] == 'infimum']

        assert table.header == ['sweep_a', 'tau', 'a', 'lambda_r', 'ell']
        assert len(table.rows) == 6
        assert [(row[0], row[-1]) for row in infima] == [(1.0, pytest.approx(1.0)),
                                                         (4.0, pytest.approx(0.25))]

    @staticmethod
    def test_sweep_vectors_and_workers():
        """Test: vector sweep run in worker processes

        Assertions
        ----------
        - vectors should be written as canonical JSON
        - rows should not depend on the number of workers
        """

        document = {'command': 'sweep', 'target': 'bound', 'a': [[1, 0, 0], [0, 2, 0]],
                    'n_tau': 2}

        serial = run(parse_config(document))
        parallel = run(parse_config(dict(document, workers=2)))

        assert serial.column('sweep_a')[0] == json.dumps([1.0, 0.0, 0.0], separators=(',', ':'))
        assert serial.rows == parallel.rows

    @staticmethod
    def test_domain_error_names_parameters():
        """Test: failing target

        Assertions
        ----------
        - the original error class should be raised with the parameters appended
        """

        with pytest.raises(InputRequiredError) as error:
            run(parse_config({'command': 'bound', 'n_tau': 0}))
        assert '[parameters: ' in str(error.value)

    @staticmethod
    def test_deterministic():
        """Test: repeated runs

        Assertions
        ----------
        - CSV text should be identical
        """

        config = parse_config(CONFIGS['SPECTRUM'])

        assert run(config).to_text() == run(config).to_text()
