"""Module for dispatching run configurations onto the library"""

import io
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from scipy import constants as si

from fermiqs.constants import VERSION
from fermiqs.detector import (GaussianSwitching, UDWDetector, WightmanKind, WightmanSpec,
                              inertial_reference_response, regulator, response_report,
                              thermal_reference_response)
from fermiqs.exceptions import FermiqsError
from fermiqs.geometry import (FermiFrameSample, TrajectoryModel, ell_estimate,
                              fermi_bound_profile, lambda_r)
from fermiqs.logger import Logger
from fermiqs.quantum import (Grid1D, HamiltonianMode, OscillatorSpec, assemble_hamiltonian,
                             build_grid_operators, diagonalize, hydrogen_validity,
                             minimum_trapping_frequency, oscillator_corrected_spectrum,
                             oscillator_localization, unruh_temperature, validity_report)
from fermiqs.utils import file_utils, misc_utils
from .config import parse_config

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name


class CsvTable(object):
    """A result table with provenance comments

    Attributes
    ----------
    header : list
        column names
    rows : list
        rows of raw values (floats, ints, strings, booleans or None)
    provenance : list
        comment lines written before the header
    """

    def __init__(self, header, rows, **kwargs):
        self.header = list(header)
        self.rows = [list(row) for row in rows]
        self.provenance = kwargs.pop('provenance', [])
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError('CSV rows must match the header width')

    def formatted_rows(self):
        """ Rows with every cell formatted """
        return [[misc_utils.format_value(value) for value in row] for row in self.rows]

    def column(self, name):
        """ Raw values of one column """
        index = self.header.index(name)
        return [row[index] for row in self.rows]

    def write(self, file_object):
        """ Write to a text stream """
        file_utils.write_csv(file_object, self.header, self.formatted_rows(),
                             comments=self.provenance)

    def to_text(self):
        """ The CSV document as a string """
        stream = io.StringIO()
        self.write(stream)
        return stream.getvalue()


def _load_frames(path):
    """Load tabulated frame samples

    Parameters
    ----------
    path : str
        JSON file holding a list of objects with tau, a, R0i0j and optional
        R0jik, Rikjl

    Returns
    -------
    list
        FermiFrameSample objects
    """

    samples = []
    for item in file_utils.load_file(path):
        samples.append(FermiFrameSample(item.get('tau', 0.0),
                                        a=item.get('a'),
                                        r0i0j=item.get('R0i0j'),
                                        r0jik=item.get('R0jik'),
                                        rikjl=item.get('Rikjl')))
    return samples


def build_trajectory(config):
    """ TrajectoryModel described by a config """

    kind = config['trajectory']
    if kind == 'inertial':
        return TrajectoryModel.inertial()
    if kind == 'uniform_acceleration':
        return TrajectoryModel.uniform_acceleration(config['a'])
    if kind == 'constant_curvature':
        a = config['a']
        return TrajectoryModel.constant_curvature_static(
            config['alpha'], a=[a, 0.0, 0.0] if np.ndim(a) == 0 else a)
    return TrajectoryModel.tabulated(_load_frames(config['frames_path']))


def _reference_frame(trajectory):
    """ Frame at tau = 0, or at the nearest end of a finite range """

    lower, upper = trajectory.tau_range
    return trajectory.frame_at(min(max(0.0, lower), upper))


def _bound(config):
    trajectory = build_trajectory(config)
    taus = np.linspace(config['tau_min'], config['tau_max'], config['n_tau'])
    profile = fermi_bound_profile(trajectory, taus)

    rows = [[sample.tau, sample.a, sample.lambda_r, sample.ell] for sample in profile]
    best = min(profile, key=lambda sample: sample.ell)
    rows.append(['infimum', best.a, best.lambda_r, best.ell])
    return ['tau', 'a', 'lambda_r', 'ell'], rows


def _spectrum(config):
    trajectory = build_trajectory(config)
    frame = _reference_frame(trajectory)
    oscillator = OscillatorSpec(config['m'], config['omega'])

    grid = Grid1D.from_frame(frame, config['n_points'], config['x_min'], config['x_max'])
    operators = build_grid_operators(grid, order=config['fd_order'])
    mode = HamiltonianMode(config['mode'])
    hamiltonian = assemble_hamiltonian(oscillator, frame, mode, operators)
    levels = diagonalize(hamiltonian, config['n_levels'])

    if mode == HamiltonianMode.BARE:
        analytic = oscillator.energy
    else:
        analytic = oscillator_corrected_spectrum(oscillator, -frame.r0i0j[0, 0], frame.a[0]).energy

    rows = []
    for k, (energy, _) in enumerate(levels):
        expected = analytic(k)
        delta = abs(energy - expected) if math.isfinite(expected) else None
        rows.append([k, energy, expected, delta, energy - oscillator.m])
    return ['k', 'e_numeric', 'e_analytic', 'abs_delta', 'e_nr_numeric'], rows


def _respond(config):
    trajectory = build_trajectory(config)
    frame = _reference_frame(trajectory)
    switching = GaussianSwitching(config['switching_width'], config['switching_center'])
    internal = None
    if config['m'] is not None and config['omega'] is not None:
        internal = OscillatorSpec(config['m'], config['omega'])
    det = UDWDetector(config['gap'], config['coupling'], switching, internal=internal)

    a = frame.acceleration_norm()
    spec = WightmanSpec.from_trajectory(
        trajectory, regulator(switching, a, epsilon_factor=config['epsilon_factor']))
    transition = (config['n_from'], config['n_to'])

    reports = {}
    for omega in (config['gap'], -config['gap']):
        reports[omega] = response_report(det.with_gap(omega), spec, frame, transition,
                                         threshold=config['noise_threshold'],
                                         window_factor=config['window_factor'])

    rows = []
    for omega in (config['gap'], -config['gap']):
        report = reports[omega]
        partner = reports[-omega].p_field
        if spec.kind == WightmanKind.RINDLER_MINKOWSKI:
            kms = math.exp(-2.0 * math.pi * omega / a)
            reference = thermal_reference_response(det, a, omega)
        else:
            kms = None
            reference = inertial_reference_response(det, omega)
        rows.append([omega,
                     report.p_field,
                     report.p_rel,
                     report.p_field / partner if partner else None,
                     report.quadrature_error_estimate,
                     report.noise_ratio,
                     kms,
                     reference,
                     report.probe_valid])
    header = ['omega', 'p_field', 'p_rel', 'ratio', 'error', 'noise_ratio', 'kms_ratio',
              'p_reference', 'probe_valid']
    return header, rows


def _validate(config):
    trajectory = build_trajectory(config)
    frame = _reference_frame(trajectory)
    oscillator = OscillatorSpec(config['m'], config['omega'])
    mean_n = config['mean_n']
    h_nr = config['h_nr_expectation']
    if h_nr is None:
        h_nr = oscillator.omega * (mean_n + 0.5 * oscillator.dimension)

    report = validity_report(oscillator_localization(oscillator, mean_n), frame, oscillator.m, h_nr,
                             threshold=config['energy_threshold'])
    lambda_value = lambda_r(frame.r0i0j)
    trapping = minimum_trapping_frequency(frame.acceleration_norm(), lambda_value,
                                          oscillator.m, mean_n)
    rows = [
        ['localization', report.localization, report.bound, report.localized_ok],
        ['energy_ratio', report.energy_ratio, config['energy_threshold'], report.nonrelativistic_ok],
        ['minimum_trapping_frequency', oscillator.omega, trapping, oscillator.omega > trapping]
    ]

    if config['hydrogen_n'] is not None:
        a_si = config['a_si'] or 0.0
        hydrogen = hydrogen_validity(config['hydrogen_n'], a_si, config['lambda_r_si'])
        rows.append(['hydrogen', a_si + si.c ** 2 * math.sqrt(config['lambda_r_si']),
                     hydrogen.threshold, hydrogen.valid])
    if config['a_si'] is not None:
        rows.append(['unruh_temperature', unruh_temperature(config['a_si']), None, None])
    logger.debug('Fermi bound for validation: %s', ell_estimate(frame.acceleration_norm(),
                                                                 lambda_value))
    return ['criterion', 'value', 'bound', 'pass'], rows


BUILDERS = {
    'bound': _bound,
    'spectrum': _spectrum,
    'respond': _respond,
    'validate': _validate
}


def _run_document(document):
    """Run a single target config given as canonical JSON

    Module level so sweep rows can be sent to worker processes.
    """

    config = parse_config(document)
    try:
        return BUILDERS[config.command](config)
    except FermiqsError as err:
        raise err.__class__('%s [parameters: %s]' % (err, document))


def _sweep(config):
    expanded = config.expand()
    documents = [child.canonical() for _, child in expanded]
    workers = config['workers']
    logger.info('Sweeping %s points of %s with %s worker(s)', len(documents),
                config['target'], workers)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_run_document, documents))
    else:
        results = [_run_document(document) for document in documents]

    keys = [key for key, _ in config.sweep_axes()]
    header = ['sweep_' + key for key in keys] + (results[0][0] if results else [])
    rows = []
    for (assignment, _), (_, child_rows) in zip(expanded, results):
        prefix = [misc_utils.canonical_json(assignment[key]) if isinstance(assignment[key], list)
                  else assignment[key] for key in keys]
        rows.extend(prefix + row for row in child_rows)
    return header, rows


def run(config):
    """Run a configuration

    Parameters
    ----------
    config : RunConfig
        a validated config

    Returns
    -------
    CsvTable
        result rows with provenance comments (version, command, resolved
        config hash and canonical config)

    Raises
    ------
    FermiqsError
        domain errors are re-raised with the failing parameters appended
    """

    logger.info('Running %s', config.command)
    if config.command == 'sweep':
        header, rows = _sweep(config)
    else:
        header, rows = _run_document(config.canonical())

    provenance = [
        'fermiqs %s' % VERSION,
        'command: %s' % config.command,
        'config_sha256: %s' % config.config_hash(),
        'config: %s' % config.canonical()
    ]
    return CsvTable(header, rows, provenance=provenance)
