"""Module for quantum mechanics on the Fermi rest spaces

    Example - Oscillator spectrum::

        from fermiqs.geometry import FermiFrameSample
        from fermiqs.quantum import Grid1D, build_grid_operators, OscillatorSpec
        from fermiqs.quantum import assemble_hamiltonian, diagonalize

        grid = Grid1D(2001, -10.0, 10.0)
        operators = build_grid_operators(grid)
        frame = FermiFrameSample.constant_curvature(0.19, a=[0.09, 0.0, 0.0])
        hamiltonian = assemble_hamiltonian(OscillatorSpec(1.0, 1.0), frame, 'leading', operators)
        diagonalize(hamiltonian, 3)

    Example - Closed form::

        from fermiqs.quantum import oscillator_corrected_spectrum
        oscillator_corrected_spectrum(OscillatorSpec(1.0, 1.0), 0.19, 0.09).ground_shift  # -0.005
"""

from .grid import (Grid1D, GridOperatorSet, OperatorMatrix, WaveFunction,
                   build_grid_operators, expectation, inner_product, position_spread)
from .hamiltonian import HamiltonianMode, assemble_hamiltonian, diagonalize
from .oscillator import (CorrectedSpectrum, OscillatorSpec, minimum_trapping_frequency,
                         oscillator_corrected_spectrum, oscillator_localization)
from .validity import (HydrogenValidity, ValidityReport, hydrogen_validity,
                       unruh_temperature, validity_report)

__all__ = [
    'Grid1D',
    'GridOperatorSet',
    'OperatorMatrix',
    'WaveFunction',
    'build_grid_operators',
    'expectation',
    'inner_product',
    'position_spread',
    'HamiltonianMode',
    'assemble_hamiltonian',
    'diagonalize',
    'CorrectedSpectrum',
    'OscillatorSpec',
    'minimum_trapping_frequency',
    'oscillator_corrected_spectrum',
    'oscillator_localization',
    'HydrogenValidity',
    'ValidityReport',
    'hydrogen_validity',
    'unruh_temperature',
    'validity_report'
]
