"""Module for assembling and diagonalizing Fermi-frame Hamiltonians"""

from enum import Enum

import numpy as np
from scipy import linalg

from fermiqs.decorators import check_hermitian
from fermiqs.exceptions import DomainError, GridMismatchError, InputRequiredError
from fermiqs.geometry import eval_fermi_metric, redshift_exact
from fermiqs.logger import Logger
from .grid import OperatorMatrix, WaveFunction

logger = Logger(__name__).get_logger()  # pylint: disable=invalid-name


class HamiltonianMode(Enum):
    """ How the redshift enters the generator of tau translations """
    BARE = 'bare'
    SYMMETRIZED = 'symmetrized'
    LEADING = 'leading'
    FIRST_ORDER = 'first_order'


def _potential_values(potential, grid):
    """ Interior potential samples from a spec, function or array """

    if hasattr(potential, 'potential'):
        values = potential.potential(grid.interior)
    elif callable(potential):
        values = potential(grid.interior)
    else:
        values = np.asarray(potential, dtype=float)
        if values.shape == (grid.n_points,):
            values = values[1:-1]
    values = np.asarray(values, dtype=float) * np.ones(grid.n_points - 2)
    if not np.all(np.isfinite(values)):
        raise DomainError('potential must be finite on the grid')
    return values


def _redshift_profile(frame, points, axis):
    """ Exact redshift sampled along one Fermi axis """

    profile = np.empty(len(points))
    for index, x in enumerate(points):
        position = np.zeros(3)
        position[axis] = x
        profile[index] = redshift_exact(eval_fermi_metric(frame, position))
    return profile


@check_hermitian
def assemble_hamiltonian(potential, frame, mode, operators, **kwargs):
    """Assemble the Hamiltonian of a particle at rest in a Fermi frame

    Parameters
    ----------
    potential : OscillatorSpec, function, list
        the non-relativistic potential V(x); an OscillatorSpec also supplies
        the mass
    frame : FermiFrameSample
        frame components (acceleration and tidal matrix)
    mode : HamiltonianMode, str
        bare, symmetrized, leading or first_order
    operators : GridOperatorSet
        canonical operators of the grid
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    m : float
        rest mass (required unless potential is an OscillatorSpec)
    axis : int
        Fermi axis the grid runs along (default 0)

    Returns
    -------
    OperatorMatrix
        bare: H = m + p^2 / 2m + V
        symmetrized: (Gamma H + H Gamma) / 2 with the exact redshift
        leading: H + m a x + (m / 2) R_00 x^2
        first_order: H + (delta H + H delta) / 2, delta = a x + R_00 x^2 / 2

    Raises
    ------
    InputRequiredError
        if no mass can be determined
    HermiticityError
        if the assembled operator is not self-adjoint under the measure
    """

    mode = HamiltonianMode(mode)
    axis = kwargs.pop('axis', 0)
    mass = kwargs.pop('m', getattr(potential, 'm', None))
    if mass is None:
        raise InputRequiredError('A mass is required to assemble the Hamiltonian')
    if not mass > 0:
        raise DomainError('mass must be positive')

    grid = operators.grid
    points = grid.interior
    bare = (operators.identity().scaled(mass) +
            operators.p_squared.scaled(1.0 / (2.0 * mass)) +
            operators.diagonal(_potential_values(potential, grid)))

    logger.debug('Assembling %s Hamiltonian on %r', mode.value, grid)
    if mode == HamiltonianMode.BARE:
        return bare

    a_axis = frame.a[axis]
    r_axis = frame.r0i0j[axis, axis]

    if mode == HamiltonianMode.LEADING:
        return bare + operators.diagonal(mass * a_axis * points + 0.5 * mass * r_axis * points ** 2)

    if mode == HamiltonianMode.FIRST_ORDER:
        delta = a_axis * points + 0.5 * r_axis * points ** 2
        entries = bare.entries + 0.5 * (delta[:, None] * bare.entries +
                                        bare.entries * delta[None, :])
        return OperatorMatrix(entries, grid)

    gamma = _redshift_profile(frame, points, axis)
    entries = 0.5 * (gamma[:, None] * bare.entries + bare.entries * gamma[None, :])
    return OperatorMatrix(entries, grid)


def diagonalize(hamiltonian, n_levels):
    """Lowest eigenpairs of a measure-hermitian operator

    Parameters
    ----------
    hamiltonian : OperatorMatrix
        a hermitian operator
    n_levels : int
        number of eigenpairs to return

    Returns
    -------
    list
        (energy, WaveFunction) pairs in ascending energy, each wavefunction
        normalized under the measure inner product

    Raises
    ------
    DomainError
        if n_levels is not in 1..dim
    GridMismatchError
        if the operator has no grid
    """

    grid = getattr(hamiltonian, 'grid', None)
    if grid is None:
        raise GridMismatchError('Operator is not attached to a grid')
    size = grid.n_points - 2
    if not 1 <= n_levels <= size:
        raise DomainError('n_levels must be between 1 and %s' % size)

    symmetric = hamiltonian.symmetric_form()
    symmetric = 0.5 * (symmetric + symmetric.conj().T)
    energies, vectors = linalg.eigh(symmetric, subset_by_index=[0, n_levels - 1])

    root = np.sqrt(grid.interior_weights)
    pairs = []
    for index in range(n_levels):
        state = WaveFunction.from_interior(vectors[:, index] / root, grid)
        pairs.append((float(energies[index]), state))
    return pairs
