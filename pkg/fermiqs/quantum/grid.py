"""Module for wavefunctions and canonical operators on a rest-space grid

The position representation acts on the interior samples of a Dirichlet grid.
With W = diag(w_k dx) the measure matrix and S = W^(1/2), every operator is
built as S^-1 M S from a matrix M that is hermitian in the ordinary sense, so
operators are self-adjoint with respect to the curved inner product up to
rounding.
"""

import numpy as np
from scipy.sparse import diags

from fermiqs.constants import FINITE_DIFFERENCE, TOLERANCES
from fermiqs.exceptions import DomainError, GridMismatchError


class Grid1D(object):
    """Uniform 1-D grid over a rest space with a curved measure

    Attributes
    ----------
    n_points : int
        number of grid points, boundaries included
    x_min : float
        left wall
    x_max : float
        right wall
    spacing : float
        grid spacing
    points : ndarray
        grid coordinates
    measure_weights : ndarray
        sqrt(g_Sigma) sampled at every point
    """

    def __init__(self, n_points, x_min, x_max, **kwargs):
        """Class initialization

        Parameters
        ----------
        n_points : int
            number of points (at least 8)
        x_min : float
            left wall
        x_max : float
            right wall
        **kwargs :
            optional keyword arguments

        Keyword Arguments
        -----------------
        measure : function, list
            sqrt(g_Sigma) as a function of x or as per-point samples
            (default flat)

        Returns
        -------
        None
        """

        self.n_points = int(n_points)
        if self.n_points < FINITE_DIFFERENCE['MIN_POINTS']:
            raise DomainError('Grid needs at least %s points' % FINITE_DIFFERENCE['MIN_POINTS'])
        self.x_min = float(x_min)
        self.x_max = float(x_max)
        if not self.x_max > self.x_min:
            raise DomainError('x_max must exceed x_min')

        self.points = np.linspace(self.x_min, self.x_max, self.n_points)
        self.spacing = (self.x_max - self.x_min) / (self.n_points - 1)

        measure = kwargs.pop('measure', None)
        if measure is None:
            weights = np.ones(self.n_points)
        elif callable(measure):
            weights = np.asarray(measure(self.points), dtype=float) * np.ones(self.n_points)
        else:
            weights = np.asarray(measure, dtype=float)
        if weights.shape != (self.n_points,):
            raise DomainError('measure must provide one weight per grid point')
        if not (np.all(np.isfinite(weights)) and np.all(weights > 0.0)):
            raise DomainError('measure weights must be finite and strictly positive')
        self.measure_weights = weights
        self.measure_weights.setflags(write=False)
        self.points.setflags(write=False)

    def __eq__(self, other):
        return (isinstance(other, Grid1D) and
                self.n_points == other.n_points and
                self.x_min == other.x_min and
                self.x_max == other.x_max and
                np.array_equal(self.measure_weights, other.measure_weights))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n_points, self.x_min, self.x_max))

    def __repr__(self):
        return 'Grid1D(n_points=%s, x_min=%s, x_max=%s)' % (self.n_points, self.x_min, self.x_max)

    @classmethod
    def from_frame(cls, frame, n_points, x_min, x_max, axis=0):
        """Grid whose measure is the induced metric of a frame along one axis

        Parameters
        ----------
        frame : FermiFrameSample
            frame components
        n_points : int
            number of points
        x_min : float
            left wall
        x_max : float
            right wall
        axis : int
            Fermi axis the grid runs along

        Returns
        -------
        Grid1D
            grid with sqrt(h_axis,axis) weights
        """

        from fermiqs.geometry import eval_fermi_metric  # pylint: disable=import-outside-toplevel

        def _measure(points):
            weights = []
            for x in points:
                position = np.zeros(3)
                position[axis] = x
                weights.append(eval_fermi_metric(frame, position).h[axis, axis])
            return np.sqrt(np.array(weights))

        return cls(n_points, x_min, x_max, measure=_measure)

    @property
    def interior(self):
        """ Coordinates of the interior (unknown) points """
        return self.points[1:-1]

    @property
    def interior_weights(self):
        """ Diagonal of the measure matrix W on interior points """
        return self.measure_weights[1:-1] * self.spacing

    @property
    def length(self):
        """ Distance between the walls """
        return self.x_max - self.x_min


class WaveFunction(object):
    """A wavefunction sampled on a grid

    Attributes
    ----------
    samples : ndarray
        complex samples on every grid point, zero on both walls
    grid : Grid1D
        the grid
    """

    def __init__(self, samples, grid):
        samples = np.array(samples, dtype=complex)
        if samples.shape != (grid.n_points,):
            raise DomainError('samples must have one entry per grid point')
        if not np.all(np.isfinite(samples)):
            raise DomainError('samples must be finite')
        if samples[0] != 0 or samples[-1] != 0:
            raise DomainError('wavefunctions must vanish on the walls (Fermi localization)')
        self.samples = samples
        self.grid = grid

    def __repr__(self):
        return 'WaveFunction(%r)' % self.grid

    @classmethod
    def from_function(cls, grid, function):
        """ Sample a function on the grid, forcing zero wall values """

        samples = np.array(function(grid.points), dtype=complex) * np.ones(grid.n_points)
        samples[0] = 0.0
        samples[-1] = 0.0
        return cls(samples, grid)

    @classmethod
    def from_interior(cls, values, grid):
        """ Wavefunction from interior values """

        samples = np.zeros(grid.n_points, dtype=complex)
        samples[1:-1] = values
        return cls(samples, grid)

    @property
    def interior(self):
        """ Interior samples """
        return self.samples[1:-1]

    def norm(self):
        """ Norm under the measure inner product """
        return float(np.sqrt(inner_product(self, self).real))

    def normalized(self):
        """ Copy scaled to unit norm """
        return WaveFunction(self.samples / self.norm(), self.grid)


class OperatorMatrix(object):
    """An operator acting on the interior samples of a grid

    Attributes
    ----------
    entries : ndarray
        complex (n - 2) x (n - 2) matrix in the position representation
    grid : Grid1D
        the grid
    hermitian : bool
        set once the operator passed its hermiticity check
    """

    def __init__(self, entries, grid, **kwargs):
        self.entries = np.array(entries, dtype=complex)
        size = grid.n_points - 2
        if self.entries.shape != (size, size):
            raise DomainError('operator must be %sx%s' % (size, size))
        self.grid = grid
        self.hermitian = kwargs.pop('hermitian', False)

    def __repr__(self):
        return 'OperatorMatrix(%r, hermitian=%s)' % (self.grid, self.hermitian)

    def _check_grid(self, other):
        if self.grid != other.grid:
            raise GridMismatchError('Operands live on different grids')

    def __add__(self, other):
        self._check_grid(other)
        return OperatorMatrix(self.entries + other.entries, self.grid)

    def __sub__(self, other):
        self._check_grid(other)
        return OperatorMatrix(self.entries - other.entries, self.grid)

    def __matmul__(self, other):
        self._check_grid(other)
        return OperatorMatrix(self.entries.dot(other.entries), self.grid)

    def scaled(self, factor):
        """ Operator multiplied by a scalar """
        return OperatorMatrix(factor * self.entries, self.grid)

    def adjoint(self):
        """ Adjoint with respect to the measure inner product, W^-1 M^dagger W """

        weights = self.grid.interior_weights
        return OperatorMatrix(self.entries.conj().T * weights[None, :] / weights[:, None],
                              self.grid)

    def hermiticity_residual(self):
        """ max |M - W^-1 M^dagger W| relative to max(1, max |M|) """

        scale = max(1.0, float(np.max(np.abs(self.entries))))
        return float(np.max(np.abs(self.entries - self.adjoint().entries))) / scale

    def is_hermitian(self):
        """ True when the hermiticity residual is below tolerance """
        return self.hermiticity_residual() < TOLERANCES['HERMITIAN']

    def apply(self, psi):
        """ Apply to a wavefunction on the same grid """

        if psi.grid != self.grid:
            raise GridMismatchError('Wavefunction and operator live on different grids')
        return WaveFunction.from_interior(self.entries.dot(psi.interior), self.grid)

    def symmetric_form(self):
        """ S M S^-1, hermitian in the ordinary sense when M is measure-hermitian """

        root = np.sqrt(self.grid.interior_weights)
        return self.entries * root[:, None] / root[None, :]


class GridOperatorSet(object):
    """Canonical operators on a grid

    Attributes
    ----------
    grid : Grid1D
        the grid
    order : int
        finite difference order
    x : OperatorMatrix
        position operator
    p : OperatorMatrix
        momentum operator -i g^(-1/4) d/dx (g^(1/4) psi)
    p_squared : OperatorMatrix
        square of the momentum, discretized with the matching second difference
    """

    def __init__(self, grid, x, p, p_squared, order):
        self.grid = grid
        self.x = x
        self.p = p
        self.p_squared = p_squared
        self.order = order

    def identity(self):
        """ Identity operator """
        return OperatorMatrix(np.eye(self.grid.n_points - 2), self.grid, hermitian=True)

    def diagonal(self, values):
        """ Multiplication operator by interior values """
        return OperatorMatrix(np.diag(values), self.grid)


def _stencil(order, kind):
    """ Finite difference weights for an order, see constants.FINITE_DIFFERENCE """

    try:
        return FINITE_DIFFERENCE[kind][order]
    except KeyError:
        raise DomainError('Unsupported finite difference order: %s (supported: %s)' % (
            order, sorted(FINITE_DIFFERENCE[kind])))


def first_derivative_matrix(size, spacing, order):
    """Antisymmetric central first difference with zero ghost values

    Parameters
    ----------
    size : int
        number of interior unknowns
    spacing : float
        grid spacing
    order : int
        accuracy order

    Returns
    -------
    ndarray
        size x size matrix
    """

    weights = _stencil(order, 'FIRST_DERIVATIVE')
    offsets = [j for j in range(1, len(weights) + 1)]
    bands = list(weights) + [-w for w in weights]
    matrix = diags(bands, offsets + [-j for j in offsets], shape=(size, size)).toarray()
    return matrix / spacing


def second_derivative_matrix(size, spacing, order):
    """Symmetric central second difference with odd reflection at the walls

    Parameters
    ----------
    size : int
        number of interior unknowns
    spacing : float
        grid spacing
    order : int
        accuracy order

    Returns
    -------
    ndarray
        size x size matrix
    """

    weights = _stencil(order, 'SECOND_DERIVATIVE')
    half = len(weights) - 1
    offsets = list(range(-half, half + 1))
    matrix = diags([weights[abs(o)] for o in offsets], offsets, shape=(size, size)).toarray()

    # ghost value at grid index -(g) is -psi(g)
    for row in range(min(half, size)):
        for offset in range(row + 2, half + 1):
            mirror = offset - row - 2
            matrix[row, mirror] -= weights[offset]
            matrix[size - 1 - row, size - 1 - mirror] -= weights[offset]
    return matrix / spacing ** 2


def build_grid_operators(grid, **kwargs):
    """Build position and momentum operators on a grid

    Parameters
    ----------
    grid : Grid1D
        the grid, its measure weights must be strictly positive
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    order : int
        finite difference order: 2, 4, 6 or 8 (default constants value)

    Returns
    -------
    GridOperatorSet
        x is diagonal with the grid coordinates, p acts as
        psi -> -i g^(-1/4) d(g^(1/4) psi)/dx; both are self-adjoint with
        respect to the measure inner product on wall-vanishing vectors
    """

    order = kwargs.pop('order', FINITE_DIFFERENCE['DFL_ORDER'])
    size = grid.n_points - 2
    root = np.sqrt(grid.interior_weights)

    def _conjugate(matrix):
        # S^-1 M S
        return matrix * root[None, :] / root[:, None]

    derivative = first_derivative_matrix(size, grid.spacing, order)
    laplacian = second_derivative_matrix(size, grid.spacing, order)

    x = OperatorMatrix(np.diag(grid.interior), grid, hermitian=True)
    p = OperatorMatrix(_conjugate(-1j * derivative), grid, hermitian=True)
    p_squared = OperatorMatrix(_conjugate(-laplacian), grid, hermitian=True)
    return GridOperatorSet(grid, x, p, p_squared, order)


def inner_product(psi, phi):
    """Inner product with the invariant measure of the rest space

    Parameters
    ----------
    psi : WaveFunction
        bra
    phi : WaveFunction
        ket

    Returns
    -------
    complex
        sum_k conj(psi_k) phi_k w_k dx

    Raises
    ------
    GridMismatchError
        if the two wavefunctions live on different grids
    """

    if psi.grid != phi.grid:
        raise GridMismatchError('Wavefunctions live on different grids')
    grid = psi.grid
    return complex(np.sum(psi.samples.conj() * phi.samples * grid.measure_weights) * grid.spacing)


def expectation(psi, operator):
    """ <psi|O|psi> / <psi|psi> """

    return inner_product(psi, operator.apply(psi)) / inner_product(psi, psi)


def position_spread(psi):
    """ sqrt(<x^2>) of a grid state """

    weights = np.abs(psi.samples) ** 2 * psi.grid.measure_weights
    return float(np.sqrt(np.sum(weights * psi.grid.points ** 2) / np.sum(weights)))
