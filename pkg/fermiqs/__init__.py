"""Non-relativistic quantum systems in Fermi normal coordinates

Sub-packages:

- geometry: Fermi frame metric, redshift, volume factors and Fermi bounds
- quantum: grid operators, corrected Hamiltonians, spectra and validity checks
- detector: Unruh-DeWitt responses and the relativistic noise criterion
- cli: config driven runs writing CSV tables

    Example - Basic::

        from fermiqs.geometry import TrajectoryModel, fermi_bound
        fermi_bound(TrajectoryModel.uniform_acceleration(2.0), [0.0])  # 0.5
"""

from fermiqs.constants import VERSION

__version__ = VERSION
