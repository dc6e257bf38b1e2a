"""Module for Fermi normal coordinate geometry

    Example - Basic::

        from fermiqs.geometry import FermiFrameSample, TrajectoryModel
        from fermiqs.geometry import eval_fermi_metric, redshift_exact, fermi_bound

        frame = FermiFrameSample.uniform_acceleration(1.0)
        g = eval_fermi_metric(frame, [0.1, 0.0, 0.0])
        redshift_exact(g)  # 1.1

        fermi_bound(TrajectoryModel.uniform_acceleration(2.0), [0.0])  # 0.5

    Example - Constant curvature::

        frame = FermiFrameSample.constant_curvature(0.04)
        lambda_r(frame.r0i0j)  # 0.04
"""

from .frames import FermiFrameSample, TrajectoryKind, TrajectoryModel
from .metric import (MetricComponents, eval_fermi_metric, redshift_exact,
                     redshift_series, volume_factors)
from .bounds import (BoundSample, degeneracy_radius, ell_estimate, fermi_bound,
                     fermi_bound_profile, lambda_r)

__all__ = [
    'FermiFrameSample',
    'TrajectoryKind',
    'TrajectoryModel',
    'MetricComponents',
    'eval_fermi_metric',
    'redshift_exact',
    'redshift_series',
    'volume_factors',
    'BoundSample',
    'degeneracy_radius',
    'ell_estimate',
    'fermi_bound',
    'fermi_bound_profile',
    'lambda_r'
]
