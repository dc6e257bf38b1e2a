"""Utility module for test framework """

import numpy as np

from fermiqs.geometry import FermiFrameSample


def random_frame(rng, **kwargs):
    """Random frame with the symmetries of a Riemann tensor

    Parameters
    ----------
    rng : numpy.random.Generator
        random source
    **kwargs :
        optional keyword arguments

    Keyword Arguments
    -----------------
    scale : float
        size of the curvature components (default 0.1)

    Returns
    -------
    FermiFrameSample
        the frame
    """

    scale = kwargs.pop('scale', 0.1)
    tidal = rng.normal(size=(3, 3)) * scale
    # spatial Riemann from a symmetric form: R_ikjl = S_ij S_kl - S_il S_kj
    form = rng.normal(size=(3, 3)) * np.sqrt(scale)
    form = form + form.T
    rikjl = np.einsum('ij,kl->ikjl', form, form) - np.einsum('il,kj->ikjl', form, form)
    r0jik = rng.normal(size=(3, 3, 3)) * scale
    r0jik = r0jik - r0jik.transpose(0, 2, 1)
    return FermiFrameSample(0.0,
                            a=rng.normal(size=3) * scale,
                            r0i0j=tidal + tidal.T,
                            r0jik=r0jik,
                            rikjl=rikjl)


def log_log_slope(xs, ys):
    """ Least squares slope of log(y) against log(x) """

    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])
