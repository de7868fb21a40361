"""Generalized analytic Feynman integrals on Wiener space.

Thin wrapper over the C++ core: cylinder functionals over orthogonal
L2[0,T] sets, closed-form generalized Feynman integrals and
Fourier-Feynman transforms, Brownian path ensembles, and the
integration-by-parts identity suite.
"""

from gfi._core import (
    CylinderFunctional,
    GaussPolyFn,
    GfiError,
    L2Fn,
    PathEnsemble,
    WeightFn,
    analytic_wiener_integral,
    feynman_integral,
    feynman_linear_weighted,
    first_variation,
    gaussian_reduction,
    gfft_kernel,
    inner_product,
    is_orthogonal_set,
    is_supp_inf,
    norm,
    pwz_integral,
    sample_brownian,
    verify,
)

__all__ = [
    "CylinderFunctional",
    "GaussPolyFn",
    "GfiError",
    "L2Fn",
    "PathEnsemble",
    "WeightFn",
    "analytic_wiener_integral",
    "feynman_integral",
    "feynman_linear_weighted",
    "first_variation",
    "gaussian_reduction",
    "gfft_kernel",
    "inner_product",
    "is_orthogonal_set",
    "is_supp_inf",
    "norm",
    "pwz_integral",
    "sample_brownian",
    "verify",
]
