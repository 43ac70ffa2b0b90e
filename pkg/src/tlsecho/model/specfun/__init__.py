"""
Special and elementary functions used by the spectral-diffusion kernels.

All functions accept scalars or numpy arrays, return floats for scalar input and are
pure: the same argument always gives a bit-identical result.
"""
from .bessel import SERIES_SWITCH, bessel_i0, bessel_i0e, bessel_i1, bessel_i1e
from .hyperbolic import coth, sech2
from .struve import DIFFERENCE_SWITCH, bessel_struve_difference, scaled_kernel_combination, struve_l0, struve_l1

__all__ = [
    "SERIES_SWITCH",
    "DIFFERENCE_SWITCH",
    "bessel_i0",
    "bessel_i1",
    "bessel_i0e",
    "bessel_i1e",
    "struve_l0",
    "struve_l1",
    "bessel_struve_difference",
    "scaled_kernel_combination",
    "sech2",
    "coth",
]
