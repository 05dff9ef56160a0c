"""Radius of starlikeness of order beta for normalized Bessel functions."""

from .family import Family, Kind, star_direct, star_mittag_leffler
from .kernels import Order, bessel_i, bessel_j, bessel_j_prime, log_gamma
from .radius import RadiusQuery, RadiusResult, radius, radius_starlike, solve_nu0
from .zeros import ZeroTable, bessel_zeros, dini_imaginary_zero, dini_smallest_positive_zero

__all__ = [
    "Family",
    "Kind",
    "Order",
    "RadiusQuery",
    "RadiusResult",
    "ZeroTable",
    "bessel_i",
    "bessel_j",
    "bessel_j_prime",
    "bessel_zeros",
    "dini_imaginary_zero",
    "dini_smallest_positive_zero",
    "log_gamma",
    "radius",
    "radius_starlike",
    "solve_nu0",
    "star_direct",
    "star_mittag_leffler",
]
