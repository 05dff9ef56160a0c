"""Radii of starlikeness of order beta for f_nu, g_nu and h_nu.

Each radius is the smallest positive root of a Dini-type equation

    f, nu > 0:       r J_nu'(r) - beta nu J_nu(r) = 0
    f, -1 < nu < 0:  r I_nu'(r) - beta nu I_nu(r) = 0   (unique root)
    g, nu > -1:      r J_nu'(r) + (1 - beta - nu) J_nu(r) = 0
    h, nu > -1:      w J_nu'(w) + (2 - 2 beta - nu) J_nu(w) = 0,  r = w**2

For h the equation is posed in w = sqrt(z) because h_nu(z) evaluates
J_nu at sqrt(z); the radius reported is the disk radius in the z-plane of
h, i.e. w**2.  The two coincide at the order nu_0 where the root is 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .family import Family, FamilyDomainError, Kind
from .kernels import Order, _as_order, bessel_j, bessel_j_prime, log_derivative_i
from .zeros import (
    RTOL,
    XTOL,
    dini_function,
    dini_function_imag,
    dini_imaginary_zero,
    dini_smallest_positive_zero,
)

MIN_ABS_NU_F = 1e-6
NU0_BRACKET = (-0.9, 0.0)


class Branch(str, enum.Enum):
    J_EQUATION = "J"
    I_EQUATION = "I"


@dataclass(frozen=True)
class RadiusQuery:
    family: Family
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.beta < 1.0:
            raise FamilyDomainError(f"beta must satisfy 0 <= beta < 1, got {self.beta}")
        fam = self.family
        if fam.kind is Kind.LAMBDA:
            raise FamilyDomainError("radius of starlikeness is defined for f, g, h only")
        if fam.kind is Kind.F and abs(fam.nu) < MIN_ABS_NU_F:
            raise FamilyDomainError("nu must be nonzero for family f")


@dataclass(frozen=True)
class RadiusResult:
    family: str
    nu: float
    beta: float
    radius: float
    equation_residual: float
    bracket: tuple
    branch: Branch
    defining_alpha: float

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "nu": self.nu,
            "beta": self.beta,
            "radius": self.radius,
            "equation_residual": self.equation_residual,
            "bracket": list(self.bracket),
            "branch": self.branch.value,
            "defining_alpha": self.defining_alpha,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RadiusResult":
        return cls(
            family=d["family"],
            nu=float(d["nu"]),
            beta=float(d["beta"]),
            radius=float(d["radius"]),
            equation_residual=float(d["equation_residual"]),
            bracket=tuple(float(b) for b in d["bracket"]),
            branch=Branch(d["branch"]),
            defining_alpha=float(d["defining_alpha"]),
        )


def defining_alpha(kind: Kind, nu: float, beta: float) -> float:
    """alpha in r J_nu'(r) + alpha J_nu(r) = 0 for the given family."""
    kind = Kind(kind)
    if kind is Kind.F:
        return -beta * nu
    if kind is Kind.G:
        return 1.0 - beta - nu
    if kind is Kind.H:
        return 2.0 - 2.0 * beta - nu
    raise FamilyDomainError(f"no starlikeness equation for family {kind.value}")


def _bracket(root: float) -> tuple:
    # brentq guarantees the root within XTOL + RTOL * root of its estimate
    half = XTOL + RTOL * root
    return (root - half, root + half)


def radius_starlike(q: RadiusQuery) -> RadiusResult:
    fam = q.family
    nu, beta = fam.nu, q.beta
    alpha = defining_alpha(fam.kind, nu, beta) + 0.0  # no -0.0
    if fam.kind is Kind.F and nu < 0.0:
        root = dini_imaginary_zero(fam.order, alpha)
        residual = abs(float(dini_function_imag(nu, alpha, root)))
        branch = Branch.I_EQUATION
    else:
        # alpha + nu is nu(1-beta), 1-beta or 2-2beta: positive on every J branch
        root = dini_smallest_positive_zero(fam.order, alpha)
        residual = abs(float(dini_function(nu, alpha, root)))
        branch = Branch.J_EQUATION
    lo, hi = _bracket(root)
    if fam.kind is Kind.H:
        radius, lo, hi = root * root, lo * lo, hi * hi
    else:
        radius = root
    return RadiusResult(
        family=fam.kind.value,
        nu=nu,
        beta=beta,
        radius=radius,
        equation_residual=residual,
        bracket=(lo, hi),
        branch=branch,
        defining_alpha=alpha,
    )


def radius(kind, nu: float, beta: float = 0.0) -> RadiusResult:
    return radius_starlike(RadiusQuery(Family.of(kind, nu), beta))


def h_prime_at_one(nu: float) -> float:
    """J_nu'(1) + (2 - nu) J_nu(1), proportional to h_nu'(1)."""
    return (bessel_j_prime(nu, 1.0).value + (2.0 - nu) * bessel_j(nu, 1.0).value).real


def solve_nu0() -> float:
    """Order nu_0 at which h_nu'(1) = 0; h_nu is starlike in the unit disk iff nu >= nu_0."""
    a, b = NU0_BRACKET
    fa, fb = h_prime_at_one(a), h_prime_at_one(b)
    if not fa * fb < 0.0:
        raise RuntimeError("nu_0 bracket lost its sign change")
    return brentq(h_prime_at_one, a, b, xtol=1e-15, rtol=1e-14)


def q_nu_profile(order, beta: float, r_grid) -> np.ndarray:
    """q_nu(r) = r I_nu'(r) / I_nu(r) - beta nu on a grid of r > 0."""
    nu = _as_order(order).nu
    r = np.asarray(r_grid, dtype=float)
    if np.any(r <= 0.0):
        raise ValueError("q_nu is defined for r > 0")
    return np.array([log_derivative_i(nu, x).real - beta * nu for x in r])


def beta0_radius(kind, nu: float) -> float:
    """beta = 0 radius from the reduced equations, independent of defining_alpha.

    f (nu > 0): J_nu'(r) = 0;  f (nu < 0): I_nu'(r) = 0;
    g: r J_nu' + (1 - nu) J_nu = 0;  h: w J_nu' + (2 - nu) J_nu = 0, r = w^2.
    """
    kind = Kind(kind)
    order = Order(nu)
    if kind is Kind.F:
        if nu < 0:
            return dini_imaginary_zero(order, 0.0)
        return dini_smallest_positive_zero(order, 0.0)
    if kind is Kind.G:
        return dini_smallest_positive_zero(order, 1.0 - nu)
    w = dini_smallest_positive_zero(order, 2.0 - nu)
    return w * w

