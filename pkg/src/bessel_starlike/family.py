"""The normalized Bessel functions f_nu, g_nu, h_nu, lambda_nu.

    f_nu(z) = [2^nu Gamma(nu+1) J_nu(z)]^(1/nu)
    g_nu(z) = 2^nu Gamma(nu+1) z^(1-nu) J_nu(z)
    h_nu(z) = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)
    lambda_nu(z) = h_nu(z) / z

and their star functions S_F(z) = z F'(z) / F(z), computed two ways:
directly from the kernels, and from partial fractions over the zeros of J_nu.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .kernels import (
    Order,
    _as_order,
    bessel_j_normalized,
    log_derivative_j,
)
from .zeros import ZeroTable


class Kind(str, enum.Enum):
    F = "f"
    G = "g"
    H = "h"
    LAMBDA = "lambda"


class Route(str, enum.Enum):
    DIRECT = "direct"
    MITTAG_LEFFLER = "mittag-leffler"


class FamilyDomainError(ValueError):
    pass


class BranchError(ValueError):
    """J_nu(z) sits on the cut of the principal logarithm."""


class PoleError(ValueError):
    """The star function has a pole (J_nu vanishes) at the argument."""


@dataclass(frozen=True)
class Family:
    kind: Kind
    order: Order

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "order", _as_order(self.order))
        if self.kind is Kind.F and self.order.nu == 0.0:
            raise FamilyDomainError("nu must be nonzero for family f")

    @property
    def nu(self) -> float:
        return self.order.nu

    @classmethod
    def of(cls, kind, nu: float) -> "Family":
        return cls(Kind(kind), Order(float(nu)))


@dataclass(frozen=True)
class StarValue:
    value: complex
    route: Route
    tail_bound: float = 0.0


def _bessel_arg(family: Family, z: complex) -> complex:
    # h and lambda see J_nu at the principal square root
    if family.kind in (Kind.H, Kind.LAMBDA):
        return cmath.sqrt(z)
    return z


def eval(family: Family, z: complex) -> complex:
    """F(z) for F in {f, g, h, lambda}.

    g, h and lambda reduce exactly to z * S(z) (resp. S(sqrt z)) with S the
    entire part of J_nu, because the principal powers z^(1-nu) and z^nu
    share one logarithm.  f keeps the principal logarithm of
    2^nu Gamma(nu+1) J_nu(z), so it is analytic only off the cut.
    """
    z = complex(z)
    nu = family.nu
    if family.kind is Kind.G:
        return z * bessel_j_normalized(nu, z).value
    if family.kind is Kind.H:
        return z * bessel_j_normalized(nu, cmath.sqrt(z)).value
    if family.kind is Kind.LAMBDA:
        return bessel_j_normalized(nu, cmath.sqrt(z)).value
    # 2^nu Gamma(nu+1) J_nu(z) = z^nu S(z)
    if z == 0:
        if nu > 0:
            return 0j
        raise FamilyDomainError("f_nu is singular at 0 for nu < 0")
    inner = cmath.exp(nu * cmath.log(z)) * bessel_j_normalized(nu, z).value
    if inner == 0 or (inner.real <= 0.0 and abs(inner.imag) <= 1e-15 * abs(inner)):
        raise BranchError(f"2^nu Gamma(nu+1) J_nu(z) = {inner} lies on the branch cut")
    return cmath.exp(cmath.log(inner) / nu)


def _check_pole(nu: float, w: complex) -> None:
    s = bessel_j_normalized(nu, w)
    if abs(s.value) <= 64.0 * s.error_bound:
        raise PoleError(f"J_{nu} vanishes at {w}; the star function has a pole")


def star_direct(family: Family, z: complex) -> StarValue:
    """z F'(z)/F(z) through the log-derivative of J_nu."""
    z = complex(z)
    nu = family.nu
    w = _bessel_arg(family, z)
    _check_pole(nu, w)
    ld = log_derivative_j(nu, w)
    if family.kind is Kind.F:
        val = ld / nu
    elif family.kind is Kind.G:
        val = 1.0 - nu + ld
    elif family.kind is Kind.H:
        val = 1.0 - nu / 2.0 + ld / 2.0
    else:
        # lambda = h / z
        val = -nu / 2.0 + ld / 2.0
    return StarValue(complex(val), Route.DIRECT, 0.0)


def zero_lower_bound(nu: float, n: int) -> float:
    """A rigorous lower bound for j_{nu,n}.

    j_{nu,n} increases with nu, j_{1/2,n} = n pi, j_{-1/2,n} = (n - 1/2) pi
    and j_{nu,n} > j_{1,n-1} >= (n-1) pi as nu -> -1.
    """
    if nu >= 0.5:
        return n * math.pi
    if nu >= -0.5:
        return (n - 0.5) * math.pi
    return (n - 1.0) * math.pi


def partial_fraction_tail(nu: float, r2: float, count: int) -> float:
    """Bound on sum_{n > count} 2 r2 / (j_{nu,n}^2 - r2).

    Sum of a decreasing function: first term plus the integral from
    count+1, with j_{nu,n} replaced by its lower envelope (n - a) pi.
    """
    if r2 == 0.0:
        return 0.0
    r = math.sqrt(r2)
    c_next = zero_lower_bound(nu, count + 1)
    if c_next <= r:
        raise ValueError("truncation too short: |z| exceeds the zero envelope")
    first = 2.0 * r2 / (c_next * c_next - r2)
    integral = (r / math.pi) * math.log((c_next + r) / (c_next - r))
    return first + integral


def star_mittag_leffler(family: Family, z: complex, table: ZeroTable) -> StarValue:
    """Star function from the partial-fraction expansion of z J_nu'/J_nu.

        S_f = 1 - (1/nu) sum 2 z^2 / (j^2 - z^2)
        S_g = 1 - sum 2 z^2 / (j^2 - z^2)
        S_h = 1 - sum z / (j^2 - z)

    truncated after ``table.count`` zeros, with a certified tail bound.
    """
    z = complex(z)
    nu = family.nu
    if table.order.nu != nu:
        raise ValueError("zero table order does not match the family")
    j1 = table.first
    if family.kind in (Kind.H, Kind.LAMBDA):
        if not abs(z) < j1 * j1:
            raise ValueError(f"|z| must be below j_{{nu,1}}^2 = {j1 * j1:.6g}")
        u = z
    else:
        if not abs(z) < j1:
            raise ValueError(f"|z| must be below j_{{nu,1}} = {j1:.6g}")
        u = z * z
    total = 0j
    abs_total = 0.0
    for j in table.zeros:
        t = u / (j * j - u)
        total += t
        abs_total += abs(t)
    tail = partial_fraction_tail(nu, abs(u), table.count)
    rounding = 8.0 * 2.2e-16 * (1.0 + 2.0 * abs_total) * table.count
    if family.kind is Kind.F:
        val = 1.0 - 2.0 * total / nu
        bound = tail / abs(nu)
    elif family.kind is Kind.G:
        val = 1.0 - 2.0 * total
        bound = tail
    elif family.kind is Kind.H:
        val = 1.0 - total
        bound = tail / 2.0
    else:
        val = -total
        bound = tail / 2.0
    return StarValue(complex(val), Route.MITTAG_LEFFLER, bound + rounding)


def lambda_derivative_check(order, z: complex, step: float = 1e-4) -> float:
    """|lambda_nu'(z) + lambda_{nu+1}(z) / (4(nu+1))| with a central difference."""
    nu = _as_order(order).nu
    z = complex(z)
    lam = Family(Kind.LAMBDA, Order(nu))
    lam1 = Family(Kind.LAMBDA, Order(nu + 1.0))
    deriv = (eval(lam, z + step) - eval(lam, z - step)) / (2.0 * step)
    return abs(deriv + eval(lam1, z) / (4.0 * (nu + 1.0)))

