"""Power-series kernels for J_nu, I_nu and their derivatives.

Every evaluator returns a :class:`SeriesEval` carrying a certified bound on
the truncation error.  The bound comes from the ratio of consecutive terms,
which is decreasing in the summation index for nu > -1, so the neglected
tail is dominated by a geometric series.

The series are summed as ``prefactor * sum_n c_n w**n`` with
``w = -(z/2)**2`` for J and ``w = (z/2)**2`` for I.  The "normalized" sums
(``sum_n c_n w**n`` with ``c_0 = 1``) are entire in z and are exposed
separately because the normalized Bessel families are built from them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

MAX_RADIUS = 60.0
# Above this modulus the alternating J series loses more than ~1e-14 to
# cancellation in double precision (the loss grows like eps * I_nu(|z|)).
SERIES_ACCURATE_LIMIT = 5.0
MAX_TERMS = 400
_EPS = float(np.finfo(float).eps)

# Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_SHIFT = 16.0
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


class KernelDomainError(ValueError):
    """Argument or order outside the domain of the function."""


class KernelRangeError(ValueError):
    """Argument modulus beyond what the truncated series can certify."""


@dataclass(frozen=True)
class Order:
    nu: float

    def __post_init__(self):
        if not math.isfinite(self.nu) or self.nu <= -1.0:
            raise KernelDomainError(f"order nu must satisfy nu > -1, got {self.nu}")


@dataclass(frozen=True)
class SeriesEval:
    value: complex
    tail_bound: float
    terms_used: int
    # eps * sum |terms|: an estimate of accumulated rounding, not a proof
    rounding_bound: float = 0.0

    @property
    def error_bound(self) -> float:
        return self.tail_bound + self.rounding_bound


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0.

    Shifts the argument above 16 with the recurrence and applies Stirling's
    series with eight correction terms.
    """
    if not x > 0.0:
        raise KernelDomainError(f"log_gamma requires x > 0, got {x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    prod = 1.0
    while x < _STIRLING_SHIFT:
        prod *= x
        x += 1.0
    shift = math.log(prod)
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for c in reversed(_STIRLING):
        corr = corr * inv2 + c
    corr *= inv
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + corr - shift


def _as_order(order) -> Order:
    return order if isinstance(order, Order) else Order(float(order))


def _check_radius(z: complex) -> None:
    if abs(z) > MAX_RADIUS:
        raise KernelRangeError(
            f"|z| = {abs(z):.6g} exceeds the supported series radius {MAX_RADIUS}"
        )


def _sum_series(nu: float, w: complex, weight=None, floor: float = 1.0):
    """Sum ``sum_n c_n * weight(n) * w**n`` with ``c_0 = 1``.

    ``c_{n+1} / c_n = 1 / ((n+1)(n+nu+1))``.  ``weight`` is an optional
    linear factor such as ``n + nu/2`` for the differentiated series.
    Returns (sum, tail_bound, terms_used, abs_sum).  Summation stops once the
    tail bound drops below ``1e-17 * max(floor, |sum|)``.
    """
    aw = abs(w)
    term = 1.0 + 0j
    total = 0j
    abs_total = 0.0
    n = 0
    while True:
        wt = 1.0 if weight is None else weight(n)
        t = term * wt
        total += t
        abs_total += abs(t)
        # next raw term
        term = term * w / ((n + 1) * (n + nu + 1))
        n += 1
        # ratio bound for every term from index n onward
        rho = aw / ((n + 1) * (n + nu + 1))
        if weight is not None:
            w_n, w_n1 = weight(n), weight(n + 1)
            if w_n != 0.0:
                rho *= abs(w_n1 / w_n)
            else:
                rho = math.inf
        next_abs = abs(term) * (1.0 if weight is None else abs(weight(n)))
        if rho < 1.0:
            tail = next_abs / (1.0 - rho)
            if tail <= 1e-17 * max(floor, abs(total)) or next_abs == 0.0:
                return total, tail, n, abs_total
        if n >= MAX_TERMS:
            raise KernelRangeError("series did not converge within the term budget")


def _prefactor(nu: float, z: complex, shift: float = 0.0) -> complex:
    """(z/2)**(nu - shift) / Gamma(nu + 1) on the principal branch."""
    p = nu - shift
    if z == 0:
        if p == 0.0:
            return 1.0 / math.exp(log_gamma(nu + 1.0))
        if p > 0.0:
            return 0j
        raise KernelDomainError(f"(z/2)**{p} is singular at z = 0")
    return cmath.exp(p * cmath.log(z / 2.0) - log_gamma(nu + 1.0))


def bessel_j_normalized(order, z: complex) -> SeriesEval:
    """Gamma(nu+1) (2/z)**nu J_nu(z): the entire part of J_nu, equal to 1 at 0."""
    nu = _as_order(order).nu
    z = complex(z)
    _check_radius(z)
    w = -(z / 2.0) ** 2
    s, tail, n, abs_sum = _sum_series(nu, w)
    return SeriesEval(s, tail, n, 4.0 * _EPS * abs_sum)


def bessel_i_normalized(order, z: complex) -> SeriesEval:
    """Gamma(nu+1) (2/z)**nu I_nu(z)."""
    nu = _as_order(order).nu
    z = complex(z)
    _check_radius(z)
    w = (z / 2.0) ** 2
    s, tail, n, abs_sum = _sum_series(nu, w)
    return SeriesEval(s, tail, n, 4.0 * _EPS * abs_sum)


def _scaled(nu: float, z: complex, sign: float, shift: float, weight) -> SeriesEval:
    z = complex(z)
    _check_radius(z)
    pref = _prefactor(nu, z, shift)
    apref = abs(pref)
    w = sign * (z / 2.0) ** 2
    # floor chosen so that |pref| * tail <= 1e-17 * max(1, |value|)
    floor = 1.0 / apref if apref > 0 else 1.0
    s, tail, n, abs_sum = _sum_series(nu, w, weight, floor=floor)
    return SeriesEval(pref * s, apref * tail, n, 4.0 * _EPS * apref * abs_sum * (1 + n))


def bessel_j(order, z: complex) -> SeriesEval:
    """J_nu(z) from its power series; principal branch of z**nu."""
    nu = _as_order(order).nu
    return _scaled(nu, z, -1.0, 0.0, None)


def bessel_i(order, z: complex) -> SeriesEval:
    """I_nu(z) from its (all positive for real z) power series."""
    nu = _as_order(order).nu
    return _scaled(nu, z, 1.0, 0.0, None)


def _derivative(nu: float, z: complex, sign: float) -> SeriesEval:
    z = complex(z)
    if z == 0:
        if nu == 0.0:
            return SeriesEval(0j, 0.0, 1)
        if nu == 1.0:
            return SeriesEval(0.5 + 0j, 0.0, 1)
        if nu > 1.0:
            return SeriesEval(0j, 0.0, 1)
        raise KernelDomainError(
            f"derivative of the order-{nu} Bessel function has no limit at z = 0"
        )
    # term-wise differentiation: d/dz (z/2)^(2n+nu) = (2n+nu)/2 (z/2)^(2n+nu-1)
    return _scaled(nu, z, sign, 1.0, lambda n: (2.0 * n + nu) / 2.0)


def bessel_j_prime(order, z: complex) -> SeriesEval:
    """J_nu'(z) by term-wise differentiation of the series."""
    return _derivative(_as_order(order).nu, z, -1.0)


def bessel_i_prime(order, z: complex) -> SeriesEval:
    """I_nu'(z) by term-wise differentiation of the series."""
    return _derivative(_as_order(order).nu, z, 1.0)


def log_derivative_j(order, z: complex) -> complex:
    """z J_nu'(z) / J_nu(z), via z J' = nu J - z J_{nu+1} on the entire parts.

    Branch free; equals nu at z = 0.
    """
    nu = _as_order(order).nu
    s0 = bessel_j_normalized(nu, z)
    s1 = bessel_j_normalized(nu + 1.0, z)
    z = complex(z)
    return nu - z * z / (2.0 * (nu + 1.0)) * s1.value / s0.value


def log_derivative_i(order, z: complex) -> complex:
    """z I_nu'(z) / I_nu(z) = nu + z I_{nu+1}(z) / I_nu(z)."""
    nu = _as_order(order).nu
    s0 = bessel_i_normalized(nu, z)
    s1 = bessel_i_normalized(nu + 1.0, z)
    z = complex(z)
    return nu + z * z / (2.0 * (nu + 1.0)) * s1.value / s0.value


def jv_real(nu: float, x):
    """J_nu at real x > 0, vectorized.

    Uses the power series where it is accurate (x <= 5) and
    scipy.special.jv beyond, where the alternating series cancels badly.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = x <= SERIES_ACCURATE_LIMIT
    if np.any(small):
        xs = x[small]
        w = -(xs / 2.0) ** 2
        term = np.ones_like(xs)
        acc = np.ones_like(xs)
        for n in range(80):
            term = term * w / ((n + 1) * (n + nu + 1))
            acc = acc + term
        with np.errstate(divide="ignore"):
            out[small] = acc * np.exp(nu * np.log(xs / 2.0) - log_gamma(nu + 1.0))
    if np.any(~small):
        out[~small] = special.jv(nu, x[~small])
    return out if out.ndim else float(out)


def iv_real(nu: float, x):
    """I_nu at real x > 0, vectorized; the series has no cancellation here."""
    x = np.asarray(x, dtype=float)
    w = (x / 2.0) ** 2
    term = np.ones_like(x)
    acc = np.ones_like(x)
    n = 0
    while True:
        term = term * w / ((n + 1) * (n + nu + 1))
        acc = acc + term
        n += 1
        if np.all(term <= 1e-18 * acc) or n >= MAX_TERMS:
            break
    with np.errstate(divide="ignore"):
        out = acc * np.exp(nu * np.log(x / 2.0) - log_gamma(nu + 1.0))
    return out if out.ndim else float(out)
