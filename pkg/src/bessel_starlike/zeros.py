"""Real zeros of J_nu and of the Dini functions r J_nu'(r) + alpha J_nu(r)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .kernels import Order, _as_order, iv_real, jv_real

MAX_ZEROS = 64
SCAN_STEP = 0.1
# brentq stops at |x - x*| <= XTOL + RTOL |x|
XTOL = 1e-15
RTOL = 1e-14
SCAN_START = 1e-6
I_SCAN_START = 1e-8


class RegimeError(ValueError):
    """(nu, alpha) outside the zero regime the operation was asked for."""


class NoRootError(RuntimeError):
    """No sign change where one was expected."""


@dataclass(frozen=True)
class ZeroTable:
    order: Order
    zeros: tuple
    residuals: tuple

    @property
    def count(self) -> int:
        return len(self.zeros)

    @property
    def first(self) -> float:
        return self.zeros[0]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.zeros)


@dataclass(frozen=True)
class DiniParameter:
    alpha: float

    def real_zeros(self, nu: float) -> bool:
        return self.alpha + nu >= 0.0

    def imaginary_pair(self, nu: float) -> bool:
        return -1.0 < nu < -self.alpha


def scan_ceiling(nu: float, n: int) -> float:
    # classical envelope (n + nu/2 + 3/4) pi, clipped away from tiny values
    return max((n + nu / 2.0 + 0.75) * math.pi, 1.0)


def _sign_changes(f, lo: float, hi: float, step: float, limit: int | None = None):
    """Brackets (a, b) of sign changes of f on a uniform grid over [lo, hi]."""
    n = max(int(math.ceil((hi - lo) / step)), 1)
    x = np.linspace(lo, hi, n + 1)
    y = f(x)
    out = []
    for i in range(n):
        if y[i] == 0.0:
            out.append((x[i], x[i]))
        elif y[i] * y[i + 1] < 0.0:
            out.append((x[i], x[i + 1]))
        if limit is not None and len(out) >= limit:
            break
    return out


def _refine(f, a: float, b: float) -> float:
    if a == b:
        return a
    return brentq(lambda t: float(f(t)), a, b, xtol=XTOL, rtol=RTOL)


def bessel_zeros(order, n: int) -> ZeroTable:
    """First ``n`` positive zeros j_{nu,1} < ... < j_{nu,n} of J_nu."""
    order = _as_order(order)
    nu = order.nu
    if not 1 <= n <= MAX_ZEROS:
        raise ValueError(f"n must be in [1, {MAX_ZEROS}], got {n}")

    def f(x):
        return jv_real(nu, x)

    hi = scan_ceiling(nu, n)
    brackets = _sign_changes(f, SCAN_START, hi, SCAN_STEP, limit=n)
    # the envelope is heuristic for small n; widen until enough zeros appear
    while len(brackets) < n:
        lo = brackets[-1][1] if brackets else SCAN_START
        hi_new = hi + math.pi * (n - len(brackets) + 1)
        brackets += _sign_changes(f, lo, hi_new, SCAN_STEP, limit=n - len(brackets))
        hi = hi_new
        if hi > 4.0 * scan_ceiling(nu, n) + 100.0:
            raise NoRootError(f"could not bracket {n} zeros of J_{nu}")
    zeros = tuple(_refine(f, a, b) for a, b in brackets[:n])
    residuals = tuple(abs(float(f(z))) for z in zeros)
    return ZeroTable(order, zeros, residuals)


def dini_function(nu: float, alpha: float, r):
    """r J_nu'(r) + alpha J_nu(r), written as (nu + alpha) J_nu - r J_{nu+1}."""
    r = np.asarray(r, dtype=float)
    return (nu + alpha) * jv_real(nu, r) - r * jv_real(nu + 1.0, r)


def dini_function_imag(nu: float, alpha: float, xi):
    """xi I_nu'(xi) + alpha I_nu(xi) = (nu + alpha) I_nu + xi I_{nu+1}.

    Up to the factor i**nu this is the Dini function at z = i xi.
    """
    xi = np.asarray(xi, dtype=float)
    return (nu + alpha) * iv_real(nu, xi) + xi * iv_real(nu + 1.0, xi)


def _alpha(p) -> float:
    return p.alpha if isinstance(p, DiniParameter) else float(p)


def dini_smallest_positive_zero(order, p) -> float:
    """Smallest r > 0 with r J_nu'(r) + alpha J_nu(r) = 0, for alpha + nu >= 0.

    The root lies below j_{nu,1}: the Dini function is positive near 0 and
    equals j J_nu'(j) < 0 at the first zero of J_nu.  In the tie alpha + nu = 0
    the function is -r J_{nu+1}(r), whose smallest positive zero is j_{nu+1,1}.
    """
    order = _as_order(order)
    nu = order.nu
    alpha = _alpha(p)
    if alpha + nu == 0.0:
        return bessel_zeros(nu + 1.0, 1).first
    if not alpha + nu > 0.0:
        raise RegimeError(
            f"alpha + nu = {alpha + nu:.6g} must be positive for the real-zero regime"
        )
    j1 = bessel_zeros(order, 1).first

    def f(r):
        return dini_function(nu, alpha, r)

    step = min(SCAN_STEP, j1 / 100.0)
    brackets = _sign_changes(f, SCAN_START * min(1.0, j1), j1, step, limit=1)
    if not brackets:
        raise NoRootError(f"no sign change of the Dini function on (0, j_{{{nu},1}})")
    return _refine(f, *brackets[0])


def dini_imaginary_zero(order, p) -> float:
    """xi > 0 such that +-i xi are the imaginary zeros, for -1 < nu < -alpha."""
    order = _as_order(order)
    nu = order.nu
    alpha = _alpha(p)
    if not -1.0 < nu < -alpha:
        raise RegimeError(
            f"imaginary Dini zeros need -1 < nu < -alpha; got nu={nu}, alpha={alpha}"
        )
    j1 = bessel_zeros(order, 1).first

    def f(x):
        return dini_function_imag(nu, alpha, x)

    step = min(SCAN_STEP, j1 / 100.0)
    brackets = _sign_changes(f, I_SCAN_START, j1, step, limit=1)
    if not brackets:
        raise NoRootError(f"no imaginary Dini zero below j_{{{nu},1}}")
    return _refine(f, *brackets[0])


def imaginary_zero_bound(nu: float, alpha: float, j1: float) -> float:
    """Upper bound -(alpha+nu)/(2+alpha+nu) j1**2 on xi**2."""
    return -(alpha + nu) / (2.0 + alpha + nu) * j1 * j1
