"""Named claims checked by ``bessel-starlike verify``.

Each claim function returns a list of VerificationReport; the CLI prints
one line per report and exits nonzero if any fails.
"""

from __future__ import annotations

import csv
import math
from functools import lru_cache
from importlib import resources

import numpy as np

from .family import Family, lambda_derivative_check, star_direct, star_mittag_leffler
from .kernels import bessel_j_prime
from .radius import Branch, q_nu_profile, radius, solve_nu0
from .verify import (
    VerificationReport,
    check_halfplane_inequalities,
    check_term_inequalities,
    halfplane_slacks,
    verify_starlike_radius,
)
from .zeros import ZeroTable, bessel_zeros, imaginary_zero_bound

NU0_PUBLISHED = -0.5623
NU0_TOL = 5e-4
RADIUS_AT_NU0_TOL = 5e-3
DERIVATIVE_ZERO_NUS = (0.5, 1.0, 2.0, 5.0)
DERIVATIVE_ZERO_RTOL = 1e-9
NU_GRID = (-0.9, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0, 5.0)
BETA_GRID = (0.0, 0.25, 0.5, 0.9)
STRICT_SLACK = 1e-12
ML_SAMPLES = 1000
ML_ZEROS = 64
INEQ_SAMPLES = 10_000
EQUALITY_TOL = 1e-14
LAMBDA_NUS = (-0.5, 0.0, 1.0)
LAMBDA_ZS = (0.3, 0.5, 1.0)
LAMBDA_STEPS = (0.1, 0.05, 0.025, 0.0125)
LAMBDA_MIN_ORDER = 1.9
GOLDEN_RTOL = 1e-10


def _report(claim, ok, margin, point=0j, samples=1, detail=""):
    return VerificationReport(claim, bool(ok), float(margin), complex(point), samples, detail)


@lru_cache(maxsize=None)
def zero_table(nu: float, n: int = ML_ZEROS) -> ZeroTable:
    return bessel_zeros(nu, n)


def grid_points():
    """(kind, nu, beta) triples of the acceptance grid valid for each family."""
    for kind in ("f", "g", "h"):
        for nu in NU_GRID:
            for beta in BETA_GRID:
                yield kind, nu, beta


def claim_nu0():
    nu0 = solve_nu0()
    err = abs(nu0 - NU0_PUBLISHED)
    return [_report("nu0", err <= NU0_TOL, NU0_TOL - err, nu0, detail=f"nu0={nu0:.12g}")]


def claim_radius_at_nu0():
    r = radius("h", solve_nu0(), 0.0).radius
    err = abs(r - 1.0)
    return [_report("radius-at-nu0", err <= RADIUS_AT_NU0_TOL, RADIUS_AT_NU0_TOL - err, r,
                    detail=f"radius={r:.12g}")]


def first_zero_of_derivative(nu: float, hi: float = 20.0, step: float = 0.01) -> float:
    """Sign scan + bisection on the term-wise differentiated series of J_nu."""

    def jp(x):
        return bessel_j_prime(nu, x).value.real

    a = step
    fa = jp(a)
    while a < hi:
        b = a + step
        fb = jp(b)
        if fa * fb < 0.0:
            for _ in range(200):
                m = 0.5 * (a + b)
                fm = jp(m)
                if fm == 0.0:
                    return m
                if fa * fm < 0.0:
                    b = m
                else:
                    a, fa = m, fm
                if b - a <= 4e-16 * b:
                    break
            return 0.5 * (a + b)
        a, fa = b, fb
    raise RuntimeError(f"no zero of J_{nu}' below {hi}")


def claim_derivative_zero():
    out = []
    for nu in DERIVATIVE_ZERO_NUS:
        r = radius("f", nu, 0.0).radius
        ref = first_zero_of_derivative(nu)
        rel = abs(r - ref) / ref
        out.append(_report(f"derivative-zero(nu={nu:g})", rel <= DERIVATIVE_ZERO_RTOL,
                           DERIVATIVE_ZERO_RTOL - rel, r, detail=f"radius={r:.12g} oracle={ref:.12g}"))
    return out


def claim_first_zero_bound():
    out = []
    for kind, nu, beta in grid_points():
        res = radius(kind, nu, beta)
        j1 = zero_table(nu, 1).first
        tag = f"first-zero-bound-{kind}(nu={nu:g},beta={beta:g})"
        if res.branch is Branch.I_EQUATION:
            bound = imaginary_zero_bound(nu, res.defining_alpha, j1)
            margin = bound - res.radius**2
            out.append(_report(tag, margin > STRICT_SLACK * bound, margin, res.radius,
                               detail=f"xi^2={res.radius**2:.6g} bound={bound:.6g}"))
            continue
        # h radius lives in the z-plane of h, where the bound is j^2
        limit = j1 * j1 if kind == "h" else j1
        margin = limit - res.radius
        out.append(_report(tag, margin > STRICT_SLACK * limit, margin, res.radius,
                           detail=f"radius={res.radius:.6g} limit={limit:.6g}"))
    return out


def mittag_leffler_samples(seed: int = 0, n: int = ML_SAMPLES):
    """Random (family, z) within |z| < 0.95 j_{nu,1} (or j^2 for h)."""
    rng = np.random.default_rng(seed)
    nus = np.round(rng.uniform(-0.95, 5.0, size=20), 6)
    nus = np.where(np.abs(nus) < 0.05, 0.05, nus)
    kinds = ("f", "g", "h")
    for i in range(n):
        nu = float(nus[i % len(nus)])
        kind = kinds[int(rng.integers(3))]
        j1 = zero_table(nu).first
        lim = j1 * j1 if kind == "h" else j1
        z = 0.95 * lim * math.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random())
        yield Family.of(kind, nu), complex(z)


def claim_mittag_leffler(seed: int = 0, n: int = ML_SAMPLES):
    worst, worst_pt, worst_tag, ok = math.inf, 0j, "", True
    for fam, z in mittag_leffler_samples(seed, n):
        a = star_direct(fam, z)
        b = star_mittag_leffler(fam, z, zero_table(fam.nu))
        margin = b.tail_bound - abs(a.value - b.value)
        if margin < worst:
            worst, worst_pt, worst_tag = margin, z, f"{fam.kind.value}(nu={fam.nu:g})"
        ok &= margin >= 0.0
    return [_report("mittag-leffler", ok, worst, worst_pt, n, detail=f"worst={worst_tag}")]


def claim_disk_maximality(eps: float = 0.01, n_angles: int = 720, points=None):
    out = []
    for kind, nu, beta in points or grid_points():
        res = radius(kind, nu, beta)
        out.extend(verify_starlike_radius(Family.of(kind, nu), beta, res.radius, eps, n_angles))
    return out


def _disk_samples(rng, n, r):
    return r * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def _equality_error(alpha, z, upper_tight: bool) -> float:
    """Largest |slack| of the tight side, relative to the term size 1 + |z|/(alpha - |z|)."""
    upper, lower = halfplane_slacks(alpha, z)
    m = np.abs(z)
    scale = 1.0 + m / (alpha - m)
    return float(np.max(np.abs(upper if upper_tight else lower) / scale))


def claim_halfplane(alpha: float = 2.0, seed: int = 0, n: int = INEQ_SAMPLES):
    rng = np.random.default_rng(seed)
    z = _disk_samples(rng, n, alpha * (1 - 1e-9))
    out = [check_halfplane_inequalities(alpha, z)]
    # the upper bound is tight on the positive reals, the lower on the negative reals
    x = rng.uniform(0.0, alpha * (1 - 1e-6), 64)
    err = max(_equality_error(alpha, x, True), _equality_error(alpha, -x, False))
    out.append(_report(f"halfplane-equality(alpha={alpha:g})", err <= EQUALITY_TOL,
                       EQUALITY_TOL - err, samples=2 * len(x)))
    return out


def claim_term_inequalities(nu: float = 0.0, seed: int = 0, n: int = INEQ_SAMPLES, zeros: int = 8):
    rng = np.random.default_rng(seed)
    table = zero_table(nu, zeros)
    z = _disk_samples(rng, n, table.first * (1 - 1e-9))
    out = [check_term_inequalities(table, z)]
    # real z: upper bound tight; purely imaginary z (z^2 < 0): lower bound tight
    r = rng.uniform(0.0, table.first * (1 - 1e-6), 64)[:, None]
    j2 = table.as_array()[None, :] ** 2
    err = max(_equality_error(j2, r**2, True), _equality_error(j2, (1j * r) ** 2, False))
    out.append(_report(f"term-equality(nu={nu:g})", err <= EQUALITY_TOL, EQUALITY_TOL - err,
                       samples=2 * r.size * table.count))
    return out


def claim_q_nu():
    out = []
    grid = np.linspace(1e-3, 10.0, 400)
    for nu in (-0.9, -0.5, -0.1):
        for beta in BETA_GRID:
            q = q_nu_profile(nu, beta, grid)
            inc = float(np.min(np.diff(q)))
            lim = abs(q_nu_profile(nu, 0.0, [1e-6])[0] - nu)
            changes = int(np.sum(np.signbit(q[1:]) != np.signbit(q[:-1])))
            ok = inc > 0.0 and lim <= 1e-4 and changes == 1 and q[0] < 0 < q[-1]
            out.append(_report(f"q-nu(nu={nu:g},beta={beta:g})", ok, inc, samples=len(grid),
                               detail=f"limit_err={lim:.1e} sign_changes={changes}"))
    return out


def lambda_convergence_order(nu: float, z: float, steps=LAMBDA_STEPS) -> float:
    res = [lambda_derivative_check(nu, z, h) for h in steps]
    orders = [math.log(res[i] / res[i + 1]) / math.log(steps[i] / steps[i + 1])
              for i in range(len(steps) - 1)]
    return min(orders)


def claim_lambda():
    out = []
    for nu in LAMBDA_NUS:
        for z in LAMBDA_ZS:
            p = lambda_convergence_order(nu, z)
            out.append(_report(f"lambda-identity(nu={nu:g},z={z:g})", p >= LAMBDA_MIN_ORDER,
                               p - LAMBDA_MIN_ORDER, z, len(LAMBDA_STEPS),
                               detail=f"observed_order={p:.3f}"))
    return out


def load_golden(path=None):
    if path is None:
        text = resources.files("bessel_starlike").joinpath("golden/radii.csv").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return list(csv.DictReader(text.splitlines()))


def claim_golden(path=None):
    worst, ok, n = math.inf, True, 0
    for row in load_golden(path):
        res = radius(row["family"], float(row["nu"]), float(row["beta"]))
        ref = float(row["radius"])
        margin = GOLDEN_RTOL - abs(res.radius - ref) / ref
        ok &= margin >= 0.0 and res.branch.value == row["branch"]
        worst = min(worst, margin)
        n += 1
    return [_report("golden-radii", ok, worst, samples=n)]


CLAIMS = {
    "nu0": claim_nu0,
    "radius-at-nu0": claim_radius_at_nu0,
    "derivative-zero": claim_derivative_zero,
    "first-zero-bound": claim_first_zero_bound,
    "mittag-leffler": claim_mittag_leffler,
    "disk-maximality": claim_disk_maximality,
    "halfplane": claim_halfplane,
    "term-inequalities": claim_term_inequalities,
    "q-nu": claim_q_nu,
    "lambda-identity": claim_lambda,
    "golden": claim_golden,
}
