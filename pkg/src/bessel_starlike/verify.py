"""Numerical audit of computed radii and of the elementary inequalities.

A radius r is accepted when min Re S_F on |z| = r(1 - eps) stays above beta
and min Re S_F on |z| = r(1 + eps) drops below it, with the minimum sitting
on the expected ray: the positive real axis for the J-equation branches,
the imaginary axis for f_nu with -1 < nu < 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .family import Family, Kind, PoleError, star_direct
from .zeros import ZeroTable

DEFAULT_EPS = 0.01
DEFAULT_ANGLES = 720
# slack allowed on the non-strict inequalities, relative to term size
INEQ_TOL = 1e-14


@dataclass(frozen=True)
class Disk:
    radius: float
    center: complex = 0j

    def __post_init__(self):
        if not self.radius > 0.0:
            raise ValueError("disk radius must be positive")

    def circle(self, n_angles: int) -> np.ndarray:
        theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
        return self.center + self.radius * np.exp(1j * theta)


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    passed: bool
    worst_margin: float
    worst_point: complex
    samples: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        pt = self.worst_point
        msg = (
            f"{status} {self.claim_id}: worst_margin={self.worst_margin:.6e} "
            f"at {pt.real:.6g}{pt.imag:+.6g}j samples={self.samples}"
        )
        return msg + (f" {self.detail}" if self.detail else "")


def _expected_angles(family: Family) -> tuple:
    if family.kind is Kind.F and family.nu < 0:
        return (math.pi / 2, 3 * math.pi / 2)
    if family.kind is Kind.H:
        return (0.0,)
    # S_f and S_g are even in z
    return (0.0, math.pi)


def _angle_distance(a: float, b: float) -> float:
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def min_real_star(family: Family, r: float, n_angles: int):
    """(min Re S_F, argmin point) over n_angles uniform samples of |z| = r."""
    pts = Disk(r).circle(n_angles)
    vals = np.empty(n_angles)
    for k, z in enumerate(pts):
        vals[k] = star_direct(family, z).value.real
    i = int(np.argmin(vals))
    return float(vals[i]), complex(pts[i])


def verify_starlike_radius(
    family: Family,
    beta: float,
    radius: float,
    eps: float = DEFAULT_EPS,
    n_angles: int = DEFAULT_ANGLES,
):
    """(inside, outside) reports for a claimed radius of starlikeness of order beta."""
    if not 0.0 < eps <= 0.05:
        raise ValueError("eps must lie in (0, 0.05]")
    tag = f"{family.kind.value}(nu={family.nu:g},beta={beta:g})"
    step = 2 * math.pi / n_angles
    expected = _expected_angles(family)

    m_in, p_in = min_real_star(family, radius * (1.0 - eps), n_angles)
    inside = VerificationReport(
        f"starlike-inside-{tag}", m_in - beta > 0.0, m_in - beta, p_in, n_angles
    )

    try:
        m_out, p_out = min_real_star(family, radius * (1.0 + eps), n_angles)
    except PoleError as exc:
        raise PoleError(f"pole within r(1+eps) for {tag}: radius exceeds the first singularity") from exc
    ang = math.atan2(p_out.imag, p_out.real) % (2 * math.pi)
    off = min(_angle_distance(ang, e) for e in expected)
    on_ray = off <= step * (1 + 1e-9)
    outside = VerificationReport(
        f"starlike-outside-{tag}",
        (m_out - beta < 0.0) and on_ray,
        m_out - beta,
        p_out,
        n_angles,
        detail=f"angle={ang:.6f} off_expected={off:.2e}",
    )
    return inside, outside


def halfplane_slacks(alpha: float, z):
    """Slacks of |z|/(a-|z|) >= Re z/(a-z) and Re z/(a-z) >= -|z|/(a+|z|)."""
    z = np.asarray(z, dtype=complex)
    m = np.abs(z)
    mid = (z / (alpha - z)).real
    upper = m / (alpha - m) - mid
    lower = mid + m / (alpha + m)
    return upper, lower


def _report(claim: str, z, slack_pairs, valid, scale) -> VerificationReport:
    upper, lower = slack_pairs
    worst = np.minimum(upper, lower)
    # relative to the size of the terms involved
    rel = np.where(valid, worst / np.maximum(scale, 1e-300), np.inf)
    i = int(np.argmin(rel))
    n_bad = int(np.sum(~valid))
    passed = bool(np.all(rel[valid] >= -INEQ_TOL)) if np.any(valid) else False
    detail = f"precondition_violations={n_bad}" if n_bad else ""
    return VerificationReport(
        claim, passed, float(worst[i]), complex(np.ravel(z)[i]), int(np.sum(valid)), detail
    )


def check_halfplane_inequalities(alpha: float, z_samples) -> VerificationReport:
    """Both half-plane bounds at every sample with alpha > |z|."""
    z = np.asarray(z_samples, dtype=complex).ravel()
    valid = alpha > np.abs(z)
    zz = np.where(valid, z, 0.0)
    up, lo = halfplane_slacks(alpha, zz)
    m = np.abs(zz)
    scale = 1.0 + m / (alpha - m)
    return _report(f"halfplane(alpha={alpha:g})", z, (up, lo), valid, scale)


def check_term_inequalities(table: ZeroTable, z_samples) -> VerificationReport:
    """The half-plane bounds for z^2/(j^2 - z^2), every zero j in the table."""
    z = np.asarray(z_samples, dtype=complex).ravel()
    j = table.as_array()
    valid = np.abs(z) < j[0]
    zz = np.where(valid, z, 0.0)[:, None]
    j2 = (j * j)[None, :]
    up, lo = halfplane_slacks(j2, zz * zz)
    m2 = np.abs(zz) ** 2
    scale = 1.0 + m2 / (j2 - m2)
    # keep the worst zero for each sample
    k = np.argmin(np.minimum(up, lo) / scale, axis=1)
    rows = np.arange(len(z))
    return _report(
        f"term-inequalities(nu={table.order.nu:g},N={table.count})",
        z,
        (up[rows, k], lo[rows, k]),
        valid,
        scale[rows, k],
    )
