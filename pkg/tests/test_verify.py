import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bessel_starlike.family import Family, star_direct
from bessel_starlike.radius import radius
from bessel_starlike.verify import (
    Disk,
    VerificationReport,
    check_halfplane_inequalities,
    check_term_inequalities,
    halfplane_slacks,
    min_real_star,
    verify_starlike_radius,
)
from bessel_starlike.zeros import bessel_zeros


def slack_oracle(alpha, z):
    """Closed forms of both slacks, from clearing denominators by hand."""
    m, x = abs(z), z.real
    d = abs(alpha - z) ** 2
    upper = alpha * (alpha + m) * (m - x) / ((alpha - m) * d)
    lower = alpha * (alpha - m) * (x + m) / (d * (alpha + m))
    return upper, lower


class TestDisk:
    def test_circle(self):
        pts = Disk(2.0).circle(4)
        assert np.allclose(pts, [2, 2j, -2, -2j])

    def test_radius_positive(self):
        with pytest.raises(ValueError):
            Disk(0.0)


def test_report_line():
    rep = VerificationReport("demo", True, 0.5, 1 + 2j, 10, "x=1")
    assert rep.line() == "PASS demo: worst_margin=5.000000e-01 at 1+2j samples=10 x=1"
    assert VerificationReport("demo", False, -1.0, 0j, 1).line().startswith("FAIL demo")


@pytest.mark.parametrize(
    "kind, nu, beta", [("f", 1.0, 0.0), ("f", -0.5, 0.25), ("g", 0.5, 0.5), ("h", -0.9, 0.0), ("h", 2.0, 0.9)]
)
def test_verify_true_radius(kind, nu, beta):
    fam = Family.of(kind, nu)
    r = radius(kind, nu, beta).radius
    inside, outside = verify_starlike_radius(fam, beta, r)
    assert inside.passed and outside.passed
    assert inside.worst_margin > 0 > outside.worst_margin


def test_verify_rejects_wrong_radius():
    fam = Family.of("g", 1.0)
    r = radius("g", 1.0, 0.0).radius
    inside, _ = verify_starlike_radius(fam, 0.0, 1.1 * r)
    _, outside = verify_starlike_radius(fam, 0.0, 0.9 * r)
    assert not inside.passed
    assert not outside.passed


def test_minimum_against_dense_sampling():
    # oracle: 10^4 angles straight from the star function
    fam = Family.of("h", 0.3)
    r = 0.9 * radius("h", 0.3, 0.0).radius
    theta = 2 * np.pi * np.arange(10_000) / 10_000
    dense = min(star_direct(fam, r * np.exp(1j * t)).value.real for t in theta)
    m, p = min_real_star(fam, r, 720)
    assert m == pytest.approx(dense, abs=1e-12)
    assert abs(p - r) <= 1e-12


def test_eps_range():
    with pytest.raises(ValueError):
        verify_starlike_radius(Family.of("g", 1.0), 0.0, 1.0, eps=0.1)


class TestHalfplane:
    def test_real_point(self):
        upper, lower = halfplane_slacks(1.0, 0.5)
        assert upper == pytest.approx(0.0, abs=1e-15)
        assert lower == pytest.approx(1 + 1 / 3)

    def test_imaginary_point(self):
        upper, lower = halfplane_slacks(1.0, 0.5j)
        mid = (0.5j / (1 - 0.5j)).real
        assert mid == pytest.approx(-0.2)
        assert upper == pytest.approx(1.2)
        assert lower == pytest.approx(-0.2 + 1 / 3)

    @settings(max_examples=300, deadline=None)
    @given(
        alpha=st.floats(0.1, 50.0),
        frac=st.floats(0.0, 0.999),
        theta=st.floats(0.0, 2 * math.pi),
    )
    def test_against_closed_forms(self, alpha, frac, theta):
        z = frac * alpha * complex(math.cos(theta), math.sin(theta))
        up, lo = halfplane_slacks(alpha, z)
        ou, ol = slack_oracle(alpha, z)
        # alpha - |z| carries a relative error of eps * scale, amplified by scale again
        scale = 1 + abs(z) / (alpha - abs(z))
        tol = 64 * 2.2e-16 * scale**2
        assert up == pytest.approx(ou, abs=tol)
        assert lo == pytest.approx(ol, abs=tol)
        assert ou >= 0 and ol >= 0

    def test_check_passes_on_disk(self):
        rng = np.random.default_rng(3)
        z = 1.9 * np.sqrt(rng.random(2000)) * np.exp(2j * np.pi * rng.random(2000))
        rep = check_halfplane_inequalities(2.0, z)
        assert rep.passed and rep.samples == 2000

    def test_precondition_violations_reported(self):
        rep = check_halfplane_inequalities(1.0, [0.5, 2.0])
        assert rep.samples == 1
        assert "precondition_violations=1" in rep.detail


def test_term_inequalities():
    table = bessel_zeros(0.0, 8)
    rng = np.random.default_rng(5)
    z = 0.99 * table.first * np.sqrt(rng.random(1000)) * np.exp(2j * np.pi * rng.random(1000))
    rep = check_term_inequalities(table, z)
    assert rep.passed and rep.samples == 1000
