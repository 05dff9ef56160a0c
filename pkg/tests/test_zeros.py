import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bessel_starlike.zeros import (
    DiniParameter,
    RegimeError,
    bessel_zeros,
    dini_function,
    dini_imaginary_zero,
    dini_smallest_positive_zero,
    imaginary_zero_bound,
)

mp.mp.dps = 30


def mp_first_root(fn, lo, hi, step):
    """Independent oracle: mpmath sign scan + bisection."""
    x, fx = mp.mpf(lo), fn(mp.mpf(lo))
    while x < hi:
        y = x + step
        fy = fn(y)
        if fx * fy < 0:
            return float(mp.findroot(fn, (x, y), solver="bisect", tol=1e-25))
        x, fx = y, fy
    raise AssertionError("oracle found no root")


class TestBesselZeros:
    def test_j0_first(self):
        assert bessel_zeros(0, 1).zeros == pytest.approx([2.404825557695773], rel=1e-14)

    def test_j1_first_two(self):
        assert bessel_zeros(1, 2).zeros == pytest.approx([3.8317059702075123, 7.015586669815619], rel=1e-13)

    def test_half_order_is_multiples_of_pi(self):
        assert bessel_zeros(0.5, 3).zeros == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], rel=1e-13)

    @pytest.mark.parametrize("nu", [-0.9, -0.5, 0.0, 0.5, 1.0, 2.7, 5.0])
    def test_table_invariants(self, nu):
        t = bessel_zeros(nu, 64)
        z = t.as_array()
        assert t.count == 64
        assert np.all(z > 0) and np.all(np.diff(z) > 0)
        assert max(t.residuals) <= 1e-10

    @pytest.mark.parametrize("nu", [-0.9, -0.5, 0.0, 0.5, 1.0, 2.7, 5.0])
    def test_interlacing(self, nu):
        a = bessel_zeros(nu, 20).as_array()
        b = bessel_zeros(nu + 1, 19).as_array()
        assert np.all(a[:19] < b) and np.all(b < a[1:])

    @pytest.mark.parametrize("nu, n", [(0.0, 64), (2.7, 5), (-0.9, 10), (-0.3, 40)])
    def test_against_mpmath(self, nu, n):
        z = bessel_zeros(nu, n).zeros[-1]
        ref = mp.findroot(lambda x: mp.besselj(nu, x), z)
        assert z == pytest.approx(float(ref), rel=1e-12)

    def test_j0_64th(self):
        assert bessel_zeros(0, 64).zeros[-1] == pytest.approx(200.27715579333241, rel=1e-13)

    def test_n_limits(self):
        with pytest.raises(ValueError):
            bessel_zeros(0, 65)
        with pytest.raises(ValueError):
            bessel_zeros(0, 0)


class TestDiniRealZero:
    def test_alpha_zero_is_j_prime_zero(self):
        assert dini_smallest_positive_zero(1, 0.0) == pytest.approx(1.8411837813406593, rel=1e-13)

    def test_half_order_reduces_to_cosine(self):
        assert dini_smallest_positive_zero(0.5, 0.5) == pytest.approx(math.pi / 2, rel=1e-13)

    def test_quarter_order(self):
        v = dini_smallest_positive_zero(0.25, DiniParameter(0.75))
        assert v == pytest.approx(1.4202650769268931, rel=1e-12)
        assert 0 < v < bessel_zeros(0.25, 1).first

    def test_tie_is_first_zero_of_next_order(self):
        # alpha + nu = 0 at nu = 1/2: -r J_{3/2}(r) = 0, i.e. tan r = r
        r = dini_smallest_positive_zero(0.5, -0.5)
        ref = float(mp.findroot(lambda x: mp.tan(x) - x, 4.49))
        assert r == pytest.approx(ref, rel=1e-13)

    def test_regime(self):
        with pytest.raises(RegimeError):
            dini_smallest_positive_zero(-0.5, 0.2)

    def test_residual(self):
        r = dini_smallest_positive_zero(2.0, 0.3)
        assert abs(dini_function(2.0, 0.3, r)) <= 1e-10

    def test_parameter_regime_flags(self):
        p = DiniParameter(0.25)
        assert p.real_zeros(0.5) and not p.imaginary_pair(0.5)
        assert p.imaginary_pair(-0.5) and not p.real_zeros(-0.5)


@settings(max_examples=40, deadline=None)
@given(nu=st.floats(-0.95, 6.0), shift=st.floats(0.01, 3.0))
def test_dini_zero_below_first_bessel_zero(nu, shift):
    # alpha + nu = shift > 0
    alpha = shift - nu
    v = dini_smallest_positive_zero(nu, alpha)
    assert 0 < v < bessel_zeros(nu, 1).first
    assert abs(dini_function(nu, alpha, v)) <= 1e-10


@pytest.mark.parametrize("nu, alpha", [(-0.5, 0.75), (2.3, -1.7), (-0.9, 0.95)])
def test_dini_real_zero_against_mpmath(nu, alpha):
    fn = lambda x: (nu + alpha) * mp.besselj(nu, x) - x * mp.besselj(nu + 1, x)
    ref = mp_first_root(fn, 1e-6, 20, mp.mpf("0.01"))
    assert dini_smallest_positive_zero(nu, alpha) == pytest.approx(ref, rel=1e-12)


class TestDiniImaginaryZero:
    def test_minus_half_quarter(self):
        # for nu = -1/2 the real form is xi tanh xi = 1/4
        xi = dini_imaginary_zero(-0.5, 0.25)
        assert xi == pytest.approx(0.5218134477957686, rel=1e-13)
        assert xi * xi < (0.25 / 2.25) * (math.pi / 2) ** 2

    def test_minus_half_zero_alpha(self):
        xi = dini_imaginary_zero(-0.5, 0.0)
        assert math.tanh(xi) == pytest.approx(1 / (2 * xi), rel=1e-13)
        assert xi == pytest.approx(0.7717, abs=1e-4)

    def test_regime(self):
        with pytest.raises(RegimeError):
            dini_imaginary_zero(0.5, 0.25)


@settings(max_examples=40, deadline=None)
@given(nu=st.floats(-0.98, -0.02), frac=st.floats(0.0, 0.98))
def test_imaginary_zero_bound(nu, frac):
    # alpha in [0, -nu) keeps -1 < nu < -alpha
    alpha = -nu * frac
    xi = dini_imaginary_zero(nu, alpha)
    j1 = bessel_zeros(nu, 1).first
    assert xi * xi < imaginary_zero_bound(nu, alpha, j1)
    ref = float(mp.besseli(nu, xi)) * (nu + alpha) + xi * float(mp.besseli(nu + 1, xi))
    assert abs(ref) <= 1e-10
