import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from cutfock.specfun import (
    BesselOrder,
    LaguerreParams,
    airy_ai,
    airy_smallest_zero,
    bessel_j,
    bessel_j_scaled,
    bessel_zero,
    bessel_zeros,
    laguerre_eval,
    laguerre_residual,
    laguerre_zeros,
    log_gamma,
)


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 0.0), (0.5, 0.5723649429247001), (6.0, math.log(120.0))],
)
def test_log_gamma_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
def test_log_gamma_domain(x):
    with pytest.raises(ValueError):
        log_gamma(x)


def test_param_validation():
    with pytest.raises(ValueError):
        LaguerreParams(-1, 0.0)
    with pytest.raises(ValueError):
        LaguerreParams(2, -1.0)
    with pytest.raises(ValueError):
        BesselOrder(-0.75)


def test_laguerre_eval_examples():
    assert laguerre_eval(0, 3.7, 12.0) == 1.0
    assert laguerre_eval(1, 0.5, 2.0) == pytest.approx(-0.5)
    assert laguerre_eval(2, 0.5, 0.0) == pytest.approx(15 / 8)


@given(
    n=st.integers(0, 50),
    alpha=st.sampled_from([-0.5 + 0.5 * k for k in range(12)]),
    x=st.floats(0.0, 100.0),
)
@settings(max_examples=80, deadline=None)
def test_laguerre_matches_scipy(n, alpha, x):
    ours = laguerre_eval(n, alpha, x)
    ref = special.eval_genlaguerre(n, alpha, x)
    scale = max(1.0, abs(ref), abs(special.eval_genlaguerre(max(n - 1, 0), alpha, x)))
    assert abs(ours - ref) <= 1e-9 * scale


@given(
    n=st.integers(1, 50),
    alpha=st.sampled_from([-0.5 + 0.5 * k for k in range(12)]),
    x=st.floats(0.5, 100.0),
)
@settings(max_examples=80, deadline=None)
def test_laguerre_ode_residual(n, alpha, x):
    # x y'' + (alpha + 1 - x) y' + n y = 0 by five-point central differences
    h = 1e-3 * max(1.0, x)
    ym2, ym1, y0, yp1, yp2 = (laguerre_eval(n, alpha, x + k * h) for k in (-2, -1, 0, 1, 2))
    d1 = (ym2 - 8 * ym1 + 8 * yp1 - yp2) / (12 * h)
    d2 = (-ym2 + 16 * ym1 - 30 * y0 + 16 * yp1 - yp2) / (12 * h * h)
    terms = [x * d2, (alpha + 1 - x) * d1, n * y0]
    scale = sum(abs(t) for t in terms)
    assert abs(sum(terms)) <= 1e-6 * scale


def test_laguerre_zero_examples():
    assert laguerre_zeros(0, 1.0).size == 0
    for d in range(1, 10):
        np.testing.assert_allclose(laguerre_zeros(1, d / 2 - 1), [d / 2])
    np.testing.assert_allclose(laguerre_zeros(2, 0.5), [(5 - math.sqrt(10)) / 2, (5 + math.sqrt(10)) / 2], atol=1e-14)
    np.testing.assert_allclose(laguerre_zeros(2, 0.0), [2 - math.sqrt(2), 2 + math.sqrt(2)], atol=1e-14)


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 3.5, 74.0])
@pytest.mark.parametrize("n", [3, 40, 120, 300])
def test_laguerre_zeros_against_golub_welsch_oracle(n, alpha):
    ref, _ = special.roots_genlaguerre(n, alpha)
    z = laguerre_zeros(n, alpha)
    np.testing.assert_allclose(z, np.sort(ref), rtol=1e-11)
    assert laguerre_residual(n, alpha, z).max() < 1e-11


def test_laguerre_zeros_high_degree_residual():
    z = laguerre_zeros(700, 0.5)
    assert z.size == 700 and np.all(np.diff(z) > 0)
    assert laguerre_residual(700, 0.5, z).max() < 1e-13


@pytest.mark.parametrize("alpha", [-0.5, 0.5, 2.0])
def test_laguerre_zero_interlacing(alpha):
    prev = laguerre_zeros(1, alpha)
    for n in range(2, 201):
        cur = laguerre_zeros(n, alpha)
        assert np.all(cur[:-1] < prev) and np.all(prev < cur[1:])
        prev = cur


def test_bessel_examples():
    assert abs(bessel_j(0.5, math.pi)) < 1e-15
    assert bessel_j(0.0, 0.0) == 1.0
    assert bessel_j(0.5, math.pi / 2) == pytest.approx(math.sqrt(2 / (math.pi * math.pi / 2)), rel=1e-14)
    with pytest.raises(ValueError):
        bessel_j(1.0, -0.1)


@pytest.mark.parametrize("nu", [-0.5, 0.5, 1.5])
def test_half_integer_closed_forms(nu):
    x = np.linspace(0.05, 60.0, 500)
    s, c = np.sin(x), np.cos(x)
    closed = {
        -0.5: np.sqrt(2 / (np.pi * x)) * c,
        0.5: np.sqrt(2 / (np.pi * x)) * s,
        1.5: np.sqrt(2 / (np.pi * x)) * (s / x - c),
    }[nu]
    np.testing.assert_allclose(bessel_j(nu, x), closed, atol=1e-10)


@given(nu=st.sampled_from([-0.5, 0.0, 0.5, 1.0, 3.5, 12.0, 74.0]), x=st.floats(0.0, 200.0))
@settings(max_examples=120, deadline=None)
def test_bessel_matches_scipy(nu, x):
    assert bessel_j(nu, x) == pytest.approx(special.jv(nu, x), rel=1e-12, abs=1e-12)


def test_bessel_scaled_regular_at_origin():
    for nu in (0.5, 1.0, 3.5):
        x = np.array([1e-8, 1e-4])
        expected = 1 / (2**nu * math.gamma(nu + 1))
        np.testing.assert_allclose(bessel_j_scaled(nu, x), expected, rtol=1e-7)
        assert bessel_j_scaled(nu, 0.0) == pytest.approx(expected)


def test_bessel_zero_examples():
    for n in range(1, 30):
        assert bessel_zero(0.5, n) == pytest.approx(n * math.pi, abs=1e-12)
        assert bessel_zero(-0.5, n) == pytest.approx((n - 0.5) * math.pi, abs=1e-12)
    assert bessel_zero(0.0, 1) == pytest.approx(2.404825557695773, abs=1e-12)
    with pytest.raises(ValueError):
        bessel_zero(0.0, 0)


@pytest.mark.parametrize("nu", [0, 1, 4, 20])
def test_bessel_zeros_against_scipy(nu):
    np.testing.assert_allclose(bessel_zeros(nu, 120), special.jn_zeros(nu, 120), rtol=1e-13)


def test_bessel_zero_monotone():
    orders = [-0.5, 0.0, 0.5, 1.5, 3.5, 10.0]
    table = np.array([bessel_zeros(nu, 40) for nu in orders])
    assert np.all(np.diff(table, axis=1) > 0)
    assert np.all(np.diff(table, axis=0) > 0)
    # McMahon branch agrees with the scan
    assert bessel_zero(1.5, 400) == pytest.approx(bessel_zeros(1.5, 400)[-1], abs=1e-11)


def test_airy_zero():
    i1 = airy_smallest_zero()
    assert i1 == pytest.approx(2.3381074105, abs=1e-10)
    assert i1 == pytest.approx(-special.ai_zeros(1)[0][0], abs=1e-13)
    # 6^{-1/3} * 2.3381074 = 1.2867101
    assert 6 ** (-1 / 3) * i1 == pytest.approx(1.2867101, abs=1e-7)
    assert airy_ai(-2.0)[0] * airy_ai(-3.0)[0] < 0
    assert abs(airy_ai(-i1)[0]) < 1e-14


@given(x=st.floats(-6.0, 3.0))
@settings(max_examples=50, deadline=None)
def test_airy_matches_scipy(x):
    ai, aip = airy_ai(x)
    ref = special.airy(x)
    assert ai == pytest.approx(ref[0], abs=1e-12)
    assert aip == pytest.approx(ref[1], abs=1e-12)
