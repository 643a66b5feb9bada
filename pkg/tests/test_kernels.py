"""Tests for the covariance kernels.

Reference values marked "reference:" were computed with perzeta.oracle /
mpmath at 120 bits and frozen here.
"""

import math

import numpy as np
import pytest

from perzeta import kernels as K
from perzeta.errors import DomainError


# ---------------------------------------------------------------------------
# z_nu


def test_z_nu_unit_variance():
    for nu in (0.25, 0.5, 1.0, 2.0, 5.0):
        assert K.z_nu(0.0, nu) == 1.0


def test_z_nu_half_point_identity():
    # Z_nu(1/2) = 2^(-2 nu) - 1
    for nu in (0.5, 1.0, 2.0, 3.5):
        assert K.z_nu(0.5, nu) == pytest.approx(2.0 ** (-2 * nu) - 1.0, rel=1e-13)


def test_z_nu_white_noise_limit_is_exact():
    assert K.z_nu(0.0, 0.0) == 1.0
    assert K.z_nu(1.0, 0.0) == 1.0
    assert K.z_nu(0.3, 0.0) == 0.0
    assert K.z_nu(0.5, 0.0) == 0.0


def test_z_nu_periodicity_and_symmetry():
    for nu in (0.25, 1.5):
        for x in (0.125, 0.4375):
            v = K.z_nu(x, nu)
            assert K.z_nu(x + 1.0, nu) == v
            assert K.z_nu(-x, nu) == v
            assert K.z_nu(1.0 - x, nu) == v


def test_z_nu_period_rescaling():
    for x in (0.3, 1.1, 5.0):
        assert K.z_nu(x * 7.0, 1.5, period=7.0) == K.z_nu(x, 1.5)


def test_z_nu_domain():
    with pytest.raises(DomainError):
        K.z_nu(0.3, -0.5)
    with pytest.raises(DomainError):
        K.z_nu(0.3, 1.0, period=0.0)


# ---------------------------------------------------------------------------
# derivative kernel


def test_derivative_cov_reference_value():
    # reference: (2 pi)^2 * Re F(0.2, 3) / zeta(5)
    assert K.z_nu_derivative_cov(0.2, 2.0) == pytest.approx(
        7.2097073229855073814, rel=1e-13
    )


def test_derivative_cov_at_zero_lag():
    # variance of the derivative process: (2 pi)^2 zeta(2 nu - 1)/zeta(2 nu + 1)
    from perzeta.zeta_core import riemann_zeta

    nu = 2.0
    ref = (2 * math.pi) ** 2 * riemann_zeta(3.0) / riemann_zeta(5.0)
    assert K.z_nu_derivative_cov(0.0, nu) == pytest.approx(ref, rel=1e-14)


def test_derivative_cov_requires_nu_above_one():
    for nu in (0.5, 1.0):
        with pytest.raises(DomainError):
            K.z_nu_derivative_cov(0.2, nu)


def test_derivative_cov_period_scaling():
    # cov of d/dt f(t/T) picks up (1/T)^2
    a = K.z_nu_derivative_cov(0.2, 2.0)
    b = K.z_nu_derivative_cov(0.2 * 5.0, 2.0, period=5.0)
    assert b == pytest.approx(a / 25.0, rel=1e-13)


# ---------------------------------------------------------------------------
# matern


def test_matern_exponential_case():
    # nu = 1/2 reduces to exp(-|x|/l)
    for x in (0.1, 0.7, 2.0):
        assert K.matern(x, 0.5) == pytest.approx(math.exp(-x), rel=1e-12)
        assert K.matern(x, 0.5, lengthscale=2.0) == pytest.approx(
            math.exp(-x / 2.0), rel=1e-12
        )


def test_matern_three_halves_case():
    # nu = 3/2: (1 + sqrt(3) r) exp(-sqrt(3) r); reference: mpmath, x = 0.7
    assert K.matern(0.7, 1.5) == pytest.approx(0.65813737631658391585, rel=1e-12)


def test_matern_limits():
    assert K.matern(0.0, 2.5) == 1.0
    assert K.matern(0.0, 0.0) == 1.0
    assert K.matern(0.7, 0.0) == 0.0
    assert abs(K.matern(0.7, 1e-8)) < 1e-6  # nu -> 0 collapse
    assert K.matern(-0.7, 1.5) == K.matern(0.7, 1.5)


def test_matern_domain():
    with pytest.raises(DomainError):
        K.matern(0.1, -1.0)
    with pytest.raises(DomainError):
        K.matern(0.1, 1.0, lengthscale=0.0)


# ---------------------------------------------------------------------------
# sphere kernel


def test_sphere_kernel_normalization_and_domain():
    assert K.sphere_kernel(0.0, 1.0) == 1.0
    assert K.sphere_kernel(0.0, 1.0, a=2.0) == 1.0
    with pytest.raises(DomainError):
        K.sphere_kernel(-0.1, 1.0)
    with pytest.raises(DomainError):
        K.sphere_kernel(math.pi + 0.1, 1.0)
    with pytest.raises(DomainError):
        K.sphere_kernel(1.0, 1.0, a=0.5)
    with pytest.raises(DomainError):
        K.sphere_kernel(1.0, 0.0)


def test_sphere_spectral_coefficient_conditions():
    # spectrum: b_0 = a 2^-(s+1), b_n = n^-s; validity needs b_2 <= 2 b_0
    # and monotone even/odd subsequences, which hold exactly when a >= 1
    for nu in (0.5, 1.0, 3.0):
        s = 1.0 + 2.0 * nu
        for a in (1.0, 1.5, 4.0):
            b0 = a * 2.0 ** (-s - 1.0)
            bs = [n ** (-s) for n in range(1, 12)]
            assert bs[1] <= 2.0 * b0
            assert all(bs[i + 2] <= bs[i] for i in range(len(bs) - 2))
        # and fails for a < 1
        assert [n ** (-s) for n in (2,)][0] > 2.0 * (0.5 * 2.0 ** (-s - 1.0))


def test_sphere_angle():
    e1 = [1.0, 0.0, 0.0, 0.0]
    e2 = [0.0, 1.0, 0.0, 0.0]
    assert K.sphere_angle(e1, e1) == 0.0
    assert K.sphere_angle(e1, [-1.0, 0.0, 0.0, 0.0]) == pytest.approx(math.pi)
    assert K.sphere_angle(e1, e2) == pytest.approx(math.pi / 2)
    # accuracy for nearly identical vectors (acos would lose half the digits)
    eps = 1e-9
    v = np.array([1.0, eps, 0.0, 0.0])
    v /= np.linalg.norm(v)
    assert K.sphere_angle(v, e1) == pytest.approx(eps, rel=1e-6)


# ---------------------------------------------------------------------------
# gram assembly


def test_gram_symmetry_and_diagonal():
    pts = [0.0, 0.13, 0.5, 0.77]
    g = K.gram(K.PeriodicZeta(nu=1.0), pts)
    assert np.array_equal(g.values, g.values.T)
    assert np.all(np.diag(g.values) == 1.0)
    assert g.min_eigenvalue() > -1e-12


def test_gram_matches_kernel_value():
    spec = K.Matern(nu=1.5, lengthscale=0.4)
    pts = [0.0, 0.2, 0.9]
    g = K.gram(spec, pts)
    for i, p in enumerate(pts):
        for j, q in enumerate(pts):
            assert g.values[i, j] == K.kernel_value(spec, p, q)


def test_cross_gram_against_gram():
    spec = K.PeriodicZeta(nu=0.5)
    pts = [0.1, 0.3, 0.8]
    g = K.gram(spec, pts)
    c = K.cross_gram(spec, pts, pts)
    assert np.allclose(g.values, c, rtol=0, atol=0)


def test_gram_on_sphere_points():
    rng = np.random.default_rng(3)
    pts = rng.normal(size=(5, 4))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    g = K.gram(K.SphereZeta(nu=1.0, a=2.0), list(pts))
    assert np.array_equal(g.values, g.values.T)
    assert np.all(np.diag(g.values) == 1.0)
    assert g.min_eigenvalue() > -1e-9


def test_gram_rejects_bad_points():
    with pytest.raises(DomainError):
        K.gram(K.PeriodicZeta(nu=1.0), [0.1, math.nan])
    with pytest.raises(DomainError):
        K.gram(K.SphereZeta(nu=1.0), [np.ones(3)])


def test_spec_validation():
    with pytest.raises(DomainError):
        K.PeriodicZeta(nu=-1.0)
    with pytest.raises(DomainError):
        K.Matern(nu=1.0, lengthscale=-2.0)
    with pytest.raises(DomainError):
        K.PeriodicZetaDerivative(nu=1.0)
    with pytest.raises(DomainError):
        K.SphereZeta(nu=1.0, a=0.99)
