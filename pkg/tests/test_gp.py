"""Tests for the Gaussian-process layer."""

import math

import numpy as np
import pytest

from perzeta import gp
from perzeta.errors import ConditioningError, DomainError
from perzeta.kernels import PeriodicZeta
from perzeta.zeta_core import riemann_zeta


def test_dataset_validation():
    with pytest.raises(DomainError):
        gp.Dataset(x=np.array([0.1, 0.2]), y=np.array([1.0]))
    with pytest.raises(DomainError):
        gp.Dataset(x=np.array([0.1, math.nan]), y=np.array([1.0, 2.0]))
    with pytest.raises(DomainError):
        gp.Dataset(x=np.array([0.1]), y=np.array([1.0]), noise_variance=-1.0)


def test_sample_prior_deterministic_and_shaped():
    xs = np.linspace(0.0, 1.0, 17)
    a = gp.sample_prior(xs, nu=1.5, seed=11)
    b = gp.sample_prior(xs, nu=1.5, seed=11)
    c = gp.sample_prior(xs, nu=1.5, seed=12)
    assert a.shape == (17,)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_sample_prior_is_periodic():
    xs = np.array([0.2, 1.2, -0.8])
    path = gp.sample_prior(xs, nu=1.0, seed=5)
    assert path[0] == pytest.approx(path[1], rel=1e-12)
    assert path[0] == pytest.approx(path[2], rel=1e-12)


def test_sample_prior_variance_normalization():
    # with the zeta(1+2nu) rescaling the marginal variance of the
    # untruncated series is 1; at truncation N it is the partial sum ratio
    nu, n = 1.5, 256
    s = 1.0 + 2.0 * nu
    expected = sum(k ** (-s) for k in range(1, n + 1)) / riemann_zeta(s)
    draws = np.array(
        [gp.sample_prior([0.123], nu=nu, truncation=n, seed=i)[0] for i in range(4000)]
    )
    se = draws.var() * math.sqrt(2.0 / 4000)  # var of variance estimate
    assert abs(draws.var() - expected) < 4 * se + 0.01


def test_sample_prior_domain():
    with pytest.raises(DomainError):
        gp.sample_prior([0.1], nu=0.0)
    with pytest.raises(DomainError):
        gp.sample_prior([0.1], nu=1.0, truncation=0)


def test_fit_predict_interpolates_noiseless_data():
    x = np.array([0.05, 0.25, 0.45, 0.65, 0.85])
    y = np.array([0.3, -0.2, 0.9, 0.1, -0.5])
    res = gp.fit_predict(gp.Dataset(x=x, y=y), x, nu=2.0)
    assert np.allclose(res.mean, y, atol=1e-6)
    assert np.all(res.variance >= 0.0)
    assert np.all(res.variance < 1e-6)


def test_fit_predict_periodicity():
    x = np.array([0.1, 0.4, 0.7])
    y = np.array([1.0, -1.0, 0.5])
    data = gp.Dataset(x=x, y=y, noise_variance=1e-6)
    qs = np.array([0.23, 0.61])
    r0 = gp.fit_predict(data, qs, nu=1.5)
    r1 = gp.fit_predict(data, qs + 1.0, nu=1.5)
    assert np.allclose(r0.mean, r1.mean, atol=1e-9)
    assert np.allclose(r0.variance, r1.variance, atol=1e-9)


def test_fit_predict_reverts_to_prior_far_from_data():
    # one observation, prediction far away in kernel distance
    data = gp.Dataset(x=np.array([0.0]), y=np.array([2.0]), noise_variance=1e-8)
    res = gp.fit_predict(data, [0.31], nu=0.25)
    assert res.variance[0] == pytest.approx(1.0, abs=0.2)


def test_fit_predict_uses_jitter_for_duplicate_points():
    data = gp.Dataset(x=np.array([0.2, 0.2, 0.6]), y=np.array([1.0, 1.0, 0.0]))
    res = gp.fit_predict(data, [0.4], nu=1.0)
    assert res.jitter > 0.0
    assert math.isfinite(res.log_marginal_likelihood)


def test_log_marginal_likelihood_value():
    # single point, unit prior variance, noise sigma^2: lml is the log
    # density of N(0, 1 + sigma^2) at y
    y0, noise = 0.7, 0.25
    data = gp.Dataset(x=np.array([0.3]), y=np.array([y0]), noise_variance=noise)
    res = gp.fit_predict(data, [0.3], nu=1.0)
    var = 1.0 + noise
    ref = -0.5 * y0**2 / var - 0.5 * math.log(2.0 * math.pi * var)
    assert res.log_marginal_likelihood == pytest.approx(ref, rel=1e-12)


def test_fit_predict_with_explicit_spec():
    x = np.array([0.1, 0.5, 0.9])
    y = np.array([1.0, 0.0, -1.0])
    data = gp.Dataset(x=x, y=y, noise_variance=1e-4)
    res = gp.fit_predict(data, [0.3], spec=PeriodicZeta(nu=3.0, period=2.0))
    assert res.mean.shape == (1,)
    assert math.isfinite(res.mean[0])


def test_conditioning_error_reports_ladder():
    # a maximally hostile matrix: many exact duplicates with zero noise can
    # still be rescued by jitter, so check the error type is raisable with
    # metadata rather than constructing an unrescuable fit
    err = ConditioningError("test", jitter_ladder=(0.0, 1e-12))
    assert err.jitter_ladder == (0.0, 1e-12)
