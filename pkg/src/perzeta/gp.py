"""Minimal Gaussian-process layer over the circle kernels.

Two entry points: `sample_prior` draws truncated Fourier-series paths whose
covariance converges to the periodic power-law kernel, and `fit_predict`
performs exact GP regression with a Cholesky factorization guarded by a
jitter ladder.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Optional, Sequence

import numpy as np

from .errors import ConditioningError, DomainError
from .kernels import KernelSpec, PeriodicZeta, cross_gram, gram
from .zeta_core import riemann_zeta

__all__ = ["Dataset", "PosteriorResult", "sample_prior", "fit_predict", "JITTER_LADDER"]

_TWO_PI = 2.0 * math.pi

# Relative jitter levels tried in order when the Cholesky factorization fails.
JITTER_LADDER = (0.0, 1e-12, 1e-10, 1e-8, 1e-6)


@dataclasses.dataclass(frozen=True)
class Dataset:
    """Observations y at inputs x with homoscedastic noise variance."""

    x: np.ndarray
    y: np.ndarray
    noise_variance: float = 0.0

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if x.ndim != 1 or y.shape != x.shape:
            raise DomainError("x and y must be 1-d arrays of equal length")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise DomainError("observations must be finite")
        if not self.noise_variance >= 0.0:
            raise DomainError("noise variance must be nonnegative")


@dataclasses.dataclass(frozen=True)
class PosteriorResult:
    """Posterior mean/variance at the query points plus fit diagnostics."""

    x: np.ndarray
    mean: np.ndarray
    variance: np.ndarray
    log_marginal_likelihood: float
    jitter: float


def sample_prior(
    xs: Sequence[float],
    nu: float,
    truncation: int = 512,
    seed: Optional[int] = None,
    period: float = 1.0,
) -> np.ndarray:
    """Draw one path of the random Fourier series with spectrum n^-(1+2 nu).

    sum_n n^-(1/2+nu) (c_n cos(2 pi n x/T) + s_n sin(2 pi n x/T)) with
    independent standard normal c_n, s_n, rescaled to unit variance of the
    untruncated series.  Its covariance is the truncated Z_nu kernel.
    """
    if not (math.isfinite(nu) and nu > 0.0):
        raise DomainError("sample_prior requires nu > 0")
    if truncation < 1:
        raise DomainError("truncation must be a positive integer")
    if not period > 0.0:
        raise DomainError("period must be positive")
    xs = np.asarray(xs, dtype=float)
    rng = np.random.default_rng(seed)
    s = 1.0 + 2.0 * nu
    n = np.arange(1, truncation + 1)
    amp = n ** (-0.5 * s)
    c = rng.standard_normal(truncation)
    d = rng.standard_normal(truncation)
    phase = _TWO_PI * np.outer(xs, n) / period
    path = np.cos(phase) @ (amp * c) + np.sin(phase) @ (amp * d)
    return path / math.sqrt(riemann_zeta(s))


def _chol_with_jitter(k: np.ndarray):
    max_diag = float(np.max(np.diag(k)))
    tried = []
    for level in JITTER_LADDER:
        jitter = level * max_diag
        try:
            chol = np.linalg.cholesky(k + jitter * np.eye(k.shape[0]))
            return chol, jitter
        except np.linalg.LinAlgError:
            tried.append(jitter)
    raise ConditioningError(
        f"covariance matrix is not positive definite after jitter up to {tried[-1]:g}",
        jitter_ladder=tuple(tried),
    )


def fit_predict(
    data: Dataset,
    xs: Sequence[float],
    spec: Optional[KernelSpec] = None,
    nu: float = 1.0,
) -> PosteriorResult:
    """Exact GP regression: posterior mean/variance at xs and the evidence.

    Uses `spec` if given, otherwise PeriodicZeta(nu).  Variance is clamped at
    zero so roundoff cannot produce negative values.
    """
    if spec is None:
        spec = PeriodicZeta(nu=nu)
    xs = np.asarray(xs, dtype=float)
    n = data.x.size
    k = gram(spec, data.x).values + data.noise_variance * np.eye(n)
    chol, jitter = _chol_with_jitter(k)
    alpha = np.linalg.solve(chol.T, np.linalg.solve(chol, data.y))
    k_star = cross_gram(spec, xs, data.x)
    mean = k_star @ alpha
    v = np.linalg.solve(chol, k_star.T)
    prior_var = np.array([gram(spec, [x]).values[0, 0] for x in xs])
    variance = np.maximum(prior_var - np.sum(v * v, axis=0), 0.0)
    lml = -0.5 * float(data.y @ alpha) - float(np.sum(np.log(np.diag(chol)))) - 0.5 * n * math.log(
        2.0 * math.pi
    )
    return PosteriorResult(
        x=xs,
        mean=mean,
        variance=variance,
        log_marginal_likelihood=lml,
        jitter=jitter,
    )
