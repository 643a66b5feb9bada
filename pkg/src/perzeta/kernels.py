"""Covariance functions built on the periodic zeta evaluator.

The families: the periodic power-law-spectrum kernel (unit variance,
period-rescaled), its exact nu = 0 white-noise limit, the covariance of the
derivative process, the classical Matern comparator, and the sphere-valid
variant obtained by adding a constant spectral head.  Gram-matrix assembly
evaluates each unordered pair once, so symmetry is structural.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence, Union

import numpy as np
from scipy import special as _sp

from .errors import DomainError
from .zeta_core import SeriesBudget, periodic_zeta_real, riemann_zeta

__all__ = [
    "PeriodicZeta",
    "Matern",
    "PeriodicZetaDerivative",
    "SphereZeta",
    "KernelSpec",
    "GramMatrix",
    "z_nu",
    "z_nu_derivative_cov",
    "matern",
    "sphere_kernel",
    "kernel_value",
    "gram",
    "cross_gram",
    "sphere_angle",
]

_TWO_PI = 2.0 * math.pi


@dataclasses.dataclass(frozen=True)
class PeriodicZeta:
    """Periodic power-law kernel; spectral exponent s = 1 + 2 nu."""

    nu: float
    period: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu >= 0.0):
            raise DomainError("PeriodicZeta requires finite nu >= 0")
        if not self.period > 0.0:
            raise DomainError("period must be positive")


@dataclasses.dataclass(frozen=True)
class Matern:
    nu: float
    lengthscale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu >= 0.0):
            raise DomainError("Matern requires finite nu >= 0")
        if not self.lengthscale > 0.0:
            raise DomainError("lengthscale must be positive")


@dataclasses.dataclass(frozen=True)
class PeriodicZetaDerivative:
    """Covariance of the derivative of a PeriodicZeta(nu) process."""

    nu: float
    period: float = 1.0

    def __post_init__(self):
        if not self.nu > 1.0:
            raise DomainError("derivative kernel requires nu > 1")
        if not self.period > 0.0:
            raise DomainError("period must be positive")


@dataclasses.dataclass(frozen=True)
class SphereZeta:
    """Sphere-valid (up to S^3) variant: constant head a/2^(s+1) added."""

    nu: float
    a: float = 1.0

    def __post_init__(self):
        if not self.nu > 0.0:
            raise DomainError("SphereZeta requires nu > 0")
        if not self.a >= 1.0:
            raise DomainError("sphere validity requires a >= 1")


KernelSpec = Union[PeriodicZeta, Matern, PeriodicZetaDerivative, SphereZeta]


@dataclasses.dataclass(frozen=True)
class GramMatrix:
    """Symmetric kernel matrix with its provenance."""

    values: np.ndarray
    points: tuple
    spec: KernelSpec

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.values)[0])


# ---------------------------------------------------------------------------
# scalar kernels


def z_nu(x: float, nu: float, period: float = 1.0) -> float:
    """Re F(x/period, 1+2 nu) / zeta(1+2 nu); white noise at nu = 0 exactly."""
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError("z_nu requires finite nu >= 0")
    if not period > 0.0:
        raise DomainError("period must be positive")
    lag = x / period
    if nu == 0.0:
        return 1.0 if lag % 1.0 == 0.0 else 0.0
    s = 1.0 + 2.0 * nu
    return periodic_zeta_real(lag, s) / riemann_zeta(s)


def z_nu_derivative_cov(x: float, nu: float, period: float = 1.0) -> float:
    """Cov of the derivative process: (2 pi/T)^2 Re F(x/T, 2 nu - 1)/zeta(2 nu + 1).

    Equals (2 pi/T)^2 zeta(2 nu - 1)/zeta(2 nu + 1) Z_{nu-1}(x/T); requires
    nu > 1 so the normalization is finite.
    """
    if not nu > 1.0:
        raise DomainError("derivative covariance requires nu > 1")
    if not period > 0.0:
        raise DomainError("period must be positive")
    lag = x / period
    scale = (_TWO_PI / period) ** 2 / riemann_zeta(1.0 + 2.0 * nu)
    if lag % 1.0 == 0.0:
        return scale * riemann_zeta(2.0 * nu - 1.0)
    return scale * periodic_zeta_real(lag, 2.0 * nu - 1.0)


def matern(x: float, nu: float, lengthscale: float = 1.0) -> float:
    """The Matern kernel (2/Gamma(nu)) (r/2)^nu K_nu(r), r = sqrt(2 nu)|x|/l.

    White-noise indicator at nu = 0 exactly; delegates the Bessel K factor to
    scipy.
    """
    if not (math.isfinite(x) and math.isfinite(nu) and nu >= 0.0):
        raise DomainError("matern requires finite x and nu >= 0")
    if not lengthscale > 0.0:
        raise DomainError("lengthscale must be positive")
    if nu == 0.0:
        return 1.0 if x == 0.0 else 0.0
    if x == 0.0:
        return 1.0
    r = math.sqrt(2.0 * nu) * abs(x) / lengthscale
    val = 2.0 / math.gamma(nu) * (r / 2.0) ** nu * float(_sp.kv(nu, r))
    return val


def sphere_kernel(theta: float, nu: float, a: float = 1.0) -> float:
    """Unit-variance covariance on S^3 in the great-circle distance theta.

    (a 2^-(s+1) + Re F(theta/(2 pi), s)) normalized by its theta = 0 value,
    s = 1 + 2 nu; requires a >= 1 for validity.
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError("theta must lie in [0, pi]")
    if not nu > 0.0:
        raise DomainError("sphere_kernel requires nu > 0")
    if not a >= 1.0:
        raise DomainError("sphere validity requires a >= 1")
    s = 1.0 + 2.0 * nu
    head = a * 2.0 ** (-s - 1.0)
    x = theta / _TWO_PI
    f = riemann_zeta(s) if x == 0.0 else periodic_zeta_real(x, s)
    return (head + f) / (head + riemann_zeta(s))


# ---------------------------------------------------------------------------
# Gram assembly


def sphere_angle(v: Sequence[float], w: Sequence[float]) -> float:
    """Great-circle distance between unit vectors via atan2.

    atan2(|v - (v.w) w|, v.w) stays accurate near theta = 0 and pi, where
    arccos of the dot product loses half the significant digits.
    """
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != w.shape:
        raise DomainError("sphere points must share a dimension")
    if np.array_equal(v, w):
        return 0.0
    d = float(v @ w)
    perp = float(np.linalg.norm(v - d * w))
    return math.atan2(perp, d)


def kernel_value(spec: KernelSpec, p, q) -> float:
    """Kernel evaluation for a pair of points (lags for circle kernels)."""
    if isinstance(spec, SphereZeta):
        if np.ndim(p) == 1:
            theta = sphere_angle(p, q)
        else:
            theta = abs(float(p) - float(q))
        return sphere_kernel(theta, spec.nu, spec.a)
    # even in the lag, and |p - q| makes the symmetry exact in floating point
    lag = abs(float(p) - float(q))
    if isinstance(spec, PeriodicZeta):
        return z_nu(lag, spec.nu, spec.period)
    if isinstance(spec, Matern):
        return matern(lag, spec.nu, spec.lengthscale)
    if isinstance(spec, PeriodicZetaDerivative):
        return z_nu_derivative_cov(lag, spec.nu, spec.period)
    raise DomainError(f"unknown kernel spec {spec!r}")


def _as_point_list(points) -> list:
    pts = list(points)
    if pts and np.ndim(pts[0]) == 1:
        for p in pts:
            arr = np.asarray(p, dtype=float)
            if arr.shape != (4,):
                raise DomainError("sphere points must be unit 4-vectors")
            if not np.all(np.isfinite(arr)):
                raise DomainError("points must be finite")
        return [np.asarray(p, dtype=float) for p in pts]
    for p in pts:
        if not math.isfinite(float(p)):
            raise DomainError("points must be finite")
    return [float(p) for p in pts]


def gram(spec: KernelSpec, points) -> GramMatrix:
    """Symmetric matrix of pairwise kernel values, one evaluation per pair."""
    pts = _as_point_list(points)
    n = len(pts)
    m = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            m[i, j] = m[j, i] = kernel_value(spec, pts[i], pts[j])
    return GramMatrix(values=m, points=tuple(map(_freeze, pts)), spec=spec)


def cross_gram(spec: KernelSpec, rows, cols) -> np.ndarray:
    """Rectangular kernel matrix between two point sets."""
    rp = _as_point_list(rows)
    cp = _as_point_list(cols)
    m = np.empty((len(rp), len(cp)))
    for i, p in enumerate(rp):
        for j, q in enumerate(cp):
            m[i, j] = kernel_value(spec, p, q)
    return m


def _freeze(p):
    return tuple(p) if isinstance(p, np.ndarray) else p
