"""Periodic zeta function evaluation and periodic covariance kernels.

The core routine computes Re F(x, s) = sum_{n >= 1} cos(2 pi n x) / n^s to
near machine precision for all s > 0 via a two-branch algorithm: a direct
cosine series for large s and a Hurwitz-zeta reflection for small s.  On top
of it sit the normalized periodic covariance kernels Z_nu, the derivative
process covariance, a Matern comparator, a sphere-valid variant, and a
minimal Gaussian-process regression layer.  An independent mpmath oracle
(`perzeta.oracle`) backs the accuracy claims.
"""

from .errors import (
    ConditioningError,
    ConvergenceError,
    DivergenceError,
    DomainError,
    OracleConfigError,
    PerzetaError,
    PoleError,
)
from .gp import Dataset, PosteriorResult, fit_predict, sample_prior
from .kernels import (
    GramMatrix,
    KernelSpec,
    Matern,
    PeriodicZeta,
    PeriodicZetaDerivative,
    SphereZeta,
    cross_gram,
    gram,
    kernel_value,
    matern,
    sphere_angle,
    sphere_kernel,
    z_nu,
    z_nu_derivative_cov,
)
from .zeta_core import (
    EvalStats,
    SeriesBudget,
    periodic_zeta_real,
    periodic_zeta_real_with_stats,
    riemann_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core evaluation
    "periodic_zeta_real",
    "periodic_zeta_real_with_stats",
    "riemann_zeta",
    "SeriesBudget",
    "EvalStats",
    # kernels
    "z_nu",
    "z_nu_derivative_cov",
    "matern",
    "sphere_kernel",
    "kernel_value",
    "gram",
    "cross_gram",
    "sphere_angle",
    "PeriodicZeta",
    "Matern",
    "PeriodicZetaDerivative",
    "SphereZeta",
    "KernelSpec",
    "GramMatrix",
    # Gaussian processes
    "Dataset",
    "PosteriorResult",
    "sample_prior",
    "fit_predict",
    # errors
    "PerzetaError",
    "DomainError",
    "DivergenceError",
    "PoleError",
    "ConvergenceError",
    "ConditioningError",
    "OracleConfigError",
]
