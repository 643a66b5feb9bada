"""Double-precision evaluation of Re F(x, s) = sum_{n>=1} cos(2 pi n x)/n^s.

Two branches: direct summation of the defining series for s >= 10, and the
Hurwitz-zeta reflection for 0 < s < 10.  The reflection route needs careful
pole cancellation near integer s; the machinery for that (nearest-integer
splitting of trig factors, the pole-free zeta, the three-part merge of the
x^(s-1) power with the resonant series term) lives here, driven by Taylor
coefficient tables generated once by :mod:`perzeta.oracle` and shipped as
package data.

All functions are pure; the coefficient tables are immutable after load.
"""

from __future__ import annotations

import dataclasses
import functools
import math
import pathlib

from .errors import ConvergenceError, DivergenceError, DomainError, PoleError

__all__ = [
    "SeriesBudget",
    "ReducedArgument",
    "SDecomposition",
    "CoefficientTables",
    "EvalStats",
    "S_SPLIT",
    "EPS",
    "default_tables",
    "reduce_argument",
    "decompose_s",
    "direct_series_real",
    "hurwitz_sum_pair",
    "riemann_zeta",
    "zeta_minus_zeta0",
    "gamma_ratio_minus_one",
    "periodic_zeta_real",
    "periodic_zeta_real_with_stats",
]

#: branch boundary: the direct series owns s >= S_SPLIT, the Hurwitz
#: reflection owns s < S_SPLIT.
S_SPLIT = 10.0

#: the nudge applied to exactly-integer s (ULP of 1).
EPS = 2.0 ** -52

#: magnitude floor used by the relative stop rules, so a partial sum sitting
#: on a zero crossing cannot stall termination.
_STOP_FLOOR = 2.0 ** -30

_TWO_PI = 2.0 * math.pi


@dataclasses.dataclass(frozen=True)
class SeriesBudget:
    """Truncation policy for the two infinite series."""

    max_terms: int = 64
    rel_tol: float = 2.0 ** -53

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError("rel_tol must be in (0, 1)")


@dataclasses.dataclass(frozen=True)
class ReducedArgument:
    """x folded into [0, 1/2]; Re F is even and 1-periodic in x."""

    x_reduced: float


@dataclasses.dataclass(frozen=True)
class SDecomposition:
    """s split against its nearest odd (q, u) and even (m_even, r_even) integers.

    s = 1 + q + u with q even, and s = m_even + r_even.  |u| and |r_even| are
    at most 1 each; at least one of them is <= 1/2.
    """

    s: float
    q: int
    u: float
    m_even: int
    r_even: float


@dataclasses.dataclass(frozen=True)
class CoefficientTables:
    """Immutable Taylor/weight tables precomputed by the oracle.

    ``zeta_tilde_coeffs``: Taylor coefficients about 0 of
    zeta(s) - 1/(s-1).  ``polygamma_at_1`` / ``polygamma_at_1_plus_q[q]``:
    Taylor coefficients of log Gamma(1+u) about 0 and of
    log Gamma(1+q+u) - log Gamma(1+q) about u = 0 (entry k is
    psi_{k-1}(.) / k!).  ``em_weights``: B_{2k}/(2k)! for the internal
    Euler-Maclaurin Riemann zeta.
    """

    zeta_tilde_coeffs: tuple
    polygamma_at_1: tuple
    polygamma_at_1_plus_q: dict
    em_weights: tuple


@dataclasses.dataclass
class EvalStats:
    """Instrumentation for the term-budget acceptance check."""

    branch: str = ""
    terms: int = 0


def _parse_tables(text: str) -> CoefficientTables:
    sections: dict = {}
    current = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            current = line[1:-1]
            sections[current] = []
        else:
            sections[current].append(float(line))
    by_q = {}
    for name, vals in sections.items():
        if name.startswith("log_gamma_taylor_at_1_plus_q"):
            q = int(name.split("q=")[1])
            by_q[q] = tuple(vals)
    return CoefficientTables(
        zeta_tilde_coeffs=tuple(sections["zeta_tilde_taylor_at_0"]),
        polygamma_at_1=tuple(sections["log_gamma_taylor_at_1"]),
        polygamma_at_1_plus_q=by_q,
        em_weights=tuple(sections["euler_maclaurin_weights"]),
    )


@functools.cache
def default_tables() -> CoefficientTables:
    """The tables shipped as package data (see ``python -m perzeta.oracle``)."""
    path = pathlib.Path(__file__).parent / "data" / "coefficients.txt"
    return _parse_tables(path.read_text())


# ---------------------------------------------------------------------------
# argument handling


def reduce_argument(x: float) -> ReducedArgument:
    """Fold x into [0, 1/2] using periodicity and evenness of Re F."""
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    r = x % 1.0
    if r > 0.5:
        r = 1.0 - r
    return ReducedArgument(r)


def decompose_s(s: float) -> SDecomposition:
    if not math.isfinite(s):
        raise DomainError(f"s must be finite, got {s!r}")
    m_odd = 2 * math.floor((s + 1.0) / 2.0) - 1  # nearest odd, ties downward
    if s - m_odd > 1.0:
        m_odd += 2
    m_even = 2 * round(s / 2.0)
    return SDecomposition(
        s=s, q=m_odd - 1, u=s - m_odd, m_even=m_even, r_even=s - m_even
    )


def _sin_half_pi(s: float, dec: SDecomposition) -> float:
    """sin(pi s / 2) with the zero taken at the nearest even integer."""
    sign = -1.0 if (dec.m_even // 2) % 2 else 1.0
    return sign * math.sin(math.pi * dec.r_even / 2.0)


def _cos_half_pi(s: float, dec: SDecomposition) -> float:
    """cos(pi s / 2) with the zero taken at the nearest odd integer."""
    m = dec.q + 1  # nearest odd integer
    sign = -1.0 if ((m - 1) // 2) % 2 == 0 else 1.0
    return sign * math.sin(math.pi * dec.u / 2.0)


def _cos_two_pi(y: float) -> float:
    """cos(2 pi y) for y in [0, 1) with exact quadrant reduction.

    Folding happens on t = 2y before pi is ever multiplied in, so the zeros
    at quarter-integer y are exact and the result is relatively accurate
    everywhere (a plain cos(2*pi*y) loses ~6e-17 absolutely at y = 1/4).
    """
    t = 2.0 * y
    if t >= 1.0:
        t = 2.0 - t
    if t <= 0.25:
        return math.cos(math.pi * t)
    if t <= 0.75:
        return math.sin(math.pi * (0.5 - t))
    return -math.cos(math.pi * (1.0 - t))


class _Neumaier:
    """Compensated accumulator; keeps long sums below ~1 ULP of error."""

    __slots__ = ("s", "c")

    def __init__(self):
        self.s = 0.0
        self.c = 0.0

    def add(self, v: float):
        t = self.s + v
        if abs(self.s) >= abs(v):
            self.c += (self.s - t) + v
        else:
            self.c += (v - t) + self.s
        self.s = t

    @property
    def value(self) -> float:
        return self.s + self.c


# ---------------------------------------------------------------------------
# Riemann zeta (double precision, <= 2 ULP)


def riemann_zeta(s: float, tables: CoefficientTables | None = None) -> float:
    """zeta(s) for real s != 1.

    Euler-Maclaurin for s >= 1/2; the reflection formula below, with the
    sine factor split against the nearest even integer so the trivial zeros
    at negative even s come out exact to relative accuracy.
    """
    if not math.isfinite(s):
        raise DomainError(f"s must be finite, got {s!r}")
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if tables is None:
        tables = default_tables()
    if s >= 0.5:
        return _zeta_em(s, tables)
    if abs(s) <= 0.5:
        # reflection would meet the zeta(1-s) pole here; the pole-free-zeta
        # Taylor table covers |s| <= 1/2 directly
        return zeta_minus_zeta0(-s, tables) - 0.5
    t = 1.0 - s
    dec = decompose_s(s)
    sin_term = _sin_half_pi(s, dec)
    return (
        2.0
        * math.pow(_TWO_PI, s - 1.0)
        * sin_term
        * math.gamma(t)
        * _zeta_em(t, tables)
    )


def _zeta_em(s: float, tables: CoefficientTables) -> float:
    """Euler-Maclaurin zeta for s >= 1/2, s != 1."""
    if s > 55.0:
        # 2^-s already below the last bit of 1; three terms are exact enough
        return 1.0 + math.pow(2.0, -s) + math.pow(3.0, -s)
    N = 24
    acc = _Neumaier()
    for k in range(1, N):
        acc.add(math.pow(k, -s))
    acc.add(math.pow(N, 1.0 - s) / (s - 1.0))
    npow = math.pow(N, -s)
    acc.add(0.5 * npow)
    # correction terms B_2j/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
    poch = s
    bpow = npow * N  # N^{1-s}, running N^{-s-2j+1}
    inv_n2 = 1.0 / (N * N)
    for j, w in enumerate(tables.em_weights, start=1):
        bpow *= inv_n2
        term = w * poch * bpow
        acc.add(term)
        if abs(term) <= 2.0 ** -75 * abs(acc.s):
            break
        poch *= (s + 2 * j - 1) * (s + 2 * j)
    return acc.value


# ---------------------------------------------------------------------------
# pole-cancellation helpers


def zeta_minus_zeta0(u: float, tables: CoefficientTables | None = None) -> float:
    """zeta(-u) - zeta(0) with full relative accuracy as u -> 0 (|u| <= 1/2)."""
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    if abs(u) > 0.5:
        raise DomainError("zeta_minus_zeta0 requires |u| <= 1/2")
    if tables is None:
        tables = default_tables()
    c = tables.zeta_tilde_coeffs
    # zeta_tilde(-u) - zeta_tilde(0), Horner on the k >= 1 part
    acc = 0.0
    for k in range(len(c) - 1, 0, -1):
        acc = acc * (-u) + c[k]
    return acc * (-u) + u / (1.0 + u)


def gamma_ratio_minus_one(
    q: int, u: float, tables: CoefficientTables | None = None
) -> float:
    """Gamma(1+q+u)/(Gamma(1+q) Gamma(1+u)) - 1, accurate as u -> 0.

    expm1 of the difference of the two log-gamma Taylor series; q must be one
    of the tabulated even values {0, 2, 4, 6, 8}.
    """
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    if abs(u) > 0.5:
        raise DomainError("gamma_ratio_minus_one requires |u| <= 1/2")
    if tables is None:
        tables = default_tables()
    if q not in tables.polygamma_at_1_plus_q:
        raise DomainError(f"q={q} outside the tabulated set")
    if q == 0:
        return 0.0
    a = tables.polygamma_at_1_plus_q[q]
    b = tables.polygamma_at_1
    n = max(len(a), len(b))
    acc = 0.0
    for k in range(n - 1, 0, -1):
        ak = a[k] if k < len(a) else 0.0
        bk = b[k] if k < len(b) else 0.0
        acc = acc * u + (ak - bk)
    return math.expm1(acc * u)


# ---------------------------------------------------------------------------
# the two series


def direct_series_real(
    x: float,
    s: float,
    budget: SeriesBudget = SeriesBudget(),
    stats: EvalStats | None = None,
) -> float:
    """Direct summation of sum cos(2 pi n x)/n^s for s > 1.

    Stops at the first N whose integral tail bound N^(1-s)/(s-1) is below
    rel_tol times the partial-sum magnitude (floored at 2^-30).  Where the
    partial sum is far below the series' global scale (|F| can be ~2^-s while
    the per-s maximum is ~zeta(s) >= 1), full relative accuracy can cost well
    over the ~50-term budget near s = 10, so after 48 terms a stop at
    the global scale (tail bound <= rel_tol, i.e. ~ulp of the maximum) is
    accepted instead.
    """
    if not (math.isfinite(x) and math.isfinite(s)):
        raise DomainError("x and s must be finite")
    if s <= 1.0:
        raise DomainError("direct series requires s > 1")
    acc = _Neumaier()
    n = 0
    while n < budget.max_terms:
        n += 1
        acc.add(_cos_two_pi(math.fmod(n * x, 1.0)) * math.pow(n, -s))
        bound = math.pow(n, 1.0 - s) / (s - 1.0)
        if bound <= budget.rel_tol * max(abs(acc.s), _STOP_FLOOR) or (
            n >= 48 and bound <= budget.rel_tol
        ):
            if stats is not None:
                stats.terms = n
            return acc.value
    raise ConvergenceError(
        f"direct series not converged in {budget.max_terms} terms "
        f"at (x={x}, s={s})",
        achieved_bound=math.pow(budget.max_terms, 1.0 - s) / (s - 1.0),
    )


def hurwitz_sum_pair(
    x_reduced: float,
    s: float,
    budget: SeriesBudget = SeriesBudget(),
    tables: CoefficientTables | None = None,
    stats: EvalStats | None = None,
) -> float:
    """zeta(1-s, x) + zeta(1-s, 1-x) for x in (0, 1/2], 0 < s < 10.

    Evaluated as x^(s-1) + 2 sum_{even n} (1-s)_n / n! zeta(n+1-s) x^n.  When
    s is within 1/2 of an odd integer 1+q, the external power is merged with
    the resonant n = q term through the expm1 / pole-free-zeta /
    log-gamma-ratio decomposition, so the cancellation is carried out to full
    relative accuracy.
    """
    x = x_reduced
    if not (0.0 < x <= 0.5):
        raise DomainError("hurwitz_sum_pair requires x in (0, 1/2]")
    # Valid past the dispatch split so the two branches can be compared on
    # an overlap band.
    if not 0.0 < s <= S_SPLIT + 2.5:
        raise DomainError(f"hurwitz_sum_pair requires 0 < s <= {S_SPLIT + 2.5}")
    if tables is None:
        tables = default_tables()
    dec = decompose_s(s)
    q, u = dec.q, dec.u
    merged = q >= 0 and abs(u) <= 0.5

    acc = _Neumaier()
    if not merged:
        acc.add(math.pow(x, s - 1.0))

    lx = math.log(x)
    coef = 1.0  # (1-s)_n / n!
    xpow = 1.0  # x^n
    x2 = x * x
    n = 0
    terms = 0
    largest = 0.0
    while terms < budget.max_terms:
        terms += 1
        if merged and n == q:
            gm1 = gamma_ratio_minus_one(q, u, tables)
            zmz0 = zeta_minus_zeta0(u, tables)
            term = xpow * (
                math.expm1(u * lx) + 2.0 * (1.0 + gm1) * zmz0 - gm1
            )
        else:
            term = 2.0 * coef * riemann_zeta((n + 1.0) - s, tables) * xpow
        acc.add(term)
        largest = max(largest, abs(term))
        # geometric decay (ratio <= x^2 <= 1/4) holds once n is past both the
        # merged index and s itself; only then is the stop test meaningful.
        # the anti-stall floor scales with the largest term: near odd s every
        # term is O(u) and the sum must stay relatively accurate at that scale
        if n > q and n > s and abs(term) <= budget.rel_tol * max(
            abs(acc.s), _STOP_FLOOR * largest
        ):
            if stats is not None:
                stats.terms = terms
            return acc.value
        # (1-s)_{n+2}/(n+2)! from (1-s)_n/n!; factors written as
        # (integer - s) so each is correctly rounded even for s near integers
        coef *= ((n + 1.0) - s) * ((n + 2.0) - s) / ((n + 1.0) * (n + 2.0))
        xpow *= x2
        n += 2
    raise ConvergenceError(
        f"Hurwitz series not converged in {budget.max_terms} terms "
        f"at (x={x}, s={s})"
    )


# ---------------------------------------------------------------------------
# top-level dispatch


def periodic_zeta_real(
    x: float,
    s: float,
    budget: SeriesBudget = SeriesBudget(),
    tables: CoefficientTables | None = None,
) -> float:
    """Re F(x, s) for s > 0 (x mod 1 != 0 required when s <= 1)."""
    value, _ = periodic_zeta_real_with_stats(x, s, budget, tables)
    return value


def periodic_zeta_real_with_stats(
    x: float,
    s: float,
    budget: SeriesBudget = SeriesBudget(),
    tables: CoefficientTables | None = None,
) -> tuple[float, EvalStats]:
    """Re F(x, s) plus branch/term-count instrumentation."""
    if not math.isfinite(s):
        raise DomainError(f"s must be finite, got {s!r}")
    if s <= 0.0:
        raise DomainError("periodic_zeta_real requires s > 0")
    if tables is None:
        tables = default_tables()
    stats = EvalStats()
    xr = reduce_argument(x).x_reduced
    if xr == 0.0:
        if s > 1.0:
            stats.branch = "zeta"
            return riemann_zeta(s, tables), stats
        raise DivergenceError(f"F(x, s) diverges at integer x with s={s} <= 1")
    if s == math.floor(s):
        s = s * (1.0 + EPS)
    if s >= S_SPLIT:
        stats.branch = "direct"
        return direct_series_real(xr, s, budget, stats), stats
    stats.branch = "hurwitz"
    h = hurwitz_sum_pair(xr, s, budget, tables, stats)
    dec = decompose_s(s)
    # Gamma(1-s) sin(pi s/2) == pi / (2 cos(pi s/2) Gamma(s)) by reflection;
    # the right-hand side is pole-free across even s and carries the odd-s
    # zero/pole pair inside the exactly-computed cosine
    prefactor = (
        math.pow(_TWO_PI, s - 1.0)
        * math.pi
        / (2.0 * _cos_half_pi(s, dec) * math.gamma(s))
    )
    return prefactor * h, stats
