"""Logistic, half-logistic and elliptically symmetric logistic laws.

Their moments are zeta values:

* logistic       E X^(2m) = 2 (2m)! (1 - 2^(1-2m)) zeta(2m)
* half-logistic  E X^n    = 2 n! (1 - 2^(1-n)) zeta(n),  E X = 2 ln 2
* elliptic       E X^(2m) = sqrt(pi) c (2m)! / (4^m m!) (1 - 2^(-(2m-3)/2)) zeta(m - 1/2)

Sampling uses numpy's PCG64 generator seeded from an integer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from zetaroutes.errors import DomainError
from zetaroutes.quadrature import QuadratureConfig, integrate_semi_infinite
from zetaroutes.routes import zeta_euler_even
from zetaroutes.series import SeriesConfig, eta_factor, zeta_eta_accelerated

_SQRT_PI = math.sqrt(math.pi)


class Kind(str, enum.Enum):
    LOGISTIC = "logistic"
    HALF_LOGISTIC = "half_logistic"
    ELLIPTIC_LOGISTIC = "elliptic_logistic"


@dataclass(frozen=True)
class DistributionSpec:
    kind: Kind
    c: float | None = None

    def __post_init__(self):
        if self.kind is Kind.ELLIPTIC_LOGISTIC:
            if self.c is None or not self.c > 0:
                raise ValueError("elliptic_logistic needs a positive normalizing constant c")
        elif self.c is not None:
            raise ValueError(f"{self.kind.value} takes no constant")


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    n_samples: int
    seed: int


def make_distribution(kind: Kind | str, cfg: QuadratureConfig | None = None) -> DistributionSpec:
    kind = Kind(kind)
    if kind is Kind.ELLIPTIC_LOGISTIC:
        return DistributionSpec(kind, elliptic_constant(cfg))
    return DistributionSpec(kind)


# ---------------------------------------------------------------- densities


def _kernel(x: float) -> float:
    """e^-|x| / (1 + e^-|x|)^2; even, and equal to e^-x/(1+e^-x)^2 everywhere."""
    e = math.exp(-abs(x))
    return e / (1.0 + e) ** 2


def pdf(spec: DistributionSpec, x: float) -> float:
    if spec.kind is Kind.LOGISTIC:
        return _kernel(x)
    if spec.kind is Kind.HALF_LOGISTIC:
        return 2.0 * _kernel(x) if x >= 0 else 0.0
    return spec.c * _kernel(x * x)


def cdf(spec: DistributionSpec, x):
    """CDF, vectorized over numpy arrays."""
    x = np.asarray(x, dtype=float)
    if spec.kind is Kind.LOGISTIC:
        return 0.5 * (1.0 + np.tanh(0.5 * x))
    if spec.kind is Kind.HALF_LOGISTIC:
        return np.where(x > 0, np.tanh(0.5 * np.maximum(x, 0.0)), 0.0)
    grid, values = _elliptic_cdf_table(spec.c)
    half = np.interp(np.abs(x), grid, values, right=0.5)
    return 0.5 + np.sign(x) * half


@lru_cache(maxsize=4)
def _elliptic_cdf_table(c: float, upper: float = 7.0, cells: int = 7000):
    """Grid of int_0^x pdf, by 8-point Gauss-Legendre per cell (error ~1e-15)."""
    nodes, weights = np.polynomial.legendre.leggauss(8)
    edges = np.linspace(0.0, upper, cells + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1] - edges[0])
    xs = mid[:, None] + half * nodes[None, :]
    e = np.exp(-xs * xs)
    cell_mass = c * half * (weights * e / (1.0 + e) ** 2).sum(axis=1)
    return edges, np.concatenate([[0.0], np.cumsum(cell_mass)])


def elliptic_constant(cfg: QuadratureConfig | None = None) -> float:
    """c with 1/c = int_0^inf t^(-1/2) e^-t / (1 + e^-t)^2 dt.

    The obvious series for 1/c diverges, so the integral is done by
    quadrature.  ``elliptic_constant_check`` gives the u = sqrt(t) form.
    """
    return _elliptic_constant(cfg or QuadratureConfig())


@lru_cache(maxsize=8)
def _elliptic_constant(cfg: QuadratureConfig) -> float:
    def f(t: float) -> float:
        e = math.exp(-t)
        return e / (math.sqrt(t) * (1.0 + e) ** 2)

    return 1.0 / integrate_semi_infinite(f, 0.0, cfg).value


def elliptic_constant_check(cfg: QuadratureConfig | None = None) -> float:
    """c from 1/c = 2 int_0^inf e^(-u^2) / (1 + e^(-u^2))^2 du."""

    def f(u: float) -> float:
        e = math.exp(-u * u)
        return 2.0 * e / (1.0 + e) ** 2

    return 1.0 / integrate_semi_infinite(f, 0.0, cfg or QuadratureConfig()).value


# ---------------------------------------------------------------- MGF / CF


def mgf_logistic_closed(t: float) -> float:
    """E e^(tX) = pi t / sin(pi t) for |t| < 1."""
    if not abs(t) < 1:
        raise DomainError(f"logistic MGF exists only for |t| < 1, got t = {t}")
    if t == 0:
        return 1.0
    return math.pi * t / math.sin(math.pi * t)


def mgf_logistic_coefficient(n: int) -> float:
    """Coefficient of t^(2n): (2^(2n-1) - 1) zeta(2n) / 2^(2n-2)."""
    return (2.0 - 4.0 ** (1 - n)) * zeta_euler_even(n).value


def mgf_logistic_series(t: float, n_terms: int) -> float:
    """1 + sum_{n=1}^{n_terms} (2^(2n-1) - 1) zeta(2n) / 2^(2(n-1)) t^(2n)."""
    if not abs(t) < 1:
        raise DomainError(f"logistic MGF series converges only for |t| < 1, got t = {t}")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    t2 = t * t
    terms = [mgf_logistic_coefficient(n) * t2**n for n in range(n_terms, 0, -1)]
    return 1.0 + math.fsum(terms)


def mgf_logistic_quadrature(t: float, cfg: QuadratureConfig | None = None) -> float:
    """E e^(tX) by quadrature, the real line split at 0."""
    if not abs(t) < 1:
        raise DomainError(f"logistic MGF exists only for |t| < 1, got t = {t}")

    def f(x: float) -> float:
        e = math.exp(-x)
        return (math.exp((t - 1.0) * x) + math.exp(-(t + 1.0) * x)) / (1.0 + e) ** 2

    return integrate_semi_infinite(f, 0.0, cfg).value


def elliptic_cf_series(
    t: float,
    c: float,
    n_terms: int = 30,
    extra_halving: bool = False,
    series_cfg: SeriesConfig | None = None,
) -> float:
    """Partial sum of the elliptic-logistic characteristic function.

    1 + sum_{n>=1} (-1)^n c sqrt(pi) / 2^(2n) * t^(2n)/n! * (1 - 2^(-(2n-3)/2)) zeta(n - 1/2)

    ``extra_halving`` divides every term by one more factor of 2, i.e. uses
    2^(2n+1); that variant does not match the integral and exists to show it.
    """
    if t == 0:
        return 1.0
    power = 1 if extra_halving else 0
    log_t2 = 2.0 * math.log(abs(t))
    terms = []
    for n in range(1, n_terms + 1):
        s = n - 0.5
        scale = math.exp(n * log_t2 - math.lgamma(n + 1) - (2 * n + power) * math.log(2.0))
        z = zeta_eta_accelerated(s, series_cfg).value
        terms.append((-1) ** n * c * _SQRT_PI * scale * eta_factor(s) * z)
    return 1.0 + math.fsum(terms)


def elliptic_cf_quadrature(t: float, c: float, cfg: QuadratureConfig | None = None) -> float:
    """E cos(tX) = 2c int_0^inf cos(tx) e^(-x^2) / (1 + e^(-x^2))^2 dx."""

    def f(x: float) -> float:
        e = math.exp(-x * x)
        return 2.0 * c * math.cos(t * x) * e / (1.0 + e) ** 2

    return integrate_semi_infinite(f, 0.0, cfg).value


# ---------------------------------------------------------------- moments


def logistic_moment(k: int) -> float:
    """E X^k of the standard logistic law; odd orders vanish."""
    if k < 0:
        raise DomainError(f"moment order must be >= 0, got {k}")
    if k == 0:
        return 1.0
    if k % 2:
        return 0.0
    m = k // 2
    return math.factorial(k) * mgf_logistic_coefficient(m)


def halflogistic_moment(n: int) -> float:
    """E X^n: 2 ln 2 for n = 1, else 2 n! (1 - 2^(1-n)) zeta(n)."""
    if n < 1:
        raise DomainError(f"moment order must be >= 1, got {n}")
    if n == 1:
        return 2.0 * math.log(2.0)
    z = zeta_euler_even(n // 2).value if n % 2 == 0 else zeta_eta_accelerated(n).value
    return 2.0 * math.factorial(n) * (1.0 - 2.0 ** (1 - n)) * z


def elliptic_moment_even(m: int, c: float) -> float:
    """E X^(2m) of the elliptic logistic law with constant c."""
    if m < 1:
        raise DomainError(f"moment index must be >= 1, got {m}")
    s = m - 0.5
    ratio = math.factorial(2 * m) / math.factorial(m) / 4.0**m
    return _SQRT_PI * c * ratio * eta_factor(s) * zeta_eta_accelerated(s).value


def moment(spec: DistributionSpec, k: int) -> float:
    """Closed-form E X^k for any of the three laws."""
    if spec.kind is Kind.LOGISTIC:
        return logistic_moment(k)
    if spec.kind is Kind.HALF_LOGISTIC:
        return 1.0 if k == 0 else halflogistic_moment(k)
    if k == 0:
        return 1.0
    if k % 2:
        return 0.0
    return elliptic_moment_even(k // 2, spec.c)


# ---------------------------------------------------------------- sampling


def _open_uniform(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniforms strictly inside (0, 1): midpoints of a 2^53 grid."""
    return (rng.integers(0, 2**53, size=n, dtype=np.int64) + 0.5) * 2.0**-53


def logistic_quantile(p):
    p = np.asarray(p, dtype=float)
    return np.log(p) - np.log1p(-p)


def half_logistic_quantile(p):
    p = np.asarray(p, dtype=float)
    return np.log1p(p) - np.log1p(-p)


def sample(spec: DistributionSpec, seed: int, n: int) -> np.ndarray:
    """``n`` draws; identical for identical (spec.kind, seed, n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    if spec.kind is Kind.LOGISTIC:
        return logistic_quantile(_open_uniform(rng, n))
    if spec.kind is Kind.HALF_LOGISTIC:
        return half_logistic_quantile(_open_uniform(rng, n))
    # Proposal N(0, 1/2) has density proportional to e^(-x^2); target/proposal
    # is proportional to (1 + e^(-x^2))^-2, which lies in [1/4, 1).
    out = np.empty(n)
    filled = 0
    while filled < n:
        # acceptance rate is about 0.38
        batch = max(1024, 3 * (n - filled))
        x = rng.normal(0.0, math.sqrt(0.5), size=batch)
        accept = rng.random(batch) < (1.0 + np.exp(-x * x)) ** -2
        kept = x[accept][: n - filled]
        out[filled : filled + kept.size] = kept
        filled += kept.size
    return out


def mc_moment(spec: DistributionSpec, k: int, seed: int, n: int) -> McEstimate:
    """Sample mean of X^k with standard error std/sqrt(n)."""
    if n < 1000:
        raise ValueError("Monte Carlo moments need n >= 1000")
    xk = sample(spec, seed, n) ** k
    return McEstimate(float(xk.mean()), float(xk.std(ddof=1) / math.sqrt(n)), n, seed)


def ks_test(spec: DistributionSpec, seed: int, n: int):
    """One-sample Kolmogorov-Smirnov test of ``sample`` against ``cdf``."""
    from scipy import stats

    return stats.kstest(sample(spec, seed, n), lambda x: cdf(spec, x))
