"""Direct series for zeta: Dirichlet sum with tail correction, accelerated eta sum."""

from __future__ import annotations

import math
from dataclasses import dataclass

from zetaroutes.errors import DomainError, PoleProximityError
from zetaroutes.quadrature import ValueWithError

_EPS = 2.220446049250313e-16
_LN2 = math.log(2.0)
POLE_GUARD = 1e-9


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-15
    max_terms: int = 10**6
    eta_terms: int = 60

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1 or self.eta_terms < 1:
            raise ValueError("term counts must be positive")


def eta_factor(s: float) -> float:
    """1 - 2^(1-s), accurate near s = 1."""
    return -math.expm1((1.0 - s) * _LN2)


def _check_eta_domain(s: float) -> None:
    if not s > 0:
        raise DomainError(f"eta form needs s > 0, got s = {s}")
    if abs(s - 1.0) <= POLE_GUARD:
        raise PoleProximityError(
            f"s = {s} is within {POLE_GUARD:g} of the pole at s = 1"
        )


def zeta_dirichlet(s: float, cfg: SeriesConfig | None = None) -> ValueWithError:
    """Sum n^-s for n < N and add the Euler-Maclaurin tail from N onward.

    The tail keeps the integral, the half end term and the first derivative
    correction.  Since every even derivative of x^-s is positive, the
    remainder is bounded by the next correction, s(s+1)(s+2) N^(-s-3) / 720,
    which is reported as the error.
    """
    cfg = cfg or SeriesConfig()
    if not s > 1:
        raise DomainError(f"Dirichlet series needs s > 1, got s = {s}")
    poly = s * (s + 1.0) * (s + 2.0) / 720.0
    n_needed = math.ceil((poly / cfg.tol) ** (1.0 / (s + 3.0)))
    # keep the correction bound below the plain tail bound N^(1-s)/(s-1)
    n_tail = math.ceil(((s - 1.0) * poly) ** 0.25)
    n = max(2, min(max(n_needed, n_tail), cfg.max_terms))
    head = math.fsum(k**-s for k in range(n - 1, 0, -1))
    tail = n ** (1.0 - s) / (s - 1.0) + 0.5 * n**-s + s * n ** (-s - 1.0) / 12.0
    value = head + tail
    bound = poly * n ** (-s - 3.0)
    err = bound + 4.0 * _EPS * value
    return ValueWithError(value, err, evaluations=n, converged=bound <= cfg.tol)


def alternating_sum_accelerated(terms, n: int) -> tuple[float, float]:
    """Sum (-1)^k a_k for k >= 0 with the Chebyshev-weighted scheme.

    ``terms(k)`` returns a_k.  For a_k that are moments of a positive measure
    on [0, 1] the truncation error is at most 2 a_0 / (3 + sqrt 8)^n.
    Returns (sum, rounding-error estimate).
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = []
    for k in range(n):
        c = b - c
        acc.append(c * terms(k))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    total = math.fsum(acc) / d
    rounding = 4.0 * _EPS * math.fsum(abs(v) for v in acc) / d
    return total, rounding


def alternating_sum_euler(terms, n: int) -> tuple[float, float]:
    """Repeated pairwise averaging of the partial sums (Euler transform).

    Slower than the Chebyshev scheme (error ~ 2^-n); kept as an independent
    check.  Returns (sum, difference of the last two averaged values).
    """
    partial = []
    acc = 0.0
    for k in range(n + 1):
        acc += terms(k) if k % 2 == 0 else -terms(k)
        partial.append(acc)
    while len(partial) > 2:
        partial = [0.5 * (x + y) for x, y in zip(partial, partial[1:])]
    return 0.5 * (partial[0] + partial[1]), abs(partial[1] - partial[0])


def zeta_eta_accelerated(s: float, cfg: SeriesConfig | None = None) -> ValueWithError:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) with eta summed by Chebyshev acceleration."""
    cfg = cfg or SeriesConfig()
    _check_eta_domain(s)
    n = min(cfg.eta_terms, cfg.max_terms)
    eta, rounding = alternating_sum_accelerated(lambda k: (k + 1.0) ** -s, n)
    truncation = 2.0 / (3.0 + math.sqrt(8.0)) ** n
    factor = eta_factor(s)
    value = eta / factor
    err = (truncation + rounding) / abs(factor) + 4.0 * _EPS * abs(value)
    return ValueWithError(value, err, evaluations=n, converged=truncation <= cfg.tol)


def zeta_eta_euler(s: float, n: int = 80) -> ValueWithError:
    """zeta(s) via the Euler-transformed eta series; reference only."""
    _check_eta_domain(s)
    eta, err = alternating_sum_euler(lambda k: (k + 1.0) ** -s, n)
    factor = eta_factor(s)
    value = eta / factor
    return ValueWithError(value, err / abs(factor) + 4.0 * _EPS * abs(value), n)


def odd_denominator_sum(s: float, cfg: SeriesConfig | None = None) -> ValueWithError:
    """sum_{n>=1} (2n-1)^-s, with the same tail treatment as ``zeta_dirichlet``.

    Equals (1 - 2^-s) zeta(s).
    """
    cfg = cfg or SeriesConfig()
    if not s > 1:
        raise DomainError(f"odd-denominator series needs s > 1, got s = {s}")
    # f(x) = (2x-1)^-s sampled at integers; derivatives pick up powers of 2.
    poly = 8.0 * s * (s + 1.0) * (s + 2.0) / 720.0
    n = max(2, min(math.ceil((poly / cfg.tol) ** (1.0 / (s + 3.0))), cfg.max_terms))
    m = 2 * n - 1
    head = math.fsum((2 * k - 1) ** -s for k in range(n - 1, 0, -1))
    tail = m ** (1.0 - s) / (2.0 * (s - 1.0)) + 0.5 * m**-s + 2.0 * s * m ** (-s - 1.0) / 12.0
    bound = poly * m ** (-s - 3.0)
    value = head + tail
    return ValueWithError(value, bound + 4.0 * _EPS * value, n, bound <= cfg.tol)
