"""Independent evaluation routes for zeta and the cross-route comparator."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping

from zetaroutes.bernoulli import DEFAULT_CAPACITY, bernoulli_number, bernoulli_polynomial
from zetaroutes.errors import ConfigurationError, DomainError, PoleProximityError
from zetaroutes.quadrature import (
    QuadratureConfig,
    ValueWithError,
    integrate_finite,
    integrate_semi_infinite,
)
from zetaroutes.series import (
    POLE_GUARD,
    SeriesConfig,
    eta_factor,
    zeta_dirichlet,
    zeta_eta_accelerated,
)

_EPS = 2.220446049250313e-16
# Relative accuracy claimed for gamma_real on (0, 40].
GAMMA_REL_ERR = 1e-13
COTANGENT_PATCH_RADIUS = 1e-8
HALFINT_CHECK_TOL = 1e-7


class RouteId(str, enum.Enum):
    # Declaration order is the report order.
    EULER_EVEN = "euler_even"
    INTEGRAL_GENERAL = "integral_general"
    INTEGRAL_POSINT = "integral_posint"
    INTEGRAL_HALFINT = "integral_halfint"
    COTANGENT_ODD = "cotangent_odd"
    ETA_SERIES = "eta_series"
    DIRICHLET_SERIES = "dirichlet_series"


ROUTE_ALIASES = {
    "euler": RouteId.EULER_EVEN,
    "general": RouteId.INTEGRAL_GENERAL,
    "posint": RouteId.INTEGRAL_POSINT,
    "halfint": RouteId.INTEGRAL_HALFINT,
    "cotangent": RouteId.COTANGENT_ODD,
    "eta": RouteId.ETA_SERIES,
    "dirichlet": RouteId.DIRICHLET_SERIES,
}


def parse_route(name: str) -> RouteId:
    if name in ROUTE_ALIASES:
        return ROUTE_ALIASES[name]
    try:
        return RouteId(name)
    except ValueError:
        valid = sorted({*ROUTE_ALIASES, *(r.value for r in RouteId)})
        raise ConfigurationError(f"unknown route {name!r}; choose from {valid}") from None


@dataclass(frozen=True)
class RouteResult:
    route: RouteId
    argument: float
    result: ValueWithError
    notes: str = ""

    @property
    def value(self) -> float:
        return self.result.value


@dataclass(frozen=True)
class ComparisonReport:
    argument: float
    results: tuple[RouteResult, ...]
    max_pairwise_gap: float
    tolerance: float
    passed: bool


# ---------------------------------------------------------------- helpers

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def gamma_real(x: float) -> float:
    """Gamma function for x > 0 (Lanczos, g = 7, nine terms).

    Below 1/2 the recurrence Gamma(x) = Gamma(x + 1) / x is used rather than
    reflection, so the reflection formula remains an independent check.
    """
    if not x > 0:
        raise DomainError(f"gamma_real needs x > 0, got {x}")
    if x < 0.5:
        return gamma_real(x + 1.0) / x
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i, coef in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += coef / (z + i)
    t = z + _LANCZOS_G + 0.5
    # split the power so t^(z+1/2) cannot overflow before e^-t brings it down
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * half * (half * math.exp(-t)) * acc


def double_factorial(n: int) -> int:
    """n!! for odd n >= 1."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"double_factorial needs an odd positive integer, got {n}")
    out = 1
    for k in range(n, 1, -2):
        out *= k
    return out


def _power_kernel(p: float) -> Callable[[float], float]:
    """x^p e^-x / (1 + e^-x)^2, written to stay finite for large x."""

    def f(x: float) -> float:
        e = math.exp(-x)
        return math.exp(p * math.log(x) - x) / (1.0 + e) ** 2

    return f


def _check_general_domain(s: float) -> None:
    if not s > 0:
        raise DomainError(f"integral representation needs s > 0, got s = {s}")
    if abs(s - 1.0) <= POLE_GUARD:
        raise PoleProximityError(f"s = {s} is within {POLE_GUARD:g} of the pole at s = 1")


def _as_int(n, name: str) -> int:
    if isinstance(n, float):
        if not n.is_integer():
            raise DomainError(f"{name} needs an integer argument, got {n}")
        n = int(n)
    return int(n)


# ---------------------------------------------------------------- routes


def euler_even_coefficient(n: int) -> Fraction:
    """Exact rational r with zeta(2n) = r * pi^(2n)."""
    b = bernoulli_number(2 * n)
    sign = 1 if n % 2 == 1 else -1
    return sign * Fraction(2 ** (2 * n - 1)) * b / math.factorial(2 * n)


def zeta_euler_even(n: int) -> RouteResult:
    """zeta(2n) from the Bernoulli closed form."""
    n = _as_int(n, "euler_even")
    if n < 1:
        raise DomainError(f"euler_even needs n >= 1, got {n}")
    coef = euler_even_coefficient(n)
    value = float(coef) * math.pi ** (2 * n)
    # float(pi) carries relative error ~4e-17, amplified 2n times by the power.
    err = max(4.0 * math.ulp(value), 2 * n * 0.5 * _EPS * value + 2.0 * math.ulp(value))
    return RouteResult(
        RouteId.EULER_EVEN, 2.0 * n, ValueWithError(value, err), f"coefficient {coef}"
    )


def zeta_integral_general(s: float, cfg: QuadratureConfig | None = None) -> RouteResult:
    """zeta(s) = int_0^inf t^s e^-t/(1+e^-t)^2 dt / (Gamma(s+1) (1 - 2^(1-s)))."""
    cfg = cfg or QuadratureConfig()
    s = float(s)
    _check_general_domain(s)
    denom = gamma_real(s + 1.0) * eta_factor(s)
    q = integrate_semi_infinite(_power_kernel(s), 0.0, cfg.with_tol(cfg.tol * abs(denom)))
    value = q.value / denom
    err = q.abs_error / abs(denom) + (GAMMA_REL_ERR + 4 * _EPS) * abs(value)
    return RouteResult(
        RouteId.INTEGRAL_GENERAL,
        s,
        replace(q, value=value, abs_error=err),
        f"integral {q.value!r}",
    )


def zeta_integral_posint(n: int, cfg: QuadratureConfig | None = None) -> RouteResult:
    """zeta(n) = int_0^inf x^n e^-x/(1+e^-x)^2 dx / (n! (1 - 2^(1-n))), n >= 2."""
    cfg = cfg or QuadratureConfig()
    n = _as_int(n, "integral_posint")
    if n < 2:
        raise DomainError(f"integral_posint needs an integer n >= 2, got {n}")

    def f(x: float) -> float:
        e = math.exp(-x)
        return math.exp(n * math.log(x) - x) / (1.0 + e) ** 2

    denom = math.factorial(n) * (1.0 - 2.0 ** (1 - n))
    q = integrate_semi_infinite(f, 0.0, cfg.with_tol(cfg.tol * denom))
    value = q.value / denom
    err = q.abs_error / denom + 4 * _EPS * abs(value)
    return RouteResult(
        RouteId.INTEGRAL_POSINT, float(n), replace(q, value=value, abs_error=err)
    )


def zeta_integral_halfint(n: int, cfg: QuadratureConfig | None = None) -> RouteResult:
    """zeta(n - 1/2) from the half-integer integral representation, n >= 1.

    Computed with the exponentially decaying x-form; the log-form over
    [1, inf) is evaluated at a loose tolerance and its disagreement, if any,
    is recorded in ``notes``.
    """
    cfg = cfg or QuadratureConfig()
    n = _as_int(n, "integral_halfint")
    if n < 1:
        raise DomainError(f"integral_halfint needs an integer n >= 1, got {n}")
    p = n - 0.5
    denom = (
        math.sqrt(math.pi)
        * double_factorial(2 * n - 1)
        * -math.expm1(-(2 * n - 3) / 2 * math.log(2.0))
        / 2.0**n
    )
    q = integrate_semi_infinite(_power_kernel(p), 0.0, cfg.with_tol(cfg.tol * abs(denom)))
    value = q.value / denom
    err = q.abs_error / abs(denom) + 8 * _EPS * abs(value)

    def log_form(y: float) -> float:
        return math.log1p(y - 1.0) ** p / (1.0 + y) ** 2

    check_tol = HALFINT_CHECK_TOL * abs(denom)
    q_log = integrate_semi_infinite(log_form, 1.0, cfg.with_tol(check_tol))
    gap = abs(q_log.value - q.value)
    notes = f"log-form gap {gap:.3g}"
    if gap > check_tol + q_log.abs_error:
        notes += " EXCEEDS consistency tolerance"
    return RouteResult(
        RouteId.INTEGRAL_HALFINT, p, replace(q, value=value, abs_error=err), notes
    )


def cotangent_integrand(n: int, radius: float = COTANGENT_PATCH_RADIUS) -> Callable[[float], float]:
    """u -> B_{2n+1}(u) cot(pi u) with the removable singularity at 0 patched.

    Inside ``radius`` the two-term Taylor expansion
    (2n+1) B_{2n} / pi + C(2n+1, 2) B_{2n-1} u / pi is used.
    """
    m = 2 * n + 1
    c0 = m * float(bernoulli_number(2 * n)) / math.pi
    c1 = math.comb(m, 2) * float(bernoulli_number(2 * n - 1)) / math.pi

    def f(u: float) -> float:
        if u < radius:
            return c0 + c1 * u
        return bernoulli_polynomial(m, u) / math.tan(math.pi * u)

    return f


def cotangent_prefactor(n: int) -> float:
    """(-1)^(n+1) (2 pi)^(2n+1) / (2 (2n+1)!)."""
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * (2.0 * math.pi) ** (2 * n + 1) / (2.0 * math.factorial(2 * n + 1))


def zeta_cotangent_odd(n: int, cfg: QuadratureConfig | None = None) -> RouteResult:
    """zeta(2n+1) from the Bernoulli-polynomial cotangent integral, n >= 1.

    The integrand is symmetric under u -> 1 - u, so 2 * int_0^{1/2} is used.
    """
    cfg = cfg or QuadratureConfig()
    n = _as_int(n, "cotangent_odd")
    if n < 1:
        raise DomainError(f"cotangent_odd needs an integer n >= 1, got {n}")
    k = cotangent_prefactor(n)
    q = integrate_finite(cotangent_integrand(n), 0.0, 0.5, cfg.with_tol(cfg.tol / (2 * abs(k))))
    value = 2.0 * k * q.value
    err = 2.0 * abs(k) * q.abs_error + 8 * _EPS * abs(value)
    return RouteResult(
        RouteId.COTANGENT_ODD, float(2 * n + 1), replace(q, value=value, abs_error=err)
    )


def zeta_eta_route(s: float, cfg: SeriesConfig | None = None) -> RouteResult:
    return RouteResult(RouteId.ETA_SERIES, float(s), zeta_eta_accelerated(float(s), cfg))


def zeta_dirichlet_route(s: float, cfg: SeriesConfig | None = None) -> RouteResult:
    return RouteResult(RouteId.DIRICHLET_SERIES, float(s), zeta_dirichlet(float(s), cfg))


# ---------------------------------------------------------------- dispatch


def _is_int(s: float) -> bool:
    return float(s).is_integer()


def applicable(route: RouteId, s: float) -> bool:
    """Whether ``route`` can evaluate zeta at ``s``."""
    s = float(s)
    if not math.isfinite(s) or s <= 0 or abs(s - 1.0) <= POLE_GUARD:
        return False
    if route is RouteId.EULER_EVEN:
        return _is_int(s) and int(s) % 2 == 0 and s <= DEFAULT_CAPACITY
    if route is RouteId.INTEGRAL_POSINT:
        return _is_int(s) and s >= 2
    if route is RouteId.INTEGRAL_HALFINT:
        return _is_int(s + 0.5)
    if route is RouteId.COTANGENT_ODD:
        return _is_int(s) and int(s) % 2 == 1 and s >= 3
    if route is RouteId.DIRICHLET_SERIES:
        return s > 1
    return True


def applicable_routes(s: float) -> list[RouteId]:
    return [r for r in RouteId if applicable(r, s)]


def evaluate_route(
    route: RouteId,
    s: float,
    cfg: QuadratureConfig | None = None,
    series_cfg: SeriesConfig | None = None,
) -> RouteResult:
    """Evaluate zeta(s) along ``route``; raises DomainError if it does not apply."""
    if not applicable(route, s):
        if abs(float(s) - 1.0) <= POLE_GUARD:
            raise PoleProximityError(f"zeta has a pole at s = 1 (got s = {s})")
        raise DomainError(f"route {route.value} cannot evaluate s = {s}: {ROUTE_DOMAINS[route]}")
    s = float(s)
    if route is RouteId.EULER_EVEN:
        return zeta_euler_even(int(s) // 2)
    if route is RouteId.INTEGRAL_GENERAL:
        return zeta_integral_general(s, cfg)
    if route is RouteId.INTEGRAL_POSINT:
        return zeta_integral_posint(int(s), cfg)
    if route is RouteId.INTEGRAL_HALFINT:
        return zeta_integral_halfint(int(s + 0.5), cfg)
    if route is RouteId.COTANGENT_ODD:
        return zeta_cotangent_odd((int(s) - 1) // 2, cfg)
    if route is RouteId.ETA_SERIES:
        return zeta_eta_route(s, series_cfg)
    return zeta_dirichlet_route(s, series_cfg)


ROUTE_DOMAINS = {
    RouteId.EULER_EVEN: f"even integers 2..{DEFAULT_CAPACITY}",
    RouteId.INTEGRAL_GENERAL: "real s > 0, s != 1",
    RouteId.INTEGRAL_POSINT: "integers s >= 2",
    RouteId.INTEGRAL_HALFINT: "half-integers s = n - 1/2, n >= 1",
    RouteId.COTANGENT_ODD: "odd integers s >= 3",
    RouteId.ETA_SERIES: "real s > 0, s != 1",
    RouteId.DIRICHLET_SERIES: "real s > 1",
}


def default_route(s: float) -> RouteId:
    """euler_even for even integers, the eta series otherwise."""
    if applicable(RouteId.EULER_EVEN, s):
        return RouteId.EULER_EVEN
    return RouteId.ETA_SERIES


def compare_routes(
    s: float,
    routes: Iterable[RouteId] | None = None,
    tol: float = 1e-10,
    cfg: QuadratureConfig | None = None,
    series_cfg: SeriesConfig | None = None,
    fault: Mapping[RouteId, float] | None = None,
) -> ComparisonReport:
    """Evaluate several routes at ``s`` and check their pairwise agreement.

    ``fault`` adds a fixed offset to the named routes' values; it exists so
    the comparator itself can be tested.  The report passes when the largest
    pairwise gap is at most ``tol`` plus the two largest reported errors.
    """
    if routes is None:
        chosen = applicable_routes(s)
    else:
        requested = set(routes)
        bad = [r for r in requested if not applicable(r, s)]
        if bad:
            raise DomainError(
                f"routes {[r.value for r in sorted(bad, key=_order)]} do not apply at s = {s}"
            )
        chosen = sorted(requested, key=_order)
    if not chosen:
        raise ConfigurationError(f"no applicable route for s = {s}")
    fault = fault or {}
    results = []
    for r in chosen:
        res = evaluate_route(r, s, cfg, series_cfg)
        if r in fault:
            res = replace(
                res,
                result=replace(res.result, value=res.result.value + fault[r]),
                notes=(res.notes + f" fault injected {fault[r]:+g}").strip(),
            )
        results.append(res)
    gap = max(
        (abs(x.value - y.value) for x, y in combinations(results, 2)), default=0.0
    )
    errs = sorted((r.result.abs_error for r in results), reverse=True)
    allowance = tol + sum(errs[:2])
    return ComparisonReport(float(s), tuple(results), gap, tol, gap <= allowance)


def _order(r: RouteId) -> int:
    return list(RouteId).index(r)
