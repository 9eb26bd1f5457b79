"""Multi-route evaluation of the Riemann zeta function with cross-validation.

Each representation of zeta (Bernoulli closed form, several integral
representations, a cotangent integral, accelerated eta and Dirichlet series)
is computed independently so that the routes can check one another.  The
logistic-family distributions whose moments encode zeta values live in
:mod:`zetaroutes.distributions`.
"""

__version__ = "0.1.0"

from zetaroutes.errors import (
    CapacityError,
    ConfigurationError,
    DomainError,
    IntegrandError,
    PoleProximityError,
)
from zetaroutes.bernoulli import bernoulli_number, bernoulli_polynomial
from zetaroutes.quadrature import (
    QuadratureConfig,
    ValueWithError,
    integrate_finite,
    integrate_semi_infinite,
)
from zetaroutes.series import SeriesConfig, zeta_dirichlet, zeta_eta_accelerated
from zetaroutes.routes import (
    ComparisonReport,
    RouteId,
    RouteResult,
    compare_routes,
    double_factorial,
    gamma_real,
    zeta_cotangent_odd,
    zeta_euler_even,
    zeta_integral_general,
    zeta_integral_halfint,
    zeta_integral_posint,
)

__all__ = [
    "CapacityError",
    "ComparisonReport",
    "ConfigurationError",
    "DomainError",
    "IntegrandError",
    "PoleProximityError",
    "QuadratureConfig",
    "RouteId",
    "RouteResult",
    "SeriesConfig",
    "ValueWithError",
    "bernoulli_number",
    "bernoulli_polynomial",
    "compare_routes",
    "double_factorial",
    "gamma_real",
    "integrate_finite",
    "integrate_semi_infinite",
    "zeta_cotangent_odd",
    "zeta_dirichlet",
    "zeta_eta_accelerated",
    "zeta_euler_even",
    "zeta_integral_general",
    "zeta_integral_halfint",
    "zeta_integral_posint",
]
