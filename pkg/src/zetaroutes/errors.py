class DomainError(ValueError):
    """Argument outside the domain where an operation is defined."""


class PoleProximityError(DomainError):
    """Argument too close to the pole of zeta at s = 1."""


class CapacityError(ValueError):
    """Request exceeds a configured table or budget size."""


class ConfigurationError(ValueError):
    """No usable configuration exists for the request (e.g. no applicable route)."""


class IntegrandError(ArithmeticError):
    """The integrand returned a non-finite value at an interior node."""

    def __init__(self, abscissa, value):
        self.abscissa = abscissa
        self.value = value
        super().__init__(f"integrand returned {value!r} at x = {abscissa!r}")
