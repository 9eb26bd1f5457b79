"""The brute-force oracles reproduce the frozen values independently of the package."""

import math

import mpmath
import pytest

import golden
import oracles


@pytest.mark.parametrize(
    "s, frozen",
    [(0.5, golden.ZETA_HALF), (1.5, golden.ZETA_3_2), (3, golden.ZETA_3), (5, golden.ZETA_5)],
)
def test_brute_force_eta_matches_frozen(s, frozen):
    assert oracles.zeta_brute_force(s, n_terms=10**6) == pytest.approx(frozen, abs=2e-15)
    assert float(mpmath.zeta(s)) == pytest.approx(frozen, abs=1e-15)


def test_elliptic_constant_against_eta_continuation():
    ref = 1 / (mpmath.sqrt(mpmath.pi) * mpmath.altzeta(-0.5))
    assert float(ref) == pytest.approx(golden.ELLIPTIC_C, rel=1e-15)


def test_series_division_oracle_t4_coefficient():
    a = oracles.pi_t_over_sin_coefficients(2)
    assert a[1] == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert a[2] == pytest.approx(7 * math.pi**4 / 360, rel=1e-15)
