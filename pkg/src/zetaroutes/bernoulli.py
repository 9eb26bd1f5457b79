"""Exact Bernoulli numbers and float Bernoulli polynomials.

Numbers come from the binomial recurrence

    sum_{k=0}^{n} C(n+1, k) B_k = 0,   B_0 = 1,

carried out in exact rationals (``fractions.Fraction``), which fixes the
convention B_1 = -1/2.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

from zetaroutes.errors import CapacityError, DomainError

DEFAULT_CAPACITY = 256

# Append-only; entries are never mutated once published.
_table: list[Fraction] = [Fraction(1)]
_lock = threading.Lock()


def _extend(n: int) -> None:
    with _lock:
        for m in range(len(_table), n + 1):
            if m >= 3 and m % 2 == 1:
                _table.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(m):
                bk = _table[k]
                if bk:
                    acc += comb(m + 1, k) * bk
            _table.append(-acc / (m + 1))


def bernoulli_number(n: int, capacity: int = DEFAULT_CAPACITY) -> Fraction:
    """Return B_n exactly.

    Raises CapacityError if ``n`` exceeds ``capacity``.
    """
    if n < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {n}")
    if n > capacity:
        raise CapacityError(f"Bernoulli index {n} exceeds table capacity {capacity}")
    if n >= len(_table):
        _extend(n)
    return _table[n]


def bernoulli_table(n_max: int, capacity: int = DEFAULT_CAPACITY) -> tuple[Fraction, ...]:
    """B_0 .. B_{n_max} as an immutable tuple."""
    bernoulli_number(n_max, capacity)
    return tuple(_table[: n_max + 1])


def bernoulli_polynomial_coefficients(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients of B_n(x), highest degree first."""
    return tuple(comb(n, k) * bernoulli_number(k) for k in range(n + 1))


_SPLITTER = 134217729.0  # 2^27 + 1


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


@lru_cache(maxsize=None)
def _split_coefficients(n: int) -> tuple[tuple[float, float], ...]:
    """Each exact coefficient as an unevaluated sum hi + lo of two floats."""
    out = []
    for c in bernoulli_polynomial_coefficients(n):
        hi = float(c)
        out.append((hi, float(c - Fraction(hi))))
    return tuple(out)


def bernoulli_polynomial(n: int, x: float) -> float:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k).

    Compensated Horner: the rounding error of every step is carried along
    exactly, so the result is as accurate as if the polynomial had been
    evaluated in twice the working precision and rounded once.  Plain Horner
    loses up to ~1e-12 near the zeros of B_20.
    """
    coefs = _split_coefficients(n)
    hi, lo = coefs[0]
    for c_hi, c_lo in coefs[1:]:
        p, p_err = _two_prod(hi, x)
        hi, s_err = _two_sum(p, c_hi)
        lo = lo * x + (p_err + s_err + c_lo)
    return hi + lo
