"""Zeros of Ai(-z) and their WKB approximation."""

from __future__ import annotations

import math
from functools import lru_cache

from scipy.optimize import brentq
from scipy.special import airy

from ..errors import DomainError, IdentityCheckError

ZERO_RESIDUAL_TOL = 1e-10


def airy_ai(z: float) -> float:
    return float(airy(z)[0])


def _check_index(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"level index must be a positive integer, got {n!r}", "airy_zero")
    return int(n)


def wkb_level(n: int) -> float:
    """[3 pi/2 (n - 1/4)]^(2/3)."""
    n = _check_index(n)
    return (1.5 * math.pi * (n - 0.25)) ** (2.0 / 3.0)


@lru_cache(maxsize=None)
def airy_zero(n: int) -> float:
    """n-th zero alpha_n of Ai(-z), n >= 1."""
    n = _check_index(n)

    def f(z):
        return airy_ai(-z)

    # The WKB value sits within a small fraction of the zero spacing,
    # so a bracket of +/- a quarter spacing around it always changes sign.
    guess = wkb_level(n)
    half = 0.25 * math.pi / math.sqrt(guess)
    lo, hi = guess - half, guess + half
    while f(lo) * f(hi) > 0:
        half *= 1.5
        lo, hi = max(guess - half, 0.0), guess + half
    root = brentq(f, lo, hi, xtol=1e-15, rtol=4 * 2.220446049250313e-16, maxiter=200)
    if abs(f(root)) >= ZERO_RESIDUAL_TOL:
        raise IdentityCheckError(f"|Ai(-alpha_{n})| = {abs(f(root)):.3e} exceeds tolerance", "airy_zero")
    return root
