"""Rogers dilogarithm, classical dilogarithm, and the lasso combination.

The classical dilogarithm is Li2(z) = sum_{n>=1} z^n / n^2 for |z| <= 1,
continued to all real z <= 1.  The Rogers normalization

    L(z) = Li2(z) + (1/2) log|z| log(1 - z)

is monotone increasing on (-inf, 1] with the special values L(0) = 0,
L(1/2) = pi^2/12, L(1) = pi^2/6 and L(-1) = -pi^2/12, and it satisfies

    Euler       L(x) + L(1 - x)     = pi^2/6          for 0 <= x <= 1
    inversion   L(-x) + L(-1/x)     = -pi^2/6         for x > 0
    Landen      L(-x/(1 - x))       = -L(x)           for 0 <= x <= 1
    pentagon    L(x) + L(y) + L((1-x)/(1-xy)) + L((1-y)/(1-xy))
                                    = L(xy) + pi^2/3  for x, y in (0, 1)

as well as L(z) -> -pi^2/6 as z -> -inf.

Every evaluation below reduces to the power series on |z| <= 1/2 through
exactly one of those equations:

    (1/2, 1)    Euler,     argument 1 - z      in (0, 1/2)
    [-1, -1/2)  Landen,    argument z/(z - 1)  in (1/3, 1/2]
    (-inf, -1)  inversion, argument 1/z        in (-1, 0)

so each branch sums a series with ratio at most 1/2.

The lasso combination

    La(x, y) = L(y) + L((1-y)/(1-xy)) - L((1-x)/(1-xy))

is defined on the square 0 <= x, y <= 1 away from the corner xy = 1.
"""

import math
from math import log, log1p, pi

from .errors import DomainError, SingularInputError

__all__ = ["li2", "rogers", "lasso", "PI2_6"]

PI2_6 = pi * pi / 6.0

# Series terms decay at ratio <= 1/2, so the cap is never reached.
_SERIES_EPS = 1e-17
_SERIES_CAP = 200


def _li2_series(z):
    """Power series for Li2, valid for |z| <= 1/2."""
    total = 0.0
    power = z
    for n in range(1, _SERIES_CAP + 1):
        term = power / (n * n)
        total += term
        if abs(term) < _SERIES_EPS:
            break
        power *= z
    return total


def _check_arg(z):
    if not math.isfinite(z):
        raise DomainError(f"dilogarithm argument must be finite, got {z!r}")
    if z > 1.0:
        raise DomainError(f"dilogarithm argument must be <= 1, got {z!r}")


def li2(z: float) -> float:
    """Classical dilogarithm Li2(z) for real z <= 1."""
    _check_arg(z)
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return PI2_6
    if -0.5 <= z <= 0.5:
        return _li2_series(z)
    if z > 0.5:
        # Euler: Li2(z) + Li2(1-z) = pi^2/6 - log(z) log(1-z)
        return PI2_6 - log(z) * log1p(-z) - _li2_series(1.0 - z)
    if z >= -1.0:
        # Landen: Li2(z) + Li2(z/(z-1)) = -(1/2) log^2(1-z); z/(z-1) in (1/3, 1/2]
        return -_li2_series(z / (z - 1.0)) - 0.5 * log1p(-z) ** 2
    # inversion: Li2(z) + Li2(1/z) = -pi^2/6 - (1/2) log^2(-z); 1/z in (-1, 0)
    return -PI2_6 - 0.5 * log(-z) ** 2 - li2(1.0 / z)


def rogers(z: float, limit_floor: float | None = None) -> float:
    """Rogers dilogarithm L(z) for real z <= 1.

    When ``limit_floor`` is given, arguments below it short-circuit to the
    limit value -pi^2/6 instead of being evaluated.
    """
    _check_arg(z)
    if limit_floor is not None and z < limit_floor:
        return -PI2_6
    if z == 0.0:
        return 0.0
    if z == 1.0:
        return PI2_6
    if z > 0.5:
        return PI2_6 - rogers(1.0 - z)
    if z >= -0.5:
        return _li2_series(z) + 0.5 * log(abs(z)) * log1p(-z)
    if z >= -1.0:
        return -rogers(z / (z - 1.0))
    return -PI2_6 - rogers(1.0 / z)


def lasso(x: float, y: float) -> float:
    """Lasso combination La(x, y) on the square 0 <= x, y <= 1, xy != 1."""
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError(f"lasso arguments must be finite, got ({x!r}, {y!r})")
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"lasso arguments must lie in [0, 1], got ({x!r}, {y!r})")
    denom = 1.0 - x * y
    if denom <= 0.0:
        raise SingularInputError(f"lasso is singular at xy = 1, got ({x!r}, {y!r})")
    return rogers(y) + rogers((1.0 - y) / denom) - rogers((1.0 - x) / denom)
