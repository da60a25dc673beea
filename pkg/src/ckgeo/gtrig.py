"""Generalized trigonometric kernels parameterized by a characteristic.

gcos(k, x) and gsin(k, x) interpolate the circular (k = 1), linear (k = 0)
and hyperbolic (k = -1) function pairs; gmeasure_from_cs inverts a consistent
(cosine-like, sine-like) pair back to the measure it came from.
"""

from __future__ import annotations

import math

from .errors import DomainError, InconsistentPair, PoleError


def _check_char(k: int) -> int:
    if k not in (-1, 0, 1):
        raise ValueError("characteristic must be one of -1, 0, 1")
    return k


def gcos(k: int, x: float) -> float:
    """Cosine-like kernel: cos(x), 1, or cosh(x) depending on k."""
    _check_char(k)
    if k == 1:
        return math.cos(x)
    if k == 0:
        return 1.0
    return math.cosh(x)


def gsin(k: int, x: float) -> float:
    """Sine-like kernel: sin(x), x, or sinh(x) depending on k."""
    _check_char(k)
    if k == 1:
        return math.sin(x)
    if k == 0:
        return float(x)
    return math.sinh(x)


def gtan(k: int, x: float) -> float:
    """Tangent-like kernel gsin/gcos; raises PoleError where gcos vanishes."""
    c = gcos(k, x)
    if c == 0.0:
        raise PoleError("gtan pole at x = %r for k = %d" % (x, k))
    return gsin(k, x) / c


def gmeasure_from_cs(k: int, c: float, s: float, tol: float = 1e-9) -> float:
    """Recover x >= 0 from c = gcos(k, x) and s = gsin(k, x) with s >= 0.

    The pair must satisfy c*c + k*s*s == 1 within tol (relative to the size
    of the terms); otherwise InconsistentPair is raised.  For k == -1 the
    inversion needs c + s > 0, else DomainError.  Principal ranges: [0, pi]
    for k == 1, [0, inf) otherwise.
    """
    _check_char(k)
    if s < 0.0:
        if s < -tol:
            raise InconsistentPair("sine-like value must be nonnegative, got %r" % (s,))
        s = 0.0
    scale = max(1.0, c * c, abs(k) * s * s)
    if abs(c * c + k * s * s - 1.0) > tol * scale:
        raise InconsistentPair(
            "pair (%r, %r) violates c^2 + (%d)s^2 = 1" % (c, s, k)
        )
    if k == 1:
        return math.atan2(s, c)
    if k == 0:
        if abs(c - 1.0) > tol:
            raise InconsistentPair("parabolic pair needs c = 1, got %r" % (c,))
        return s
    if c + s <= 0.0:
        raise DomainError("hyperbolic inversion needs c + s > 0, got %r" % (c + s,))
    # log1p keeps precision when x is small and c + s is barely above 1.
    return math.log1p((c - 1.0) + s)
