"""Bracketing root search: bisection to a fixed width, then one secant step."""
from __future__ import annotations

from typing import Callable

from .errors import NoRootError


def bisect_secant(f: Callable[[float], float], a: float, b: float,
                  xtol: float = 1e-12, maxiter: int = 400) -> float:
    """Root of ``f`` in ``[a, b]``; ``f(a)`` and ``f(b)`` must differ in sign."""
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise NoRootError(f"no sign change on [{a}, {b}]: f={fa:.3g}, {fb:.3g}")
    for _ in range(maxiter):
        if abs(b - a) <= xtol:
            break
        m = 0.5 * (a + b)
        if m <= min(a, b) or m >= max(a, b):
            break   # bracket is down to adjacent floats
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm > 0.0) == (fa > 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    x = b - fb * (b - a) / (fb - fa)
    if min(a, b) <= x <= max(a, b):
        return x
    return 0.5 * (a + b)
