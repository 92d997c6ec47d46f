"""Special functions: complex log-gamma, the smooth zero-counting phase,
and the principal branch of the Lambert W function."""
from __future__ import annotations

import math

import numpy as np
import scipy.special

__all__ = ["log_gamma", "riemann_siegel_theta", "lambert_w"]

_LOG_SQRT_PI = 0.5 * math.log(math.pi)


def log_gamma(s):
    """Principal-branch log of Gamma(s), continuous for Re s > 0.

    Accepts complex scalars or arrays.  Raises at the poles of Gamma.
    """
    s = np.asarray(s, dtype=complex)
    poles = (s.real <= 0) & (s.imag == 0) & (s.real == np.floor(s.real))
    if np.any(poles):
        raise ValueError("log_gamma pole at non-positive integer")
    out = scipy.special.loggamma(s)
    return out[()] if out.ndim == 0 else out


def riemann_siegel_theta(T):
    """Smooth phase arg Gamma(1/4 + iT/2) - T log sqrt(pi).

    Odd in T by construction; strictly increasing for T > ~7.
    """
    T = np.asarray(T, dtype=float)
    out = np.imag(scipy.special.loggamma(0.25 + 0.5j * T)) - T * _LOG_SQRT_PI
    return float(out) if out.ndim == 0 else out


def lambert_w(x: float, tol: float = 1e-14, max_iter: int = 50) -> float:
    """Principal branch of w e^w = x for real x >= -1/e, by Halley iteration."""
    if x < -1.0 / math.e:
        raise ValueError("lambert_w requires x >= -1/e on the principal branch")
    if x == 0.0:
        return 0.0
    # initial guess: series near the branch point, log asymptote for large x
    if x < -0.25:
        p = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p - p * p / 3.0
    elif x < math.e:
        w = x / math.e
    else:
        lx = math.log(x)
        w = lx - math.log(lx)
    for _ in range(max_iter):
        if w == -1.0:  # branch point, x = -1/e
            break
        ew = math.exp(w)
        f = w * ew - x
        denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0)
        if denom == 0.0:
            break
        dw = f / denom
        w -= dw
        if abs(dw) <= tol * max(abs(w), 1e-300):
            break
    return w
