"""Zero counting on the critical line and the nth-zero solver.

The argument of zeta just right of the critical line is computed from a
truncated prime sum; feeding it into the exact counting formula gives a
smoothed staircase N_delta(T), and inverting the staircase at half-integer
levels locates individual zero ordinates.  A Lambert-W closed form supplies
the starting guess.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter, character, phases_on_primes
from .primes import PrimeTable, generate_primes
from .specfun import lambert_w, riemann_siegel_theta

__all__ = [
    "ZeroResult",
    "CountingPoint",
    "s_delta",
    "counting_function",
    "lambert_approx",
    "solve_zero",
    "BracketingError",
]

_TWO_PI = 2.0 * math.pi


class BracketingError(Exception):
    """No sign change found while expanding the root bracket."""


@dataclass(frozen=True)
class ZeroResult:
    """Solved ordinate of the nth zero (1-based, upper half-line)."""

    n: int
    t: float
    residual: float
    iterations: int
    delta: float
    primes_used: int


@dataclass(frozen=True)
class CountingPoint:
    """Smoothed zero-counting staircase value at height T."""

    T: float
    n_of_T: float


def _sum_terms(
    t,
    delta: float,
    chi: DirichletCharacter,
    N: int,
    table: PrimeTable | None,
):
    """-(1/pi) Im log(1 - chi(p) p^{-1/2-delta-it}) per contributing prime.

    Returns an array of shape t.shape + (K,) for K contributing primes; each
    factor has |x| < 1, so 1 - x stays in the right half-plane and the
    principal branch is unambiguous.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    if table is None:
        table = generate_primes(N)
    if len(table) < N:
        raise ValueError(f"prime table holds {len(table)} primes, need {N}")
    primes = table.primes[:N]
    theta, mask = phases_on_primes(chi, primes)
    logs = np.log(primes[mask].astype(float))
    amp = np.exp(-(0.5 + delta) * logs)
    t_arr = np.asarray(t, dtype=float)
    ph = np.multiply.outer(t_arr, logs) + theta[mask]
    re = 1.0 - amp * np.cos(ph)
    im = amp * np.sin(ph)
    return -np.arctan2(im, re) / math.pi


def s_delta(
    t,
    delta: float,
    chi: DirichletCharacter | None = None,
    N: int = 10_000,
    cesaro: bool = False,
    table: PrimeTable | None = None,
):
    """Smoothed argument S_delta(t) = -(1/pi) Im sum log(1 - chi(p) p^{-s})
    at s = 1/2 + delta + it, truncated to the first N primes.

    Accepts scalar or array t.  With cesaro=True the truncation noise is
    tamed by averaging the partial sums over the trailing window
    [N/2, N] of truncation lengths.
    """
    if chi is None:
        chi = character(1, 1)
    if table is None:
        table = generate_primes(N)

    def reduce(block):
        terms = _sum_terms(block, delta, chi, N, table)
        if cesaro:
            partial = np.cumsum(terms, axis=-1)
            lo = terms.shape[-1] // 2
            return partial[..., lo:].mean(axis=-1)
        return terms.sum(axis=-1)

    t_arr = np.asarray(t, dtype=float)
    # cap the t x primes intermediate at ~10^7 entries per block
    rows = max(1, 10_000_000 // max(N, 1))
    if t_arr.ndim == 1 and t_arr.size > rows:
        out = np.concatenate([reduce(t_arr[i : i + rows]) for i in range(0, t_arr.size, rows)])
    else:
        out = reduce(t_arr)
    return float(out) if np.isscalar(t) else out


def counting_function(
    T: float,
    delta: float = 1e-3,
    N: int = 100,
    cesaro: bool = False,
    table: PrimeTable | None = None,
) -> CountingPoint:
    """Smoothed staircase N_delta(T) = theta(T)/pi + S_delta(T) + 1.

    Steps by approximately one near each zero ordinate; the smaller delta,
    the sharper the step.
    """
    if T <= 0:
        raise ValueError("T must be positive")
    value = (
        riemann_siegel_theta(T) / math.pi
        + s_delta(T, delta, None, N, cesaro=cesaro, table=table)
        + 1.0
    )
    return CountingPoint(float(T), float(value))


def lambert_approx(n: int) -> float:
    """Closed-form zero-ordinate estimate t_n ~ 2 pi (n - 11/8) / W((n - 11/8)/e)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = n - 11.0 / 8.0
    return _TWO_PI * a / lambert_w(a / math.e)


def solve_zero(
    n: int,
    delta: float = 1e-3,
    N_primes: int = 10_000,
    tol: float = 1e-9,
    cesaro: bool = False,
    table: PrimeTable | None = None,
) -> ZeroResult:
    """Ordinate of the nth zero from the phase equation
    F(t) = theta(t) + pi S_delta(t) - (n - 3/2) pi = 0.

    Brackets around the Lambert-W estimate (initial half-width half the
    local mean zero spacing, doubled up to 8 times until F changes sign),
    then bisects.  The truncated prime sum makes F oscillate by O(1), so
    bisection is preferred over any slope-based iteration; cesaro=True
    substitutes the averaged S_delta, which suppresses spurious crossings
    at small n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if table is None:
        table = generate_primes(N_primes)
    level = (n - 1.5) * math.pi

    def F(t: float) -> float:
        return (
            riemann_siegel_theta(t)
            + math.pi * s_delta(t, delta, None, N_primes, cesaro=cesaro, table=table)
            - level
        )

    guess = lambert_approx(n)
    spacing = _TWO_PI / math.log(max(n, 2))
    half = 0.5 * spacing
    iterations = 0
    for _ in range(9):
        a, b = max(guess - half, 1e-3), guess + half
        fa, fb = F(a), F(b)
        iterations += 2
        if fa == 0.0 or fb == 0.0 or (fa < 0) != (fb < 0):
            break
        half *= 2.0
    else:
        raise BracketingError(
            f"no sign change for n={n} in [{a:.6g}, {b:.6g}]: F={fa:.3g}, {fb:.3g}"
        )
    if fa == 0.0:
        root = a
    elif fb == 0.0:
        root = b
    else:
        while b - a > max(tol, abs(b) * 1e-13):
            mid = 0.5 * (a + b)
            fm = F(mid)
            iterations += 1
            if fm == 0.0:
                a = b = mid
                break
            if (fm < 0) == (fa < 0):
                a, fa = mid, fm
            else:
                b = mid
        root = 0.5 * (a + b)
    return ZeroResult(
        n=n,
        t=float(root),
        residual=abs(F(root)),
        iterations=iterations,
        delta=delta,
        primes_used=N_primes,
    )
