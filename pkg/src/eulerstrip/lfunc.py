"""Ground-truth evaluators for zeta and Dirichlet L inside the strip.

Two independent continuations back each other: an alternating-series
(eta) route with Chebyshev-style acceleration, and Euler-Maclaurin
applied to the Hurwitz zeta.  L(s, chi) reduces to a chi-weighted
combination of Hurwitz values.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
import numpy as np
import scipy.special

from .characters import DirichletCharacter

__all__ = [
    "EvalResult",
    "zeta",
    "hurwitz_zeta",
    "l_function",
    "arg_continuous",
    "PoleError",
    "OutOfRegionError",
    "ArgAmbiguityError",
]

_LOG2 = math.log(2.0)
_ETA_RATE = math.log(3.0 + math.sqrt(8.0))  # alternating-series acceleration rate

# B_2, B_4, ..., B_24 for the Euler-Maclaurin tail
_BERNOULLI = [
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
]


# 2*pi parsed directly into extended precision; going through the float64
# np.pi would poison every phase reduction with pi's double rounding
_TWO_PI_LD = np.longdouble("6.283185307179586476925286766559005768394")


def _inv_pow(base, s: complex):
    """base^{-s} in extended precision, with the phase t*log(base) reduced
    mod 2pi; keeps large-|t| sums near machine accuracy (sum before
    converting back to complex128)."""
    base_ld = np.asarray(base, dtype=np.longdouble)
    ln_ld = np.log(base_ld)
    mag = np.exp(np.longdouble(-s.real) * ln_ld)
    # t * log(b) carries an absolute phase error ~ t log(b) * eps; once that
    # nears 1e-16 rad even 80-bit arithmetic is not enough, so reduce the
    # phase in software arbitrary precision instead.
    t = s.imag
    worst = abs(t) * float(np.max(ln_ld, initial=0.0))
    if worst > 1e3:
        hi = base_ld.astype(float)
        lo = (base_ld - hi).astype(float)  # exact two-double split of each base
        with mp.workdps(26):
            mt = mp.mpf(t)
            two_pi = 2 * mp.pi
            ph = np.array(
                [
                    float(mp.fmod(mt * mp.log(mp.mpf(h) + mp.mpf(l)), two_pi))
                    for h, l in zip(hi.ravel(), lo.ravel())
                ],
                dtype=np.longdouble,
            ).reshape(base_ld.shape)
    else:
        ph = np.mod(np.longdouble(t) * ln_ld, _TWO_PI_LD)
    out = np.empty(ln_ld.shape, dtype=np.clongdouble)
    out.real = mag * np.cos(ph)
    out.imag = mag * np.sin(-ph)
    return out


class PoleError(Exception):
    """Evaluation requested at a pole."""


class OutOfRegionError(Exception):
    """Point lies outside the implemented region (sigma <= 0)."""


class ArgAmbiguityError(Exception):
    """Phase tracking could not resolve a branch (possible zero near path)."""


@dataclass(frozen=True)
class EvalResult:
    value: complex
    est_error: float

    def __complex__(self) -> complex:
        return self.value


@lru_cache(maxsize=64)
def _eta_coefficients(n: int) -> tuple:
    """Acceleration weights c_k = (-1)^k (d_k - d_n) / d_n, exact-integer d_k."""
    d = [0] * (n + 1)
    # term_i = n * (n+i-1)! 4^i / ((n-i)! (2i)!); term_0 = 1
    term = 1
    acc = 1
    d[0] = 1
    for i in range(1, n + 1):
        term = term * 4 * (n + i - 1) * (n - i + 1) // ((2 * i) * (2 * i - 1))
        acc += term
        d[i] = acc
    dn = d[n]
    return tuple(((-1) ** k) * float((d[k] - dn) / dn) for k in range(n))


def _zeta_eta(s: complex, target: float = 1e-15) -> EvalResult:
    """zeta via the accelerated alternating (eta) series; needs |t| moderate."""
    t = abs(s.imag)
    n = int((0.5 * math.pi * t + math.log(3.0 + 2.0 * t) - math.log(target)) / _ETA_RATE) + 3
    c = np.asarray(_eta_coefficients(n))
    k = np.arange(1, n + 1, dtype=float)
    terms = c * _inv_pow(k, s)
    denom = 1.0 - 2.0 * _inv_pow(np.array([2.0]), s)[0]
    value = -terms.sum() / denom
    bound = 3.0 / (3.0 + math.sqrt(8.0)) ** n * (1.0 + 2.0 * t) * math.exp(0.5 * math.pi * t)
    # absolute rounding floor: the weighted terms are O(1) even when the
    # sum cancels down to a zero of zeta
    rounding = 1e-15 + 1e-15 * float(abs(value))
    return EvalResult(complex(value), bound / float(abs(denom)) + rounding)


def _em_tail(s: complex, base: float | complex, shift: int):
    """Euler-Maclaurin continuation terms past n = shift for sum (n+base)^-s.

    Returns (tail value, bound on the first omitted correction term).
    """
    M = shift + base
    Ms = complex(_inv_pow(np.array([M]), s)[0])
    tail = Ms * M / (s - 1.0) + 0.5 * Ms
    poch = s  # rising factorial s (s+1) ... (s + 2j - 2)
    fact = 2.0  # (2j)!
    power = Ms / M  # M^{-s - (2j - 1)}
    for j, b in enumerate(_BERNOULLI, start=1):
        tail += b / fact * poch * power
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        power /= M * M
    nxt = abs(1.0 / fact * poch * power)  # first omitted term, crude certificate
    return tail, nxt


def hurwitz_zeta(s: complex, a: float = 1.0) -> EvalResult:
    """Hurwitz zeta(s, a) by Euler-Maclaurin with a certified truncation bound."""
    s = complex(s)
    if not 0.0 < a <= 1.0:
        raise ValueError("shift a must lie in (0, 1]")
    if s.real <= 0:
        raise OutOfRegionError("implemented for Re s > 0 only")
    if s == 1.0:
        raise PoleError("zeta(s, a) has a pole at s = 1")
    shift = max(16, int(1.3 * abs(s)) + 4)
    # form n + a in extended precision: a float64 sum would perturb the
    # base by ~n*eps, which the phase t*log(n+a) then amplifies
    n = np.arange(shift, dtype=np.longdouble)
    head = _inv_pow(n + np.longdouble(a), s).sum()
    tail, err = _em_tail(s, a, shift)
    value = head + tail
    return EvalResult(complex(value), float(err * (abs(s + 25) / (s.real + 25)) + 1e-14 * abs(value)))


def _zeta_em(s: complex) -> EvalResult:
    return hurwitz_zeta(s, 1.0)


def zeta(s: complex) -> EvalResult:
    """Riemann zeta for Re s > 0, s != 1 (analytic continuation).

    Routes through the eta series for moderate |t| and Euler-Maclaurin
    elsewhere, switching near the spurious zeros of 1 - 2^{1-s}.
    """
    s = complex(s)
    if s.real <= 0:
        raise OutOfRegionError("implemented for Re s > 0 only")
    if s == 1.0:
        raise PoleError("zeta has its pole at s = 1")
    if abs(s.imag) > 300.0 or abs(1.0 - 2.0 ** (1.0 - s)) < 1e-3:
        return _zeta_em(s)
    return _zeta_eta(s)


def l_function(s: complex, chi: DirichletCharacter) -> EvalResult:
    """L(s, chi) for Re s > 0 via L = k^{-s} sum_m chi(m) zeta(s, m/k)."""
    s = complex(s)
    k = chi.modulus
    if k == 1:
        return zeta(s)
    if chi.principal and s == 1.0:
        raise PoleError("principal L(s, chi) has a pole at s = 1")
    if s.real <= 0:
        raise OutOfRegionError("implemented for Re s > 0 only")
    if s == 1.0:
        # each Hurwitz term is singular at s = 1; the chi-weighted sum is
        # finite and equals -(1/k) sum chi(m) psi(m/k) (digamma formula)
        value = 0.0 + 0.0j
        for m in range(1, k):
            c = chi(m)
            if c != 0:
                value -= c * scipy.special.digamma(m / k) / k
        return EvalResult(complex(value), 1e-13 * k * max(1.0, abs(value)))
    ks = _inv_pow(np.array([float(k)]), s)[0]
    value = 0.0 + 0.0j
    err = 0.0
    for m in range(1, k + 1):
        c = chi(m)
        if c == 0:
            continue
        # divide in extended precision: a float64 m/k, scaled by the
        # |s| a^{-s-1} sensitivity of zeta(s, a), costs ~1e-12 at |t| ~ 1e4
        h = hurwitz_zeta(s, np.longdouble(m) / np.longdouble(k))
        value += c * h.value
        err += h.est_error
    return EvalResult(complex(ks * value), float(abs(ks)) * err)


def _principal_arg(chi: DirichletCharacter, sigma: float, t: float) -> float:
    return cmath.phase(l_function(complex(sigma, t), chi).value)


def arg_continuous(
    chi: DirichletCharacter,
    t: float,
    delta: float = 0.1,
    step: float = 0.05,
    _min_step: float = 1e-6,
) -> float:
    """Unwrapped arg L(1/2 + delta + it, chi) along 2 -> 2 + it -> 1/2 + delta + it.

    On the sigma = 2 line |log L| < pi (absolutely convergent prime series),
    so the principal argument there is already the path-continued one; only
    the horizontal leg needs phase tracking.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    if t == 0.0 and chi.principal:
        # horizontal leg would cross the pole at s = 1; arg is 0 by convention
        return 0.0
    prev = _principal_arg(chi, 2.0, t)
    target = 0.5 + delta
    sigma = 2.0
    while sigma > target:
        nxt = max(target, sigma - step)
        h = nxt - sigma
        while True:
            raw = _principal_arg(chi, sigma + h, t)
            jump = math.remainder(raw - prev, 2.0 * math.pi)
            if abs(jump) <= 0.5 * math.pi:
                break
            h *= 0.5
            if abs(h) < _min_step:
                raise ArgAmbiguityError(
                    f"phase jump persists below step {_min_step} near sigma={sigma}, t={t}"
                )
        prev = prev + jump
        sigma = sigma + h
    return prev
