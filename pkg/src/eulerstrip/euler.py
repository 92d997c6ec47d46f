"""Truncated Euler products over Dirichlet characters, their log series,
running Cesaro averages, the t^2 truncation cutoff, the Abel summation
bound, and a Moebius continuation of the prime zeta function.

Products are accumulated as complex log-sums and exponentiated per entry,
so no intermediate product can overflow and the relation between the
product and its logarithmic series stays cheap to verify.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter, phases_on_primes
from .lfunc import zeta
from .primes import PrimeTable, generate_primes, mobius_sieve
from .rwp import rwp_series

__all__ = [
    "EulerProductTrace",
    "partial_product",
    "cesaro_average",
    "log_series",
    "cutoff",
    "abel_bound",
    "prime_zeta_continuation",
    "DivergentProductError",
    "SingularityError",
]


class DivergentProductError(Exception):
    """Principal-character product requested where the defining sum diverges."""


class SingularityError(Exception):
    """Continuation hit a pole or zero of zeta along the dilated line."""


@dataclass(frozen=True)
class EulerProductTrace:
    """Per-prime history of a truncated Euler product.

    partial_products[n-1] is P_n = prod_{m<=n} (1 - chi(p_m) p_m^{-s})^{-1},
    partial_log[n-1] is the first-order sum X_n = sum_{m<=n} chi(p_m) p_m^{-s},
    cesaro[n-1] is the arithmetic mean of P_1..P_n.  Primes with chi(p) = 0
    contribute a factor 1 (and no first-order term).  Empty trace = the
    empty product P_0 = 1.
    """

    s: complex
    chi: DirichletCharacter
    partial_products: np.ndarray
    partial_log: np.ndarray
    cesaro: np.ndarray
    cutoff_N: int | None = None

    def __post_init__(self):
        self.partial_products.setflags(write=False)
        self.partial_log.setflags(write=False)
        self.cesaro.setflags(write=False)

    def __len__(self) -> int:
        return len(self.partial_products)

    @property
    def product(self) -> complex:
        """P_N, the final truncated product (1 for the empty trace)."""
        return complex(self.partial_products[-1]) if len(self) else 1.0 + 0.0j


def cutoff(t: float, c: float = 1.0) -> int:
    """Truncation budget N_c = floor(c t^2): the number of leading primes a
    principal-character product can use before it stops tracking zeta."""
    if c <= 0:
        raise ValueError("cutoff constant c must be positive")
    return int(c * t * t)


def cesaro_average(seq) -> np.ndarray:
    """Running arithmetic means of a complex sequence.

    The running total is carried across blocks with Kahan compensation, so
    the final mean stays at ulp scale even after 10^8 entries.
    """
    seq = np.asarray(seq, dtype=complex)
    if seq.size == 0:
        raise ValueError("cesaro_average of an empty sequence")
    out = np.empty(len(seq), dtype=complex)
    block = 1 << 16
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation: true total ~ total - comp
    for lo in range(0, len(seq), block):
        chunk = seq[lo : lo + block]
        out[lo : lo + len(chunk)] = (total - comp) + np.cumsum(chunk)
        y = chunk.sum() - comp
        t = total + y
        comp = (t - total) - y
        total = t
    out /= np.arange(1, len(seq) + 1)
    return out


def _factor_data(
    s: complex,
    chi: DirichletCharacter,
    N: int,
    table: PrimeTable | None,
):
    """(chi(p) p^{-s} over the first N primes, contributing mask)."""
    if table is None:
        table = generate_primes(N)
    if len(table) < N:
        raise ValueError(f"prime table holds {len(table)} primes, need {N}")
    primes = table.primes[:N]
    theta, mask = phases_on_primes(chi, primes)
    logs = np.log(primes.astype(float))
    x = np.zeros(N, dtype=complex)
    ph = s.imag * logs[mask] - theta[mask]
    x[mask] = np.exp(-s.real * logs[mask]) * (np.cos(ph) - 1j * np.sin(ph))
    return x, mask


def partial_product(
    s: complex,
    chi: DirichletCharacter,
    N: int,
    enforce_cutoff: bool = False,
    cutoff_c: float = 1.0,
    table: PrimeTable | None = None,
) -> EulerProductTrace:
    """Trace of the truncated Euler product over the first N primes.

    For a principal character inside the strip (sigma <= 1) the product only
    shadows zeta up to N_c = cutoff(t, cutoff_c) primes.  With enforce_cutoff
    the trace is truncated there, and refused outright at t = 0, where the
    defining series diverges; otherwise the budget is recorded on the trace
    and a warning is emitted when N exceeds it.  For sigma > 1 the product
    converges absolutely and no budget applies.
    """
    s = complex(s)
    if s.real <= 0:
        raise ValueError("implemented for Re s > 0 only")
    if N < 0:
        raise ValueError("N must be >= 0")
    cutoff_N = None
    if chi.principal and s.real <= 1.0:
        if s.imag == 0.0:
            if enforce_cutoff:
                raise DivergentProductError(
                    "principal-character product diverges at t = 0, sigma <= 1"
                )
            warnings.warn(
                "principal-character product diverges at t = 0, sigma <= 1",
                stacklevel=2,
            )
        else:
            cutoff_N = cutoff(s.imag, cutoff_c)
            if N > cutoff_N:
                if enforce_cutoff:
                    N = cutoff_N
                else:
                    warnings.warn(
                        f"N = {N} exceeds the t^2 truncation budget {cutoff_N}; "
                        "the product will drift away from zeta",
                        stacklevel=2,
                    )
    if N == 0:
        empty = np.empty(0, dtype=complex)
        return EulerProductTrace(s, chi, empty, empty.copy(), empty.copy(), cutoff_N)
    x, mask = _factor_data(s, chi, N, table)
    factor_logs = np.zeros(N, dtype=complex)
    factor_logs[mask] = -np.log1p(-x[mask])
    products = np.exp(np.cumsum(factor_logs))
    return EulerProductTrace(
        s=s,
        chi=chi,
        partial_products=products,
        partial_log=np.cumsum(x),
        cesaro=cesaro_average(products),
        cutoff_N=cutoff_N,
    )


def log_series(
    s: complex,
    chi: DirichletCharacter,
    N: int,
    table: PrimeTable | None = None,
) -> tuple[complex, complex]:
    """(X_N, remainder): first-order prime sum and the higher-power tail.

    X_N = sum_{n<=N} chi(p_n) p_n^{-s}; remainder collects the m >= 2 powers
    so that X_N + remainder = log P_N up to a multiple of 2 pi i.  The
    remainder converges absolutely for sigma > 1/2.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise ValueError("the higher-power remainder requires Re s > 1/2")
    x, mask = _factor_data(s, chi, N, table)
    X = complex(x.sum())
    xm = x[mask]  # |xm| is decreasing (primes ascending)
    amp = np.abs(xm)
    remainder = 0.0 + 0.0j
    power = xm * xm
    m = 2
    while len(power):
        remainder += power.sum() / m
        # tail of the log series for the largest remaining factor
        if amp[0] ** (m + 1) * len(power) / ((m + 1) * (1.0 - amp[0])) < 1e-19:
            break
        # drop primes whose powers can no longer matter
        keep = np.searchsorted(-amp, -(1e-22 ** (1.0 / (m + 1))), side="right")
        power = power[:keep] * xm[:keep]
        xm = xm[:keep]
        amp = amp[:keep]
        m += 1
    return X, complex(remainder)


def abel_bound(
    s: complex,
    chi: DirichletCharacter,
    N: int,
    table: PrimeTable | None = None,
) -> tuple[float, float]:
    """(lhs, rhs) of the summation-by-parts bound on the real first-order sum.

    With amplitudes a_n = p_n^{-sigma} and cosine-walk partial sums B_n over
    the contributing primes, lhs = |sum a_n cos lambda_n| and
    rhs = |a_K B_K| + sum_{n<K} |B_n| |a_{n+1} - a_n|; lhs <= rhs always.
    """
    s = complex(s)
    if s.real <= 0:
        raise ValueError("requires Re s > 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    if table is None:
        table = generate_primes(N)
    trace = rwp_series(s.imag, chi, N, table=table)
    _, mask = phases_on_primes(chi, table.primes[:N])
    a = table.primes[:N][mask].astype(float) ** (-s.real)
    lhs = abs(float(a @ trace.terms))
    B = trace.partials
    rhs = abs(a[-1] * B[-1]) + float(np.abs(B[:-1]) @ np.abs(np.diff(a)))
    return lhs, rhs


def prime_zeta_continuation(s: complex, M: int) -> complex:
    """Prime zeta P(s) continued into sigma > 1/2 by Moebius inversion:
    P(s) = sum_{n<=M, n squarefree} mu(n)/n * log zeta(ns).

    Raises SingularityError if some dilated point ns sits on the pole of
    zeta or numerically on a zero.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise ValueError("continuation valid for Re s > 1/2 only")
    if M < 1:
        raise ValueError("M must be >= 1")
    mu = mobius_sieve(M)
    total = 0.0 + 0.0j
    for n in range(1, M + 1):
        if mu[n] == 0:
            continue
        ns = n * s
        if ns == 1.0:
            raise SingularityError("n*s hits the pole of zeta")
        z = zeta(ns)
        if abs(z.value) < 1e-8:
            raise SingularityError(f"zeta({n}*s) numerically zero; singular point")
        total += int(mu[n]) / n * complex(np.log(z.value))
    return complex(total)
