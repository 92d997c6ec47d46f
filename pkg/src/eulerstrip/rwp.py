"""Random walk over the primes: partial cosine sums, their sqrt-N scaling,
and ensemble statistics over a uniformly sampled frequency multiplier.

The walk B_N(u) = sum_n cos(u * lambda_n) with lambda_n = t log p_n - theta_n
behaves like an unbiased random walk for generic t, because the lambda_n are
linearly independent over the rationals.  Scaling a large ensemble of walks
by sqrt(N) produces a bell-shaped histogram; replacing p_n by the smooth
stand-in n log n destroys the effect.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter, phases_on_primes
from .primes import PrimeTable, generate_primes

__all__ = [
    "RwpTrace",
    "EnsembleStats",
    "rwp_series",
    "uniform_walk",
    "prime_ensemble",
    "smooth_estimate",
]

# Histogram layout shared by all ensembles (covers the visual bulk of the
# standardized walk distribution).
HIST_BINS = 101
HIST_RANGE = (-4.0, 4.0)

_CHUNK = 512  # u-samples per block in the ensemble cosine evaluation


@dataclass(frozen=True)
class RwpTrace:
    """One walk: steps b_n = cos(u (t log p_n - theta_n)) and partial sums."""

    t: float
    chi: DirichletCharacter
    u: float
    terms: np.ndarray
    partials: np.ndarray
    degraded: bool

    def __post_init__(self):
        self.terms.setflags(write=False)
        self.partials.setflags(write=False)

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class EnsembleStats:
    """Standardized end-points B_N(u_i)/sqrt(N) for u_i ~ U[0, 2pi].

    `variance` is the plain sample variance.  `bulk_std` is the standard
    deviation of the samples falling inside the histogram range; rare
    near-zero u draws make every cosine close to 1 and contribute
    end-points of order sqrt(N), which dominate the raw variance without
    being visible in the histogram.
    """

    samples: np.ndarray
    mean: float
    variance: float
    bulk_std: float
    hist_edges: np.ndarray
    hist_counts: np.ndarray
    seed: int
    ensemble_size: int

    def __post_init__(self):
        self.samples.setflags(write=False)
        self.hist_edges.setflags(write=False)
        self.hist_counts.setflags(write=False)


def _lambdas(
    t: float,
    chi: DirichletCharacter,
    N: int,
    degraded: bool,
    table: PrimeTable | None,
) -> np.ndarray:
    """Frequencies lambda_n = t log p_n - theta_n over contributing primes."""
    if table is None:
        table = generate_primes(N)
    if len(table) < N:
        raise ValueError(f"prime table holds {len(table)} primes, need {N}")
    primes = table.primes[:N]
    theta, mask = phases_on_primes(chi, primes)
    if degraded:
        n = np.arange(1, N + 1, dtype=float)
        logs = np.log(n * np.log(n), where=n > 1, out=np.full(N, math.log(2.0)))
    else:
        logs = np.log(primes.astype(float))
    lam = t * logs[mask] - theta[mask]
    return lam


def rwp_series(
    t: float,
    chi: DirichletCharacter,
    N: int,
    u: float = 1.0,
    degraded: bool = False,
    table: PrimeTable | None = None,
) -> RwpTrace:
    """Walk trace for one frequency multiplier u.

    Primes with chi(p) = 0 are omitted, so the trace may be shorter than N.
    Degraded mode swaps p_n for the smooth surrogate n log n (n >= 2,
    keeping p_1 = 2), which shares the prime density but not the
    irrationality structure.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    lam = _lambdas(t, chi, N, degraded, table)
    terms = np.cos(u * lam)
    return RwpTrace(t, chi, float(u), terms, np.cumsum(terms), degraded)


def _make_stats(samples: np.ndarray, seed: int) -> EnsembleStats:
    counts, edges = np.histogram(
        np.clip(samples, *HIST_RANGE), bins=HIST_BINS, range=HIST_RANGE
    )
    bulk = samples[(samples >= HIST_RANGE[0]) & (samples <= HIST_RANGE[1])]
    bulk_std = float(bulk.std()) if len(bulk) else 0.0
    return EnsembleStats(
        samples=samples,
        mean=float(samples.mean()),
        variance=float(samples.var()),
        bulk_std=bulk_std,
        hist_edges=edges,
        hist_counts=counts,
        seed=seed,
        ensemble_size=len(samples),
    )


def _uniforms(seed: int, size: int) -> np.ndarray:
    """Reproducible U[0,1) draws from a counter-based generator."""
    return np.random.Generator(np.random.Philox(key=seed)).random(size)


def uniform_walk(N: int, E: int, seed: int = 0) -> EnsembleStats:
    """Reference ensemble: R_N/sqrt(N) for iid steps uniform on [-1, 1].

    Per-step variance is 1/3, so the standardized end-points have variance
    1/3 for every N; this is the clean CLT baseline the prime walk is
    compared against.
    """
    if N < 1 or E < 1:
        raise ValueError("N and E must be >= 1")
    gen = np.random.Generator(np.random.Philox(key=seed))
    samples = np.empty(E)
    root_n = math.sqrt(N)
    for lo in range(0, E, _CHUNK):
        rows = min(_CHUNK, E - lo)
        steps = 2.0 * gen.random((rows, N)) - 1.0
        samples[lo : lo + rows] = steps.sum(axis=1) / root_n
    return _make_stats(samples, seed)


def prime_ensemble(
    t: float,
    chi: DirichletCharacter,
    N: int,
    E: int,
    seed: int = 0,
    degraded: bool = False,
    table: PrimeTable | None = None,
) -> EnsembleStats:
    """Ensemble of standardized walks B_N(u_i)/sqrt(N), u_i ~ U[0, 2pi].

    One u is drawn per walk and shared by all of its cosine terms; samples
    are independent only through the u_i.  Deterministic for fixed
    (seed, E, N, t, chi, degraded).
    """
    if N < 1 or E < 1:
        raise ValueError("N and E must be >= 1")
    lam = _lambdas(t, chi, N, degraded, table)
    us = 2.0 * math.pi * _uniforms(seed, E)
    root_n = math.sqrt(len(lam))
    samples = np.empty(E)
    two_pi = 2.0 * math.pi
    for lo in range(0, E, _CHUNK):
        block = us[lo : lo + _CHUNK]
        # range-reduce the phase in double precision, then take the cosine
        # in single precision: the vectorized float32 cosine is an order of
        # magnitude faster, and on a reduced argument its rounding adds
        # < 1e-4 absolute error to B_N (< 1e-6 per standardized sample)
        ph = np.multiply.outer(block, lam)
        ph -= two_pi * np.rint(ph * (1.0 / two_pi))
        ph32 = ph.astype(np.float32)
        np.cos(ph32, out=ph32)
        samples[lo : lo + len(block)] = ph32.sum(axis=1, dtype=np.float64) / root_n
    return _make_stats(samples, seed)


def smooth_estimate(t: float, N: int, table: PrimeTable | None = None) -> float:
    """Closed-form growth estimate (p_N/log p_N) (t/(1+t^2)) sin(t log p_N).

    Captures the secular envelope of B_N once N is far beyond the t^2
    cutoff; useless as a pointwise predictor below it.
    """
    if t == 0.0:
        raise ValueError("the smooth estimate vanishes identically at t = 0")
    if table is None:
        table = generate_primes(N)
    if len(table) < N:
        raise ValueError(f"prime table holds {len(table)} primes, need {N}")
    p = float(table.primes[N - 1])
    lp = math.log(p)
    return (p / lp) * (t / (1.0 + t * t)) * math.sin(t * lp)
