"""Prime tables, prime gaps, and the Moebius function.

Every sum and product in this package runs over an ordered table of the
first N primes, so the table is generated once and shared read-only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["PrimeTable", "generate_primes", "mobius", "mobius_sieve", "PrimeBudgetError"]

# Hard cap on table size: 10^8 primes would need ~0.8 GB for the int64
# array alone.  Desk-scale work stays well below this.
MAX_PRIME_COUNT = 200_000_000

_SEGMENT = 1 << 21


class PrimeBudgetError(Exception):
    """Requested prime count exceeds the configured memory budget."""


def _upper_bound(count: int) -> int:
    """Upper bound for the count-th prime (Rosser-type, valid for count >= 6)."""
    if count < 6:
        return 15
    n = float(count)
    return int(n * (math.log(n) + math.log(math.log(n)))) + 10


def _sieve_upto(limit: int) -> np.ndarray:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def _segmented_primes(count: int) -> np.ndarray:
    """First `count` primes via a segmented sieve with bounded working set."""
    limit = _upper_bound(count)
    base = _sieve_upto(int(limit**0.5) + 1)
    chunks = []
    total = 0
    lo = 2
    while lo <= limit and total < count:
        hi = min(lo + _SEGMENT, limit + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            mask[start - lo :: p] = False
            if p >= lo:
                mask[p - lo] = True
        seg = np.nonzero(mask)[0] + lo
        chunks.append(seg)
        total += len(seg)
        lo = hi
    primes = np.concatenate(chunks)[:count]
    return primes.astype(np.int64)


@dataclass(frozen=True)
class PrimeTable:
    """The first N primes and the gaps g_n = p_{n+1} - p_n.

    Immutable after construction; safe for shared concurrent reads.
    """

    primes: np.ndarray
    gaps: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "gaps", np.diff(self.primes))
        self.primes.setflags(write=False)
        self.gaps.setflags(write=False)

    def __len__(self) -> int:
        return len(self.primes)

    @property
    def log_primes(self) -> np.ndarray:
        return np.log(self.primes.astype(np.float64))


def generate_primes(count: int) -> PrimeTable:
    """Generate the first `count` primes (deterministic, exact integers)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > MAX_PRIME_COUNT:
        raise PrimeBudgetError(
            f"count={count} exceeds the table budget of {MAX_PRIME_COUNT} primes"
        )
    return PrimeTable(_segmented_primes(count))


def mobius_sieve(limit: int) -> np.ndarray:
    """mu(n) for 0 <= n <= limit by a linear sieve (mu[0] is unused, set to 0)."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    mu = np.zeros(limit + 1, dtype=np.int8)
    mu[1] = 1
    lp = np.zeros(limit + 1, dtype=np.int64)  # least prime factor
    primes: list[int] = []
    for i in range(2, limit + 1):
        if lp[i] == 0:
            lp[i] = i
            mu[i] = -1
            primes.append(i)
        for p in primes:
            if p > lp[i] or i * p > limit:
                break
            lp[i * p] = p
            mu[i * p] = 0 if i % p == 0 else -mu[i]
    return mu


def mobius(n: int) -> int:
    """Moebius function by direct factorization: 0 on squareful n, else (-1)^omega."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1 if d == 2 else 2
    if n > 1:
        result = -result
    return result
