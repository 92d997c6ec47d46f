"""Dirichlet characters and their phases on primes.

A character mod k is built from generators of the unit group (Z/kZ)^*:
odd prime powers are cyclic with a primitive root, and 2^a (a >= 3)
splits as {+-1} x <3>.  Phases are stored as exact fractions of a full
turn and materialized to complex on demand, so repeated products never
accumulate rounding error.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

__all__ = [
    "DirichletCharacter",
    "character",
    "phase_theta",
    "CharacterZeroError",
    "UnsupportedModulusError",
]


class CharacterZeroError(Exception):
    """chi(p) = 0: the corresponding term must be omitted by the caller."""


class UnsupportedModulusError(Exception):
    """Non-principal character requested for a modulus we cannot decompose."""


def _totient(n: int) -> int:
    result = n
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            result -= result // d
        d += 1
    if n > 1:
        result -= result // n
    return result


def _primitive_root(q: int, order: int) -> int:
    """Smallest primitive root mod q (q an odd prime power or 2, 4)."""
    factors = set()
    m = order
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, order // f, q) != 1 for f in factors):
            return g
    raise UnsupportedModulusError(f"no primitive root mod {q}")


def _factorize(k: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            a = 0
            while k % d == 0:
                k //= d
                a += 1
            out.append((d, a))
        d += 1 if d == 2 else 2
    if k > 1:
        out.append((k, 1))
    return out


def _component_exponent_tables(k: int) -> tuple[list[np.ndarray], list[int]]:
    """Discrete-log tables per cyclic component of (Z/kZ)^*.

    Returns (tables, orders).  tables[c][n] is the exponent of residue n on
    the c-th generator, or -1 where gcd(n, k) > 1.
    """
    tables: list[np.ndarray] = []
    orders: list[int] = []
    for q, a in _factorize(k):
        qa = q**a
        if q == 2 and a >= 3:
            # (Z/2^aZ)^* = {+-1} x <3>
            half = 2 ** (a - 2)
            sign = -np.ones(qa, dtype=np.int64)
            expo = -np.ones(qa, dtype=np.int64)
            x = 1
            for e in range(half):
                sign[x] = 0
                expo[x] = e
                sign[(-x) % qa] = 1
                expo[(-x) % qa] = e
                x = (3 * x) % qa
            comps = [(sign, 2), (expo, half)]
        elif q == 2 and a == 2:
            tbl = -np.ones(4, dtype=np.int64)
            tbl[1], tbl[3] = 0, 1
            comps = [(tbl, 2)]
        elif q == 2 and a == 1:
            comps = [(np.array([-1, 0], dtype=np.int64), 1)]
        else:
            order = qa - qa // q
            g = _primitive_root(qa, order)
            tbl = -np.ones(qa, dtype=np.int64)
            x = 1
            for e in range(order):
                tbl[x] = e
                x = (x * g) % qa
            comps = [(tbl, order)]
        for tbl, order in comps:
            # lift the mod-q^a table to residues mod k via n -> n mod q^a
            lifted = tbl[np.arange(k) % qa]
            tables.append(lifted)
            orders.append(order)
    # kill residues sharing any factor with k
    ns = np.arange(k)
    coprime = np.array([math.gcd(int(n), k) == 1 for n in ns]) if k > 1 else np.array([True])
    for tbl in tables:
        tbl[~coprime] = -1
    return tables, orders


@dataclass(frozen=True)
class DirichletCharacter:
    """Character chi_{k,j}: periodic, completely multiplicative, |chi| in {0, 1}.

    `turns[n]` is the phase of chi(n) as an exact fraction of 2*pi, or None
    where chi(n) = 0.  j = 1 is always the principal character.
    """

    modulus: int
    index: int
    turns: tuple  # tuple[Fraction | None, ...], length = modulus
    principal: bool

    @property
    def values(self) -> np.ndarray:
        """chi on residues 0..k-1 as complex128."""
        return np.array(
            [0j if f is None else cmath.exp(2j * cmath.pi * float(f)) for f in self.turns]
        )

    def __call__(self, n: int) -> complex:
        f = self.turns[n % self.modulus]
        return 0j if f is None else cmath.exp(2j * cmath.pi * float(f))

    def turn(self, n: int):
        """Phase of chi(n) in turns (Fraction), or None if chi(n) = 0."""
        return self.turns[n % self.modulus]

    def on_primes(self, primes: np.ndarray) -> np.ndarray:
        """chi(p) for an array of primes."""
        return self.values[primes % self.modulus]


def character(modulus: int, index: int) -> DirichletCharacter:
    """Construct chi_{modulus, index}; index runs 1..totient(modulus).

    Ordering: exponent tuples on the unit-group generators in mixed radix,
    smallest primitive root per odd prime-power component.  index = 1 is
    principal for every modulus.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    phi = _totient(modulus)
    if not 1 <= index <= phi:
        raise ValueError(f"index must be in 1..{phi} for modulus {modulus}")
    if modulus == 1:
        return DirichletCharacter(1, 1, (Fraction(0),), True)

    tables, orders = _component_exponent_tables(modulus)
    # mixed-radix digits of index-1, least significant on the last component
    digits = []
    rem = index - 1
    for order in reversed(orders):
        digits.append(rem % order)
        rem //= order
    digits.reverse()

    turns: list = []
    for n in range(modulus):
        if tables[0][n] < 0:
            turns.append(None)
            continue
        f = Fraction(0)
        for tbl, order, dig in zip(tables, orders, digits):
            f += Fraction(dig * int(tbl[n]), order)
        turns.append(Fraction(f.numerator % f.denominator, f.denominator))
    return DirichletCharacter(modulus, index, tuple(turns), index == 1)


def phase_theta(chi: DirichletCharacter, p: int) -> float:
    """theta with chi(p) = e^{i theta}, principal branch in (-pi, pi]."""
    f = chi.turn(p)
    if f is None:
        raise CharacterZeroError(f"chi({p}) = 0 mod {chi.modulus}; omit this term")
    # map the turn fraction into (-1/2, 1/2]
    if f > Fraction(1, 2):
        f -= 1
    return 2.0 * math.pi * float(f)


def phases_on_primes(chi: DirichletCharacter, primes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(theta array, contributing mask) for a prime table; zeros are masked out."""
    residues = primes % chi.modulus
    theta_table = np.full(chi.modulus, np.nan)
    for n, f in enumerate(chi.turns):
        if f is not None:
            x = float(f)
            if x > 0.5:
                x -= 1.0
            theta_table[n] = 2.0 * math.pi * x
    theta = theta_table[residues]
    mask = ~np.isnan(theta)
    return theta, mask
