"""Dirichlet character construction, phases, and group-theoretic identities."""
import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from eulerstrip import (
    CharacterZeroError,
    character,
    generate_primes,
    phase_theta,
    phases_on_primes,
)
from eulerstrip.characters import _totient


def test_modulus_one_is_constant_one():
    chi = character(1, 1)
    assert chi.principal
    assert chi(0) == 1
    assert chi(17) == 1


def test_index_one_is_principal():
    for k in (2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 24):
        chi = character(k, 1)
        assert chi.principal
        for n in range(1, k + 1):
            expected = 1 if math.gcd(n, k) == 1 else 0
            assert chi(n) == expected


def test_mod7_index2_reference_table():
    """The standard sextic character mod 7 (generator 3 mapped to e^{i pi/3})."""
    chi = character(7, 2)
    expected = {
        1: 1,
        2: cmath.exp(2j * cmath.pi / 3),
        3: cmath.exp(1j * cmath.pi / 3),
        4: cmath.exp(-2j * cmath.pi / 3),
        5: cmath.exp(-1j * cmath.pi / 3),
        6: -1,
        7: 0,
    }
    for n, v in expected.items():
        assert chi(n) == pytest.approx(v, abs=1e-15)


def test_mod7_index2_exact_turns():
    chi = character(7, 2)
    assert chi.turn(3) == Fraction(1, 6)
    assert chi.turn(2) == Fraction(1, 3)
    assert chi.turn(6) == Fraction(1, 2)
    assert chi.turn(7) is None


@pytest.mark.parametrize("k", list(range(1, 102)))
def test_multiplicativity_exhaustive(k):
    """chi(mn) = chi(m) chi(n) for every character and residue pair mod k."""
    phi = _totient(k)
    m = np.arange(k)
    prod = np.multiply.outer(m, m) % k
    for j in range(1, phi + 1):
        vals = character(k, j).values
        assert np.allclose(np.outer(vals, vals), vals[prod], atol=1e-12)


@pytest.mark.parametrize("k", [3, 4, 5, 7, 8, 9, 12, 16, 21, 40])
def test_characters_distinct_and_complete(k):
    phi = _totient(k)
    seen = {tuple(np.round(character(k, j).values, 9)) for j in range(1, phi + 1)}
    assert len(seen) == phi


@pytest.mark.parametrize("k", [3, 5, 7, 9, 12, 16])
def test_nonprincipal_sums_to_zero(k):
    # orthogonality with the trivial character
    phi = _totient(k)
    for j in range(2, phi + 1):
        assert abs(character(k, j).values.sum()) < 1e-12


def test_periodicity():
    chi = character(12, 3)
    for n in range(40):
        assert chi(n) == chi(n + 12)


def test_zero_off_units():
    chi = character(12, 2)
    for n in range(12):
        if math.gcd(n, 12) != 1:
            assert chi(n) == 0
            assert chi.turns[n] is None


def test_values_are_roots_of_unity():
    chi = character(9, 4)
    order = _totient(9)
    for n in range(9):
        v = chi(n)
        if v != 0:
            assert abs(v**order - 1) < 1e-12


def test_phase_theta_principal_branch():
    chi = character(7, 2)
    assert phase_theta(chi, 3) == pytest.approx(math.pi / 3)
    assert phase_theta(chi, 4) == pytest.approx(-2 * math.pi / 3)
    assert phase_theta(chi, 6) == pytest.approx(math.pi)  # +pi, not -pi
    with pytest.raises(CharacterZeroError):
        phase_theta(chi, 7)


def test_phases_on_primes_matches_scalar():
    chi = character(12, 4)
    primes = generate_primes(200).primes
    theta, mask = phases_on_primes(chi, primes)
    for i, p in enumerate(primes):
        if chi(int(p)) == 0:
            assert not mask[i]
        else:
            assert mask[i]
            assert theta[i] == pytest.approx(phase_theta(chi, int(p)))


def test_on_primes_matches_call():
    chi = character(7, 2)
    primes = generate_primes(100).primes
    vals = chi.on_primes(primes)
    assert all(vals[i] == chi(int(p)) for i, p in enumerate(primes))


def test_index_validation():
    with pytest.raises(ValueError):
        character(7, 0)
    with pytest.raises(ValueError):
        character(7, 7)  # totient(7) = 6
    with pytest.raises(ValueError):
        character(0, 1)
