"""Truncated Euler products inside the critical strip.

Walks the product P_N(s) = prod_{n<=N} (1 - p_n^{-s})^{-1} along an N
ladder at s = 0.95 + 100i and watches the running Cesaro mean settle on
|zeta(s)|, then repeats the exercise for a non-principal Dirichlet
character, where no t^2 truncation budget applies.
"""
import warnings

import numpy as np

from eulerstrip import (
    character,
    cutoff,
    generate_primes,
    l_function,
    partial_product,
    zeta,
)

s = complex(0.95, 100.0)
table = generate_primes(1_000_000)
triv = character(1, 1)

print(f"s = {s},  truncation budget N_c = {cutoff(s.imag)}")
print(f"|zeta(s)| = {abs(zeta(s).value):.6f}\n")

print(f"{'N':>9}  {'|P_N|':>9}  {'|<P>_N|':>9}")
with warnings.catch_warnings():
    warnings.simplefilter("ignore")  # we deliberately run past the budget
    trace = partial_product(s, triv, 1_000_000, table=table)
for N in (1_000, 10_000, 100_000, 1_000_000):
    p = abs(trace.partial_products[N - 1])
    a = abs(trace.cesaro[N - 1])
    print(f"{N:>9}  {p:9.6f}  {a:9.6f}")

chi = character(7, 2)
print(f"\nnon-principal character mod 7, |L(s, chi)| = {abs(l_function(s, chi).value):.7f}")
trace = partial_product(s, chi, 100_000, table=table)
for N in (1_000, 10_000, 100_000):
    print(f"{N:>9}  {abs(trace.partial_products[N - 1]):9.7f}  {abs(trace.cesaro[N - 1]):9.7f}")

# below sigma = 1/2 + something the wheels come off: the product cannot
# follow zeta no matter how many primes it is fed
s_bad = complex(0.4, 500.0)
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    bad = partial_product(s_bad, triv, 10_000, table=table)
target = abs(zeta(s_bad).value)
dev = np.abs(np.abs(bad.partial_products) - target) / target
print(f"\nat s = {s_bad}: max relative deviation from |zeta| = {dev.max():.2f}")
