"""Counting and locating zeta zeros from a truncated sum over primes.

The smoothed staircase N_delta(T) = theta(T)/pi + S_delta(T) + 1 steps by
one at each zero ordinate; inverting its mean part with Lambert W gives a
starting guess, and bisection on the phase equation pins the ordinate down.
"""
from eulerstrip import counting_function, generate_primes, lambert_approx, solve_zero

table = generate_primes(10_000)

print("smoothed staircase vs true zero counts:")
for T, true_count in ((10.0, 0), (20.0, 1), (50.0, 10), (100.0, 29)):
    point = counting_function(T, delta=1e-3, N=100, table=table)
    print(f"  T = {T:5.1f}: N_delta = {point.n_of_T:7.3f}  (true {true_count})")

known = [14.134725, 21.022040, 25.010858, 30.424876, 32.935062]
print("\nfirst five ordinates (reference / Lambert guess / solved):")
for n, t_ref in enumerate(known, start=1):
    guess = lambert_approx(n)
    z = solve_zero(n, delta=1e-3, N_primes=10_000, table=table)
    print(f"  n = {n}: {t_ref:10.6f}  {guess:10.6f}  {z.t:10.6f}  (dev {z.t - t_ref:+.4f})")

big = solve_zero(100_000, table=table)
print(f"\nn = 100000 -> t = {big.t:.4f}  (reference 74920.8275)")
