"""The prime cosine walk and its square-root-of-N envelope.

B_N = sum_{n<=N} cos(t log p_n) behaves like a random walk because the
numbers log p_n are linearly independent over the rationals; the smooth
surrogate n log n shares the density of the primes but not that
independence, and the walk built on it is visibly different in ensemble.
"""
import numpy as np
import scipy.stats

from eulerstrip import character, generate_primes, prime_ensemble, rwp_series, uniform_walk

t = 1e3
N = 30_000
table = generate_primes(N)
triv = character(1, 1)

trace = rwp_series(t, triv, N, table=table)
ratio = np.abs(trace.partials) / np.sqrt(np.arange(1, N + 1))
print(f"single walk at t = {t:g}: max |B_n|/sqrt(n) = {ratio.max():.3f}  (band: 3)")

# character phases keep the walk honest even at t = 0
chi = character(7, 2)
trace0 = rwp_series(0.0, chi, N, table=table)
r0 = np.abs(trace0.partials) / np.sqrt(np.arange(1, len(trace0) + 1))
print(f"chi mod 7 walk at t = 0: max |B_n|/sqrt(n) = {r0.max():.3f}  (band: 5)")

# ensemble over u ~ U[0, 2pi): a bell shape with spread ~ 0.578
E = 20_000
stats = prime_ensemble(t, triv, N, E, seed=0, table=table)
base = uniform_walk(N, E, seed=0)
print(f"\nensemble of {E} walks, N = {N}:")
print(f"  prime walk   bulk std = {stats.bulk_std:.4f}, mean = {stats.mean:+.4f}")
print(f"  uniform walk      std = {np.sqrt(base.variance):.4f}  (CLT: 1/sqrt(3) = 0.5774)")

degraded = prime_ensemble(t, triv, N, E, seed=0, degraded=True, table=table)
for name, st in (("prime", stats), ("n log n", degraded)):
    bulk = st.samples[np.abs(st.samples) <= 4.0]
    res = scipy.stats.anderson(bulk, dist="norm")
    verdict = "consistent with" if res.statistic < res.critical_values[-1] else "rejects"
    print(f"  {name:8} ensemble: Anderson-Darling A2 = {res.statistic:8.1f} -> {verdict} normality")
