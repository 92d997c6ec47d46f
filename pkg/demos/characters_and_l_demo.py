"""Dirichlet characters as exact roots of unity, and L-values built on them.

Characters are stored with exact rational phases (fractions of a full
turn), so group identities hold bit-for-bit; the L-function evaluator then
reduces L(s, chi) to a chi-weighted combination of Hurwitz zeta values.
"""
from eulerstrip import character, l_function, zeta

chi = character(7, 2)
print("sextic character mod 7 (exact turns and complex values):")
for n in range(1, 8):
    f = chi.turn(n)
    turn = "   -" if f is None else f"{f.numerator}/{f.denominator}"
    print(f"  chi({n}) = {chi(n):+.4f}   turn = {turn}")

print("\nL-values on the sigma = 0.95 line:")
for t in (0.0, 100.0):
    r = l_function(complex(0.95, t), chi)
    print(f"  |L(0.95 + {t:g}i)| = {abs(r.value):.8f}  (est err {r.est_error:.1e})")

# the principal character mod k just strips Euler factors off zeta
s = complex(1.4, 9.0)
chi0 = character(6, 1)
lhs = l_function(s, chi0).value
rhs = zeta(s).value * (1 - 2 ** (-s)) * (1 - 3 ** (-s))
print(f"\nprincipal character mod 6 at s = {s}:")
print(f"  L(s, chi0)                 = {lhs:.12f}")
print(f"  zeta(s)(1-2^-s)(1-3^-s)    = {rhs:.12f}")
