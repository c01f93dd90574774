"""Continued fractions, certified convergents, and gcd-constrained approximants.

Everything downstream keys off a rational a/N close to the irrational
rotation number alpha.  This script shows how the library produces those
rationals with proofs attached: each convergent comes with the classical
|alpha - p/q| < 1/q^2 certificate, and nearest_approximant(N) certifies
|alpha - a/N| < 1/(2N) or refuses.
"""

from fractions import Fraction

from skewtorus import (
    approximants_with_gcd,
    bracket,
    convergents,
    golden,
    nearest_approximant,
    parse_alpha,
    sqrt2,
)

alpha = golden()
print(f"alpha = {alpha.name}, cf prefix {alpha.cf[:10]}...")

lo, hi = bracket(alpha)
print(f"certified bracket: {lo} < alpha < {hi}  (width {float(hi - lo):.3e})")

print("\nfirst convergents p/q with certified |alpha - p/q| < 1/q^2:")
for p, q in convergents(alpha, 8):
    err = abs(float(Fraction(p, q)) - (1 + 5**0.5) / 2)
    print(f"  {p}/{q}   error ~ {err:.2e}   1/q^2 = {1 / q**2:.2e}")

print("\nnearest a/N for a few fixed N:")
for N in (5, 8, 12, 55, 100):
    app = nearest_approximant(alpha, N)
    print(f"  N={N:3d}  ->  a={app.a:3d}   gcd D={app.D}  M={app.M}")

print("\napproximant families with a prescribed gcd D = gcd(a, N):")
for D in (1, 2, 3):
    fam = approximants_with_gcd(alpha, D, 3)
    print(f"  D={D}: " + ", ".join(f"{m.a}/{m.N}" for m in fam))

other = parse_alpha("sqrt2")
print(f"\nsame machinery for {other.name}: D=2 family "
      + ", ".join(f"{m.a}/{m.N}" for m in approximants_with_gcd(sqrt2(), 2, 3)))
