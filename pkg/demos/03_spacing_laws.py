"""Level-spacing laws and the non-existence of a limiting distribution.

Each approximant's spacing distribution is a finite sum of point masses,
computed here exactly.  Along a family with constant D the law is frozen:
delta(s-1) when D is 1 or 2, and (1/3)[delta(s) + delta(s-1) + delta(s-2)]
when D = 3.  For the golden rotation number both kinds of family run out to
infinity, so the spacing law oscillates between two different limits and
never settles.  divergence_witness packages that argument.
"""

from skewtorus import (
    approximants_with_gcd,
    divergence_witness,
    eigenphases,
    format_law,
    golden,
    spacings,
)

alpha = golden()

print("spacing laws along certified families (computed, not assumed):")
for D in (1, 2, 3):
    for m in approximants_with_gcd(alpha, D, 3):
        law = spacings(eigenphases(m))
        print(f"  D={D}  a/N = {m.a}/{m.N}:  P(s) = {format_law(law)}")

print("\nthe two-subsequence witness:")
for line in divergence_witness(alpha, 3).lines():
    print("  " + line)
