"""Number variance by three independent routes, plus the figure curves.

Sigma^2(L) measures the fluctuation of the number of eigenphases in a
window of length L.  Three routes must agree:

  direct   exact rational sweep of the counting function (the definition)
  fourier  quadratic Gauss sum series, truncated with a certified bound
  closed   piecewise-parabola formulas for D in {1, 2, 3, 6}

The script checks the agreement on a grid and then tabulates the six
curves D in {1, 2, 3, 6, 8, 9}.  If matplotlib is importable it also
writes figure1.png.
"""

from fractions import Fraction

from skewtorus import (
    Approximant,
    eigenphases,
    number_variance_closed,
    number_variance_direct,
    number_variance_fourier,
)

SPECS = {1: (8, 5), 2: (14, 10), 3: (24, 15), 6: (48, 30), 8: (24, 16), 9: (90, 63)}

print("three routes at a few windows (direct is the definition):")
for D in (1, 3, 6):
    spec = eigenphases(Approximant(*SPECS[D]))
    for L in (Fraction(1, 2), Fraction(1), Fraction(7, 3)):
        direct = number_variance_direct(spec, L)
        closed = number_variance_closed(D, L)
        fval, bound = number_variance_fourier(D, L, 20_000)
        print(f"  D={D} L={str(L):4s}  direct={str(direct):7s} closed={str(closed):7s}"
              f"  fourier={fval:.8f} (+/- {bound:.1e})")
        assert direct == closed
        assert abs(fval - float(closed)) <= bound

print("\ncurve table, L = 0 .. 9 step 1/2:")
grid = [Fraction(j, 2) for j in range(19)]
rows = {}
for D, (a, N) in SPECS.items():
    spec = eigenphases(Approximant(a, N))
    rows[D] = [float(number_variance_direct(spec, L)) for L in grid]
print("   L   " + "".join(f"D={D:<7d}" for D in rows))
for i, L in enumerate(grid):
    print(f"  {float(L):4.1f} " + "".join(f"{rows[D][i]:<9.4f}" for D in rows))

print("\nnote D=2 repeats D=1 and D=6 repeats D=3; D=8 towers above the rest.")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available, skipping figure1.png")
else:
    fine = [Fraction(j, 50) for j in range(451)]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for D, (a, N) in SPECS.items():
        spec = eigenphases(Approximant(a, N))
        ys = [float(number_variance_direct(spec, L)) for L in fine]
        ax.plot([float(L) for L in fine], ys, label=f"D={D}")
    ax.set_xlabel("L")
    ax.set_ylabel("number variance")
    ax.legend(ncol=3)
    fig.tight_layout()
    fig.savefig("figure1.png", dpi=150)
    print("wrote figure1.png")
