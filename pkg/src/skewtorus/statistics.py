"""Spectral statistics: level spacings and number variance by three routes.

Everything here works on the exact rational spectra of module `spectrum`.
The number variance

    Sigma^2(L) = (1/N) int_0^N (Ncal(phi + L) - Ncal(phi) - L)^2 dphi

is computed three ways that must agree:

  direct-exact   event sweep over the piecewise-constant integrand, exact
                 rational arithmetic, no tolerance at all;
  fourier        (2/pi^2) sum_k sin^2(k pi L / D) |S_D(k)|^2 / k^2 with the
                 quadratic Gauss sum S_D(k) = sum_eta exp(-2 pi i k eta^2 / D),
                 truncated at K with the tail bound reported alongside;
  closed-form    for D in {1, 2}: {L} - {L}^2, and for D in {3, 6}:
                 -8/9 + 5 F(L/3) + 2 F((L-2)/3) + 2 F((L+2)/3),
                 F(x) = {x} - {x}^2.

Note the minus sign in {L} - {L}^2: the defining integral forces it (a rigid
unit-spaced spectrum has Sigma^2(1/2) = 1/4, not 3/4), and the direct-exact
route gates it here.  A plus-sign variant of these closed forms that appears
in print fails that gate and is rejected by the acceptance tests.

Spacing distributions are exact atom lists; the circular convention closes
the spectrum with the wrap gap phi_0 + N - phi_{N-1}, so the N spacings are
nonnegative and sum to N.  Degenerate eigenphases contribute genuine atoms
at s = 0.
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import polygamma

from .diophantine import approximants_with_gcd
from .spectrum import eigenphases

# Largest sine lookup table the fourier route will build for exact L-phase
# reduction; rational L with bigger D*denominator falls back to plain floats.
_MAX_SIN_TABLE = 200_000

DEFAULT_FOURIER_K = 10_000


class UnsupportedClosedFormError(ValueError):
    """No closed form is implemented for this D."""


def _as_rational(x):
    """Exact Fraction view of x (floats convert exactly, not by rounding)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class SpacingDistribution:
    """Exact atomic spacing law: ((s, weight), ...) with weights summing to 1."""

    atoms: tuple
    source: str

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("spacing distribution needs at least one atom")
        ss = [s for s, _ in self.atoms]
        if ss != sorted(set(ss)):
            raise ValueError("atom spacings must be distinct and sorted")
        if any(s < 0 for s in ss):
            raise ValueError("spacings must be nonnegative")
        if sum(w for _, w in self.atoms) != 1:
            raise ValueError("atom weights must sum to exactly 1")


def spacings(spec):
    """Empirical circular spacing law of a spectrum, as exact atoms."""
    vals = spec.values
    if not vals:
        raise ValueError("empty spectrum")
    N = spec.N
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    gaps.append(vals[0] + N - vals[-1])
    counts = Counter(gaps)
    atoms = tuple((s, Fraction(c, N)) for s, c in sorted(counts.items()))
    return SpacingDistribution(atoms, source="empirical")


def spacing_distribution_closed(D):
    """The known spacing laws: D=1,2 rigid; D=3 three equal atoms."""
    if D in (1, 2):
        atoms = ((Fraction(1), Fraction(1)),)
    elif D == 3:
        third = Fraction(1, 3)
        atoms = ((Fraction(0), third), (Fraction(1), third), (Fraction(2), third))
    else:
        raise UnsupportedClosedFormError(f"no closed-form spacing law for D={D}")
    return SpacingDistribution(atoms, source="closed-form-D")


def counting_function(spec, phi):
    """Levels in [0, phi) of the N-periodically extended spectrum, exact."""
    phi = _as_rational(phi)
    N = spec.N
    whole = phi // N
    rem = phi - whole * N
    return whole * N + bisect_left(spec.values, rem)


def number_variance_direct(spec, L):
    """Exact number variance of one spectrum at window length L.

    The integrand (count in [phi, phi+L) minus L)^2 is piecewise constant
    with breakpoints where a level enters or leaves the window, so the
    integral is a finite sum of segment length times squared defect.
    """
    L = _as_rational(L)
    if L < 0:
        raise ValueError("L must be >= 0")
    N = spec.N
    vals = spec.values
    bps = {Fraction(0)}
    bps.update(vals)
    bps.update((v - L) % N for v in vals)
    cuts = sorted(bps)
    cuts.append(Fraction(N))
    acc = Fraction(0)
    for lo, hi in zip(cuts, cuts[1:]):
        if hi == lo:
            continue
        mid = (lo + hi) / 2
        c = counting_function(spec, mid + L) - counting_function(spec, mid)
        acc += (hi - lo) * (c - L) ** 2
    return acc / N


def gauss_sum(D, k):
    """Quadratic Gauss sum S_D(k) = sum_{eta=1}^{D} exp(-2 pi i k eta^2 / D).

    The exponent k eta^2 is reduced mod D in integer arithmetic, so equal
    residues collapse to one phase evaluation; k = 0 mod D returns exactly D.
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    counts = Counter((k * eta * eta) % D for eta in range(1, D + 1))
    return sum(c * cmath.exp(-2j * math.pi * r / D) for r, c in counts.items())


def number_variance_fourier(D, L, K=DEFAULT_FOURIER_K):
    """Truncated Gauss-sum series for Sigma^2_D(L); returns (value, bound).

    value = (2/pi^2) sum_{k=1}^{K} sin^2(k pi L / D) |S_D(k)|^2 / k^2.
    bound = (2/pi^2) D^2 sum_{k>K} 1/k^2, the exact tail via the trigamma
    function (at most 2 D^2 / (pi^2 K)).

    For rational L the phase k L / D mod 1 is reduced exactly with a lookup
    table of period D * denominator(L), so sin vanishes identically where it
    should (e.g. D = 1 at integer L gives exactly 0).
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    if K < 1:
        raise ValueError("K must be >= 1")
    g2 = np.array([abs(gauss_sum(D, r)) ** 2 for r in range(D)])
    ks = np.arange(1, K + 1, dtype=np.int64)
    Lr = _as_rational(L)
    P = D * Lr.denominator
    if P <= _MAX_SIN_TABLE:
        num = Lr.numerator % P
        tbl = np.sin(np.pi * ((np.arange(P, dtype=np.int64) * num) % P) / P) ** 2
        sin2 = tbl[ks % P]
    else:
        sin2 = np.sin(ks * (math.pi * float(L) / D)) ** 2
    value = (2 / math.pi**2) * float(np.sum(sin2 * g2[ks % D] / ks.astype(float) ** 2))
    bound = (2 / math.pi**2) * D * D * float(polygamma(1, K + 1))
    return value, bound


def number_variance_closed(D, L):
    """Closed-form Sigma^2_D(L) for D in {1, 2, 3, 6}.

    Exact for rational L (Fractions in, Fraction out); D=2 coincides with
    D=1 and D=6 with D=3.  See the module docstring for the sign note.
    """
    if isinstance(L, int):
        L = Fraction(L)

    def F(x):
        t = x - math.floor(x)
        return t - t * t

    if D in (1, 2):
        return F(L)
    if D in (3, 6):
        return Fraction(-8, 9) + 5 * F(L / 3) + 2 * F((L - 2) / 3) + 2 * F((L + 2) / 3)
    raise UnsupportedClosedFormError(f"no closed-form number variance for D={D}")


def format_law(dist):
    """Human-readable atom list, e.g. "(1/3) delta(s) + (1/3) delta(s - 1) + ...";"""
    parts = []
    for s, w in dist.atoms:
        arg = "s" if s == 0 else f"s - {s}"
        coeff = "" if w == 1 else f"({w}) "
        parts.append(f"{coeff}delta({arg})")
    return " + ".join(parts)


@dataclass(frozen=True)
class DivergenceWitness:
    """Two approximant families whose spacing laws settle on different limits.

    Along the D=1 family every member has the rigid law delta(s - 1); along
    the D=3 family every member has the three-atom law.  Two distinct
    constant subsequences means the spacing law has no limit as N grows.
    The number variance separates the same way (0 vs 2/3 at L = 1).
    """

    alpha: object
    rigid_members: tuple
    rigid_laws: tuple
    three_atom_members: tuple
    three_atom_laws: tuple

    @property
    def rigid_closed(self):
        return spacing_distribution_closed(1)

    @property
    def three_atom_closed(self):
        return spacing_distribution_closed(3)

    @property
    def all_rigid_match(self):
        want = self.rigid_closed.atoms
        return all(law.atoms == want for law in self.rigid_laws)

    @property
    def all_three_atom_match(self):
        want = self.three_atom_closed.atoms
        return all(law.atoms == want for law in self.three_atom_laws)

    @property
    def laws_distinct(self):
        return self.rigid_closed.atoms != self.three_atom_closed.atoms

    def lines(self):
        name = getattr(self.alpha, "name", "") or repr(self.alpha)
        out = [f"alpha = {name}: spacing laws along two gcd families"]
        out.append(
            "D=1 family: " + ", ".join(f"({m.a},{m.N})" for m in self.rigid_members)
        )
        for m, law in zip(self.rigid_members, self.rigid_laws):
            out.append(f"  N={m.N}: P(s) = {format_law(law)}")
        out.append(
            "D=3 family: "
            + ", ".join(f"({m.a},{m.N})" for m in self.three_atom_members)
        )
        for m, law in zip(self.three_atom_members, self.three_atom_laws):
            out.append(f"  N={m.N}: P(s) = {format_law(law)}")
        if self.rigid_members and self.three_atom_members:
            out.append(
                "constant laws: "
                f"[{format_law(self.rigid_closed)}] vs "
                f"[{format_law(self.three_atom_closed)}]"
            )
            out.append(
                "two distinct accumulation points, so P(s) has no N -> inf limit"
            )
            v1 = number_variance_closed(1, Fraction(1))
            v3 = number_variance_closed(3, Fraction(1))
            out.append(
                f"number variance at L=1 separates the same way: {v1} vs {v3}"
            )
        return out


def divergence_witness(alpha, count):
    """Build the two-family non-convergence report for a given alpha."""
    if count < 0:
        raise ValueError("count must be >= 0")
    d1 = tuple(approximants_with_gcd(alpha, 1, count))
    d3 = tuple(approximants_with_gcd(alpha, 3, count))
    laws1 = tuple(spacings(eigenphases(m)) for m in d1)
    laws3 = tuple(spacings(eigenphases(m)) for m in d3)
    return DivergenceWitness(alpha, d1, laws1, d3, laws3)


def spacing_to_csv(dist, out):
    """Write rows "s_numerator,s_denominator,weight" (weight exact, e.g. 1/3)."""
    out.write("s_numerator,s_denominator,weight\n")
    for s, w in dist.atoms:
        out.write(f"{s.numerator},{s.denominator},{w}\n")


def curve_to_csv(rows, out):
    """Write rows "L,value,method,D,truncation_bound"; bound empty if None."""
    out.write("L,value,method,D,truncation_bound\n")
    for L, value, method, D, bound in rows:
        btxt = "" if bound is None else repr(float(bound))
        out.write(f"{float(L)!r},{float(value)!r},{method},{D},{btxt}\n")
