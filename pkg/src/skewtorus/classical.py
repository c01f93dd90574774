"""The classical skew translation and an equidistribution diagnostic.

One step maps (p, q) to (p + alpha, q + 2p) mod 1, with the q-update using
the pre-step p.  For irrational alpha the map is uniquely ergodic, so every
Birkhoff average of the character exp(2 pi i (m p + n q)) tends to its space
average 0; weyl_sum measures that decay along an orbit.  It is a diagnostic,
not a proof, and the thresholds used in tests are engineering choices.

Coordinates are reduced with `% 1`, which keeps Fractions exact; exactness
is only needed by the grid-permutation test, ordinary orbits run on floats.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class TorusPoint:
    """Point on the unit torus; both coordinates reduced mod 1 on creation."""

    p: object
    q: object

    def __post_init__(self):
        object.__setattr__(self, "p", self.p % 1)
        object.__setattr__(self, "q", self.q % 1)


def step(pt, alpha):
    """One iteration of the skew translation."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return TorusPoint(pt.p + alpha, pt.q + 2 * pt.p)


def orbit(pt0, alpha, T):
    """The first T points of the orbit, starting at pt0."""
    if T < 1:
        raise ValueError("T must be >= 1")
    pts = [pt0]
    for _ in range(T - 1):
        pts.append(step(pts[-1], alpha))
    return pts


def weyl_sum(pt0, alpha, mode, T):
    """Birkhoff average (1/T) sum_t exp(2 pi i (m p_t + n q_t)) over the orbit."""
    m, n = mode
    if m == 0 and n == 0:
        raise ValueError("mode (0,0) is the constant character; pick (m,n) != (0,0)")
    if T < 1:
        raise ValueError("T must be >= 1")
    acc = 0j
    pt = pt0
    for _ in range(T):
        acc += cmath.exp(2j * math.pi * (m * float(pt.p) + n * float(pt.q)))
        pt = step(pt, alpha)
    return acc / T


def orbit_to_csv(points, out):
    """Write rows "t,p,q" to a file object."""
    out.write("t,p,q\n")
    for t, pt in enumerate(points):
        out.write(f"{t},{float(pt.p)!r},{float(pt.q)!r}\n")
