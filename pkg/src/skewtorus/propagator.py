"""The unitary propagator of the quantized skew translation.

In the position representation the N x N matrix is

    (U_N)_{kj} = (1/N) sum_{l=0}^{N-1} exp((2 pi i / N)(l k - (l-a)^2 - (l-a) j)),

j, k = 0..N-1.  The exponent is an integer, so each entry is built from
exact residues mod N and a single table of N-th roots of unity; no phase
accumulates across the sum.  Traces of powers have a closed form: with
D = gcd(a, N) and M = N/D,

    Tr U_N^n = M delta_{n mod M, 0} sum_{eta=1}^{D}
               exp((2 pi i / N) n (-eta^2 + eta a - a^2 (M-1)(2M-1)/6)),

which this module evaluates in exact rational arithmetic alongside the
numeric matrix power, so the two routes can be compared.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DEFAULT_MAX_N = 4096


@dataclass(frozen=True, eq=False)
class Propagator:
    """Dense propagator matrix with its defining integers."""

    N: int
    a: int
    entries: np.ndarray


def build_propagator(app, max_n=DEFAULT_MAX_N):
    """Dense U_N for the approximant; O(N^3) work, guarded by max_n.

    The exponent is invariant mod N under a -> a mod N, so a is reduced
    first and the int64 intermediates stay below ~5 N^2.
    """
    N, a = app.N, app.a
    if N > max_n:
        raise ValueError(f"N={N} exceeds the dimension guard max_n={max_n}")
    ared = a % N
    k = np.arange(N, dtype=np.int64).reshape(-1, 1)
    j = np.arange(N, dtype=np.int64).reshape(1, -1)
    roots = np.exp(2j * np.pi * np.arange(N) / N)
    acc = np.zeros((N, N), dtype=complex)
    for l in range(N):
        expo = (l * k - (l - ared) ** 2 - (l - ared) * j) % N
        acc += roots[expo]
    return Propagator(N, a, acc / N)


def unitarity_defect(U):
    """Max absolute entry of U U^dagger - I."""
    G = U.entries @ U.entries.conj().T
    return float(np.max(np.abs(G - np.eye(U.N))))


def trace_power_numeric(U, n):
    """Tr(U^n) by matrix power; n = 0 returns N (identity convention)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return complex(np.trace(np.linalg.matrix_power(U.entries, n)))


def trace_powers(U, n_max):
    """[Tr U^1, ..., Tr U^n_max] with one running matrix product.

    Equivalent to trace_power_numeric at each n but O(n_max) products total,
    for sweeps over a whole range of n.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    V = U.entries
    for _ in range(n_max):
        out.append(complex(np.trace(V)))
        V = V @ U.entries
    return out


def trace_power_analytic(app, n):
    """Closed-form Tr(U^n); exactly 0 when n mod M != 0.

    Each exponent n(-eta^2 + eta a - a^2 (M-1)(2M-1)/6)/N is reduced mod 1
    as a Fraction before the single conversion to a phase.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    a, N, D, M = app.a, app.N, app.D, app.M
    if n % M:
        return 0j
    const = Fraction(a * a * (M - 1) * (2 * M - 1), 6)
    total = 0j
    for eta in range(1, D + 1):
        ex = Fraction(n) * (Fraction(eta * a - eta * eta) - const) / N
        total += cmath.exp(2j * math.pi * float(ex % 1))
    return M * total


def propagator_to_csv(U, out):
    """Write rows "k,j,re,im" row-major to a file object."""
    out.write("k,j,re,im\n")
    for k in range(U.N):
        for j in range(U.N):
            z = complex(U.entries[k, j])
            out.write(f"{k},{j},{z.real!r},{z.imag!r}\n")
