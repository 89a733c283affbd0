"""Generalized Fibonacci numbers, characteristic roots, degeneracy formulas.

The order-m sequence starts with m-1 zeros and a single 1, after which each
term is the sum of its m predecessors.  Counts of run-constrained motifs are
shifted copies of these sequences, so the minimum average degeneracy of an
N-site chain with m local states is m^N over an m-nacci number; its large-N
behaviour is controlled by the dominant root of x^m - x^{m-1} - ... - 1.

The translation-invariant refinement for two bosonic states has its own
cubic characteristic polynomial, handled by the su2_* helpers.
"""

from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import motif as _motif

__all__ = [
    "RootData",
    "TranslationalConstants",
    "fib",
    "fib_table",
    "dominant_root",
    "characteristic_roots",
    "binet",
    "min_avg_degeneracy",
    "min_avg_degeneracy_translational",
    "min_avg_degeneracy_asymptotic",
    "min_avg_degeneracy_translational_asymptotic",
    "su2_translational_constants",
    "translational_growth_ratio",
]

_FIB_LOCK = threading.Lock()
_FIB: dict[int, list[int]] = {}


def fib_table(m: int, n_max: int) -> list[int]:
    """Order-m generalized Fibonacci numbers F_0..F_{n_max}."""
    if m < 2:
        raise ValueError(f"need order m >= 2, got {m}")
    if n_max < 0:
        raise ValueError(f"need n_max >= 0, got {n_max}")
    with _FIB_LOCK:
        vals = _FIB.setdefault(m, [0] * (m - 1) + [1])
        while len(vals) <= n_max:
            vals.append(sum(vals[-m:]))
        return vals[: n_max + 1]


def fib(m: int, n: int) -> int:
    return fib_table(m, n)[n]


def _poly(m: int, z: complex) -> complex:
    # x^m - x^{m-1} - ... - x - 1 by Horner
    acc: complex = 1
    for _ in range(m):
        acc = acc * z - 1
    return acc


def _poly_deriv(m: int, z: complex) -> complex:
    acc: complex = m
    for k in range(m - 1, 0, -1):
        acc = acc * z - k
    return acc


def dominant_root(m: int, tol: float = 1e-12, max_iter: int = 400) -> float:
    """Largest real root of the order-m characteristic polynomial.

    Fixed-point iteration of x = 2 - x^(-m) from x = 2, then Newton polish.
    """
    if m < 2:
        raise ValueError(f"need order m >= 2, got {m}")
    x = 2.0
    for _ in range(max_iter):
        nxt = 2.0 - x**-m
        if abs(nxt - x) < 1e-9:
            x = nxt
            break
        x = nxt
    for _ in range(60):
        p = _poly(m, x).real
        if abs(p) < tol:
            return x
        x -= p / _poly_deriv(m, x).real
    raise RuntimeError(f"dominant root iteration failed to reach |p| < {tol} for m={m}")


def _durand_kerner(coeffs: list[float], tol: float = 1e-13, max_iter: int = 500) -> list[complex]:
    # simultaneous Newton iteration for all roots of a monic real polynomial
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    z = [(0.4 + 0.9j) ** (k + 1) for k in range(deg)]
    for _ in range(max_iter):
        shift = 0.0
        for k in range(deg):
            p: complex = coeffs[0]
            for c in coeffs[1:]:
                p = p * z[k] + c
            q: complex = 1
            for j in range(deg):
                if j != k:
                    q *= z[k] - z[j]
            dz = p / q
            z[k] -= dz
            shift = max(shift, abs(dz))
        if shift < tol:
            break
    return z


@dataclass(frozen=True)
class RootData:
    """Characteristic-root summary for one sequence order."""

    order: int
    dominant: float
    gamma: float  # prefactor of the minimum-average-degeneracy asymptotics
    coefficient: float  # leading coefficient of the m-nacci growth
    kappa: float  # decay exponent from the subdominant root moduli
    roots: tuple[complex, ...]  # all roots, dominant last


@functools.lru_cache(maxsize=None)
def characteristic_roots(m: int, tol: float = 1e-12) -> RootData:
    lam = dominant_root(m, tol)
    gamma = m + 1 - (m - 1) / (lam - 1)
    coeff = lam ** (1 - m) / gamma
    # synthetic deflation of the characteristic polynomial by (x - lam)
    coeffs = [1.0] + [-1.0] * m
    deflated = [1.0]
    for c in coeffs[1:m]:
        deflated.append(c + lam * deflated[-1])
    sub = _durand_kerner(deflated)
    polished = []
    for z in sub:
        for _ in range(8):
            z -= _poly(m, z) / _poly_deriv(m, z)
        polished.append(z)
    kappa = -math.log(min(abs(z) for z in polished)) if polished else math.inf
    return RootData(m, lam, gamma, coeff, kappa, (*polished, complex(lam)))


def binet(m: int, n: int) -> float:
    """Closed-form order-m Fibonacci value from the characteristic roots."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    data = characteristic_roots(m)
    total = 0j
    for z in data.roots:
        total += (z - 1) / ((m + 1) * z - 2 * m) * z ** (n - m + 1)
    return total.real


def min_avg_degeneracy(N: int, m: int, n: int) -> Fraction:
    """(m+n)^N over the motif count: every chain has a level this degenerate."""
    return Fraction((m + n) ** N, _motif.count(N, m, n))


def min_avg_degeneracy_translational(N: int, m: int, n: int) -> Fraction:
    """(m+n)^N over the distinct-half count, for translation-covariant spectra."""
    if not (m and n) and (m or n) > 2:
        raise ValueError(f"no closed half count for (m, n) = ({m}, {n})")
    return Fraction((m + n) ** N, _motif.count_half(N, m, n))


def min_avg_degeneracy_asymptotic(N: int, m: int) -> float:
    """Large-N form gamma_m (m / dominant)^N of min_avg_degeneracy(N, m, 0)."""
    data = characteristic_roots(m)
    return data.gamma * (m / data.dominant) ** N


@dataclass(frozen=True)
class TranslationalConstants:
    """Constants of the two-state translation-invariant half count asymptotics."""

    root: float  # dominant root of x^3 - 2x^2 - x + 1
    odd_coeff: float
    even_coeff: float


@functools.lru_cache(maxsize=1)
def su2_translational_constants() -> TranslationalConstants:
    phi = math.atan(3 * math.sqrt(3)) / 3
    c = math.sqrt(7) * math.cos(phi)
    denom = 21 * (1 + 2 * math.cos(2 * phi))
    return TranslationalConstants(
        root=(2 / 3) * (1 + c),
        odd_coeff=4 * (1 + c) ** 2 / denom,
        even_coeff=(4 * (1 + c) ** 2 - 9) / denom,
    )


def min_avg_degeneracy_translational_asymptotic(N: int) -> float:
    """Large-N form of min_avg_degeneracy_translational(N, 2, 0)."""
    tc = su2_translational_constants()
    prefactor = math.sqrt(tc.root) / tc.odd_coeff if N % 2 else 1 / tc.even_coeff
    return prefactor * (2 / math.sqrt(tc.root)) ** N


def translational_growth_ratio() -> float:
    """Per-site growth of the translational over the generic minimum bound."""
    tc = su2_translational_constants()
    return 2 / ((math.sqrt(5) - 1) * math.sqrt(tc.root))
