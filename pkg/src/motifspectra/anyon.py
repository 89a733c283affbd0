"""Statistical weights of motif excitations and exclusion-statistics fits.

The number of motifs of N-1 sites with exactly k ones, under the constraint
that no m consecutive ones appear, is a polynomial combinatorial weight
w_k(N).  Summed over k these reproduce the generalized Fibonacci count, and
for large N the weights behave like an ideal gas of particles with a
fractional exclusion statistics parameter that the fit below extracts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fibnum import fib

__all__ = [
    "IdentityError",
    "haldane_weight",
    "WeightTable",
    "motif_weights",
    "verify_identities",
    "FitResult",
    "statistics_fit",
]


class IdentityError(AssertionError):
    """A combinatorial identity that must hold exactly failed to."""


def haldane_weight(orbitals: int, k: int, g: Fraction | int) -> int:
    """Number of k-particle states in `orbitals` orbitals at statistics g.

    This is the binomial C(orbitals - (g - 1)(k - 1), k); the top argument
    must come out integral, and a negative top means no states.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k == 0:
        return 1
    top = Fraction(orbitals) - Fraction(g) * (k - 1) + (k - 1)
    if top.denominator != 1:
        raise ValueError(f"non-integral binomial argument {top} for g = {g}, k = {k}")
    t = int(top)
    if t < 0:
        return 0
    return math.comb(t, k) if t >= k else 0


@dataclass(frozen=True)
class WeightTable:
    """Counts of valid motifs by number of ones, for one (sites, order)."""

    sites: int
    order: int
    weights: tuple[int, ...]

    def weight(self, k: int) -> int:
        if 0 <= k < len(self.weights):
            return self.weights[k]
        return 0

    def total(self) -> int:
        return sum(self.weights)

    def kmax(self) -> int:
        return len(self.weights) - 1


def _weight_terms(N: int, m: int, k: int, fact: list[int]) -> int:
    """Sum over cluster-size profiles of k ones with no run of length m.

    A profile assigns j_i clusters of i+1 consecutive ones (i = 1..m-2, so
    clusters of size 2..m-1); the remaining ones are isolated.  Clusters and
    singletons are then placed among the zeros multinomially.
    """
    total = 0

    def rec(i: int, used: int, weighted: int, denom: int) -> None:
        nonlocal total
        if i > m - 2:
            j0 = k - used
            if j0 < 0:
                return
            t1 = N - 2 * k + weighted
            if t1 < 0:
                return
            total += fact[N - k] // (fact[t1] * fact[j0] * denom)
            return
        cap = (k - used) // (i + 1)
        for j in range(cap + 1):
            rec(i + 1, used + (i + 1) * j, weighted + i * j, denom * fact[j])

    rec(1, 0, 0, 1)
    return total


def _single_weight(N: int, m: int, k: int) -> int:
    """One weight w_k(N) without building the whole table."""
    if k < 0 or k > (m - 1) * N // m:
        return 0
    if m == 2:
        return math.comb(N - k, k) if N - k >= k else 0
    fact = [math.factorial(i) for i in range(N + 1)]
    return _weight_terms(N, m, k, fact)


def motif_weights(N: int, m: int) -> WeightTable:
    """Weights w_k = number of valid motifs on N sites with k ones, order m.

    Motifs here have N - 1 slots; validity forbids m consecutive ones.  For
    m = 2 each weight is the single binomial C(N - k, k).
    """
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    kmax = (m - 1) * N // m
    fact = [math.factorial(i) for i in range(N + 1)]
    weights = []
    for k in range(kmax + 1):
        if m == 2:
            weights.append(math.comb(N - k, k) if N - k >= k else 0)
        else:
            weights.append(_weight_terms(N, m, k, fact))
    while len(weights) > 1 and weights[-1] == 0:
        weights.pop()
    return WeightTable(N, m, tuple(weights))


def _diagonal_total(N: int, m: int, fact: list[int]) -> int:
    """Total motif count as a single sum over cluster profiles of all sizes."""
    total = 0

    def rec(i: int, slots: int, ones: int, denom: int) -> None:
        nonlocal total
        if i > m - 1:
            total += fact[N - ones] // (fact[N - slots] * denom)
            return
        j = 0
        while slots + (i + 1) * j <= N:
            rec(i + 1, slots + (i + 1) * j, ones + i * j, denom * fact[j])
            j += 1

    rec(1, 0, 0, 1)
    return total


def verify_identities(m: int, N: int) -> dict[str, int]:
    """Check that the weight table satisfies its two exact sum rules.

    The weights must total both the diagonal single-sum form and the
    generalized Fibonacci number counting all valid motifs.  Raises
    IdentityError on any mismatch; returns the common totals.
    """
    table = motif_weights(N, m)
    total = table.total()
    fact = [math.factorial(i) for i in range(N + 1)]
    diagonal = _diagonal_total(N, m, fact)
    fibonacci = fib(m, N + m - 1)
    if total != diagonal:
        raise IdentityError(f"weight total {total} != diagonal form {diagonal} at m={m}, N={N}")
    if total != fibonacci:
        raise IdentityError(f"weight total {total} != fibonacci {fibonacci} at m={m}, N={N}")
    return {"total": total, "diagonal": diagonal, "fibonacci": fibonacci}


@dataclass(frozen=True)
class FitResult:
    """Exclusion-statistics estimate from two orbital counts."""

    k: int
    samples: tuple[tuple[int, Fraction], ...]
    g_infinity: Fraction
    g: Fraction


def statistics_fit(m: int, k: int, orbital_counts: tuple[int, int]) -> FitResult:
    """Fit the statistics parameter from the k-one weights at two sizes.

    For each orbital count the deviation of the weight from the free value
    orbitals^k / k! is reduced to G = (orbitals / (k (k - 1))) times
    (k! w_k / orbitals^k - 1); a two-point Richardson extrapolation in
    1/orbitals gives the limit, and g = 1/2 - G_infinity.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    n1, n2 = orbital_counts
    if n1 == n2 or n1 < 2 * k or n2 < 2 * k:
        raise ValueError(f"need two distinct orbital counts >= {2 * k}, got {orbital_counts}")
    samples = []
    for orbitals in (n1, n2):
        w = _single_weight(orbitals + 1, m, k)
        ratio = Fraction(math.factorial(k) * w, orbitals**k)
        G = Fraction(orbitals, k * (k - 1)) * (ratio - 1)
        samples.append((orbitals, G))
    (a1, g1), (a2, g2) = samples
    g_inf = Fraction(a2 * g2 - a1 * g1, a2 - a1)
    return FitResult(k, tuple(samples), g_inf, Fraction(1, 2) - g_inf)
