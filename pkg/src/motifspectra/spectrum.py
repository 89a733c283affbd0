"""Dispersion relations, motif energies, level sets and level-count bounds.

A dispersion assigns an energy eps(j) to each rapidity j = 1..N-1, and a
motif's energy is the sum of eps over its 1 bits.  Dispersions come in exact
flavours (integer, rational, or symbolic-linear in an irrational coupling
constant alpha, carried as an exact integer pair (E0, E1) = coefficients of
(alpha, 1)) and a floating-point table flavour for couplings only known
numerically.  Exact energies hash and sort exactly; float energies are
deduplicated by a relative gap rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import tableau
from .motif import Motif

__all__ = [
    "HSDispersion",
    "PFDispersion",
    "FIDispersion",
    "SymbolicAlphaDispersion",
    "PolyDispersion",
    "NumericDispersion",
    "energy",
    "ground_state_energy",
    "level_set",
    "level_count_by_enumeration",
    "average_degeneracy",
    "dispersion_from_coupling",
    "level_bounds",
]

MERGE_TOL = 1e-9


def _check_rapidity(j: int, sites: int) -> None:
    if not 1 <= j <= sites - 1:
        raise ValueError(f"rapidity {j} outside 1..{sites - 1}")


@dataclass(frozen=True)
class HSDispersion:
    """Quadratic band eps(j) = j (N - j) of the trigonometric exchange chain."""

    sites: int
    exact = True

    def eps(self, j: int) -> int:
        _check_rapidity(j, self.sites)
        return j * (self.sites - j)


@dataclass(frozen=True)
class PFDispersion:
    """Linear band eps(j) = j of the rational (oscillator) exchange chain."""

    sites: int
    exact = True

    def eps(self, j: int) -> int:
        _check_rapidity(j, self.sites)
        return j


@dataclass(frozen=True)
class FIDispersion:
    """Band eps(j) = j (alpha + j - 1) of the hyperbolic chain, rational alpha."""

    sites: int
    alpha: Fraction
    exact = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError(f"need alpha > 0, got {self.alpha}")

    def eps(self, j: int) -> Fraction:
        _check_rapidity(j, self.sites)
        return j * (self.alpha + j - 1)


@dataclass(frozen=True)
class SymbolicAlphaDispersion:
    """Same band with alpha kept symbolic; energies are pairs (E0, E1)."""

    sites: int
    exact = True

    def eps(self, j: int) -> tuple[int, int]:
        _check_rapidity(j, self.sites)
        return (j, j * (j - 1))


@dataclass(frozen=True)
class PolyDispersion:
    """eps(j) = sum of weight * N^r * j^s over the given (r, s, weight) terms."""

    sites: int
    coeffs: tuple[tuple[int, int, Fraction], ...]

    exact = True

    def __post_init__(self) -> None:
        terms = tuple((int(r), int(s), Fraction(w)) for r, s, w in self.coeffs)
        if any(r < 0 or s < 0 for r, s, _ in terms):
            raise ValueError("powers must be nonnegative")
        object.__setattr__(self, "coeffs", terms)

    def eps(self, j: int) -> Fraction:
        _check_rapidity(j, self.sites)
        return sum((w * self.sites**r * j**s for r, s, w in self.coeffs), Fraction(0))


@dataclass(frozen=True)
class NumericDispersion:
    """Tabulated float band; table[j - 1] holds eps(j) for j = 1..N-1."""

    sites: int
    table: tuple[float, ...]

    exact = False

    def __post_init__(self) -> None:
        if len(self.table) != self.sites - 1:
            raise ValueError(f"table must have {self.sites - 1} entries")
        object.__setattr__(self, "table", tuple(float(x) for x in self.table))

    def eps(self, j: int) -> float:
        _check_rapidity(j, self.sites)
        return self.table[j - 1]


def energy(motif: Motif, disp) -> int | Fraction | float | tuple[int, int]:
    """Sum of eps over the motif's rapidities."""
    if motif.sites != disp.sites:
        raise ValueError(f"motif has {motif.sites} sites, dispersion {disp.sites}")
    if isinstance(disp, SymbolicAlphaDispersion):
        e0 = e1 = 0
        for j in motif.rapidities():
            e0 += j
            e1 += j * (j - 1)
        return (e0, e1)
    total = 0
    for j in motif.rapidities():
        total += disp.eps(j)
    return total


def ground_state_energy(disp) -> int | Fraction | float | tuple[int, int]:
    """Energy of the all-ones motif: the reflection pivot between dual contexts."""
    return energy(Motif((1 << (disp.sites - 1)) - 1, disp.sites), disp)


def _merge_float_levels(
    pairs: list[tuple[float, int]], merge_tol: float
) -> list[tuple[float, int]]:
    pairs.sort()
    merged: list[tuple[float, int]] = []
    members: list[float] = []
    deg = 0
    last = None
    for e, d in pairs:
        if last is not None and e - last < merge_tol * max(1.0, abs(e)):
            members.append(e)
            deg += d
        else:
            if members:
                merged.append((math.fsum(members) / len(members), deg))
            members = [e]
            deg = d
        last = e
    if members:
        merged.append((math.fsum(members) / len(members), deg))
    return merged


def level_set(
    N: int,
    m: int,
    n: int,
    disp,
    merge_tol: float = MERGE_TOL,
    cap: int = tableau.FIBER_CAP,
) -> list[tuple[int | Fraction | float | tuple[int, int], int]]:
    """Sorted distinct energies with their total degeneracies.

    Degeneracies come from fiber dimensions, so they sum to (m+n)^N.
    """
    if disp.sites != N:
        raise ValueError(f"dispersion is for {disp.sites} sites, not {N}")
    fibers = tableau._fiber_cache(N, m, n, cap)
    if disp.exact:
        levels: dict = {}
        for word, dim in fibers.items():
            e = energy(Motif(word, N), disp)
            levels[e] = levels.get(e, 0) + dim
        return sorted(levels.items())
    pairs = [(float(energy(Motif(word, N), disp)), dim) for word, dim in fibers.items()]
    return _merge_float_levels(pairs, merge_tol)


def level_count_by_enumeration(N: int, m: int, n: int, disp, merge_tol: float = MERGE_TOL) -> int:
    """Number of distinct energies over the valid motifs (no degeneracies).

    Unlike level_set this never touches the (m+n)^N spin space, so it reaches
    the feasibility limit of the motif enumeration instead.
    """
    import numpy as np

    from . import motif as _motif

    if disp.sites != N:
        raise ValueError(f"dispersion is for {disp.sites} sites, not {N}")
    if isinstance(disp, SymbolicAlphaDispersion):
        # pack the integer pair into one key; E1 < N^3 bounds the low field
        low = N**3
        int_keys = [j * low + j * (j - 1) for j in range(1, N)]
    else:
        vals = [disp.eps(j) for j in range(1, N)]
        int_keys = vals if all(isinstance(v, int) for v in vals) else None
    if int_keys is not None:
        seen: set[int] = set()
        for words in _motif._valid_word_blocks(N, m, n):
            acc = np.zeros(words.shape, dtype=np.int64)
            for j in range(1, N):
                acc += ((words >> (N - 1 - j)) & 1) * int_keys[j - 1]
            seen.update(np.unique(acc).tolist())
        return len(seen)
    if disp.exact:
        return len({energy(mot, disp) for mot in _motif.enumerate_motifs(N, m, n)})
    pairs = [(float(energy(mot, disp)), 1) for mot in _motif.enumerate_motifs(N, m, n)]
    return len(_merge_float_levels(pairs, merge_tol))


def average_degeneracy(levels: Sequence[tuple[object, int]]) -> Fraction:
    """Total state count over the number of distinct levels, exactly."""
    if not levels:
        raise ValueError("empty level set")
    return Fraction(sum(d for _, d in levels), len(levels))


def dispersion_from_coupling(h: Sequence[float], tol: float = 1e-12) -> NumericDispersion:
    """Band of a periodic exchange chain from its even coupling table.

    `h` has length N with h[l] the coupling at site distance l (entry 0 is
    unused); it must satisfy h[l] = h[N-l].  The band is the discrete cosine
    sum eps(j) = sum_l (1 - cos(2 pi j l / N)) h[l], which is symmetric about
    the band center.
    """
    table = [float(x) for x in h]
    N = len(table)
    if N < 2:
        raise ValueError("need at least 2 sites")
    scale = max(1.0, max(abs(x) for x in table))
    for l in range(1, N):
        if abs(table[l] - table[N - l]) > tol * scale:
            raise ValueError(f"coupling not even: h[{l}] != h[{N - l}]")
    eps = [
        math.fsum((1.0 - math.cos(2 * math.pi * j * l / N)) * table[l] for l in range(1, N))
        for j in range(1, N)
    ]
    for j in range(1, N):
        a, b = eps[j - 1], eps[N - j - 1]
        if abs(a - b) > 1e-9 * max(1.0, abs(a)):
            raise AssertionError(f"band not symmetric at j={j}: {a} vs {b}")
    return NumericDispersion(N, tuple(eps))


def _power_sum(N: int, s: int) -> int:
    return sum(j**s for j in range(1, N))


def level_bounds(disp, m: int, n: int) -> int:
    """Upper bound on the number of distinct levels for the given context.

    Closed formulas exist for the two-state chains (exact for the linear
    band); polynomial bands get the generic counting bound.
    """
    N = disp.sites
    su2like = (m, n) in ((2, 0), (0, 2))
    if isinstance(disp, PFDispersion):
        if not su2like:
            raise ValueError("closed bound requires a two-state pure context")
        return (N * N - N % 2) // 4 + 1
    if isinstance(disp, HSDispersion):
        if not su2like:
            raise ValueError("closed bound requires a two-state pure context")
        if N % 2 == 0:
            q, r = divmod(N * (N * N + 2), 12)
        else:
            q, r = divmod(N * (N * N - 1), 24)
        assert r == 0
        return q + 1
    if isinstance(disp, FIDispersion):
        if not su2like:
            raise ValueError("closed bound requires a two-state pure context")
        a, b = disp.alpha.numerator, disp.alpha.denominator
        if N % 2 == 0:
            q, r = divmod(N * (2 * b * N * N + 3 * (a - b) * N - 2 * b), 12)
        else:
            q, r = divmod((N * N - 1) * (2 * b * N + 3 * (a - b)), 12)
        assert r == 0
        return q + 1
    if isinstance(disp, SymbolicAlphaDispersion):
        if not su2like:
            raise ValueError("closed bound requires a two-state pure context")
        return N**5 // 6
    if isinstance(disp, PolyDispersion):
        denom = math.lcm(*(w.denominator for _, _, w in disp.coeffs)) if disp.coeffs else 1
        amp = sum(abs(w) for _, _, w in disp.coeffs)
        k = max((r + s for r, s, _ in disp.coeffs), default=0)
        scaled = 2 * denom * amp
        assert scaled.denominator == 1
        return (int(scaled) + 1) * N ** (k + 1)
    raise ValueError(f"no closed bound for dispersion {type(disp).__name__}")


def poly_level_bound_generic(disp: PolyDispersion) -> int:
    """Coefficient-free product bound for a polynomial band.

    Each power s contributes at most S_N(s) + 1 distinct values per distinct
    exponent r it appears with, independent of the coefficients.
    """
    N = disp.sites
    powers: dict[int, set[int]] = {}
    for r, s, _ in disp.coeffs:
        powers.setdefault(s, set()).add(r)
    bound = 1
    for s, rs in powers.items():
        bound *= (_power_sum(N, s) + 1) ** len(rs)
    return bound
