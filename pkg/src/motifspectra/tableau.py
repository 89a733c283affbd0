"""Spin configurations, their descent map onto motifs, and fiber dimensions.

A configuration s = (s_1, ..., s_N) takes values in {-n, ..., m-1}; negative
values are fermionic.  Its motif has d_i = 1 exactly when s_{i+1} < s_i or
s_i = s_{i+1} < 0.  The number of configurations mapping onto a motif is the
dimension of the degenerate multiplet attached to it, and summing those
dimensions over all valid motifs recovers (m+n)^N.

Motifs are equivalent to border strips: the positions of the 1 bits cut
(1, ..., N) into column heights read right to left.
"""

from __future__ import annotations

import functools
from itertools import pairwise

import numpy as np

from .motif import InfeasibleSizeError, Motif, _check_context

__all__ = [
    "FIBER_CAP",
    "validate_spins",
    "motif_of_spins",
    "strip_of_motif",
    "motif_of_strip",
    "dual_spins",
    "fiber_sizes",
    "module_dimension",
    "tableau_lines",
]

FIBER_CAP = 1 << 24
_CHUNK = 1 << 20


def validate_spins(spins, m: int, n: int) -> tuple[int, ...]:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"need m, n >= 0 with m + n >= 1, got m={m}, n={n}")
    s = tuple(spins)
    if not s:
        raise ValueError("need at least one spin")
    for x in s:
        if not -n <= x <= m - 1:
            raise ValueError(f"spin {x} outside {{-{n}, ..., {m - 1}}}")
    return s


def motif_of_spins(spins, m: int, n: int) -> Motif:
    """Motif of a spin configuration: descents, with ties breaking by sign."""
    s = validate_spins(spins, m, n)
    bits = [1 if (b < a or (a == b and a < 0)) else 0 for a, b in pairwise(s)]
    return Motif.from_bits(bits)


def strip_of_motif(motif: Motif) -> tuple[int, ...]:
    """Column heights of the border strip cut by the motif's rapidities."""
    cuts = (0, *motif.rapidities(), motif.sites)
    return tuple(b - a for a, b in pairwise(cuts))


def motif_of_strip(columns) -> Motif:
    """Inverse of strip_of_motif."""
    cols = tuple(columns)
    if not cols or any(k < 1 for k in cols):
        raise ValueError(f"column heights must be positive, got {cols!r}")
    n_sites = sum(cols)
    word = 0
    pos = 0
    for k in cols[:-1]:
        pos += k
        word |= 1 << (n_sites - 1 - pos)
    return Motif(word, n_sites)


def dual_spins(spins) -> tuple[int, ...]:
    """s -> -s - 1; conjugates the context (m, n) -> (n, m) and the motif."""
    return tuple(-x - 1 for x in spins)


def _fiber_counts(N: int, m: int, n: int, cap: int) -> np.ndarray:
    base = m + n
    total = base**N
    if total > cap:
        raise InfeasibleSizeError(f"(m+n)^N = {total} exceeds cap {cap}")
    counts = np.zeros(1 << (N - 1), dtype=np.int64)
    if N == 1:
        counts[0] = base
        return counts
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        word = np.zeros(idx.shape, np.int64)
        prev = idx % base - n
        for i in range(1, N):
            cur = (idx // base**i) % base - n
            bit = (cur < prev) | ((cur == prev) & (cur < 0))
            word |= bit.astype(np.int64) << (N - 1 - i)
            prev = cur
        counts += np.bincount(word, minlength=counts.size)
    return counts


@functools.lru_cache(maxsize=16)
def _fiber_cache(N: int, m: int, n: int, cap: int) -> dict[int, int]:
    _check_context(m, n)
    counts = _fiber_counts(N, m, n, cap)
    (nz,) = counts.nonzero()
    return dict(zip(nz.tolist(), counts[nz].tolist()))


def fiber_sizes(N: int, m: int, n: int, cap: int = FIBER_CAP) -> dict[int, int]:
    """Map from motif word to the number of spin configurations above it."""
    return dict(_fiber_cache(N, m, n, cap))


def module_dimension(motif: Motif, m: int, n: int, cap: int = FIBER_CAP) -> int:
    """Multiplet dimension of a motif; 0 when the motif is invalid for (m, n)."""
    return _fiber_cache(motif.sites, m, n, cap).get(motif.word, 0)


def tableau_lines(spins, m: int, n: int, width: int = 4) -> list[str]:
    """Debug rendering of the border-strip filling defined by a spin sequence."""
    s = validate_spins(spins, m, n)
    row = col = 0
    cells = {(0, 0): s[0]}
    for a, b in pairwise(s):
        if b > a or (a == b and a >= 0):
            row += 1
        else:
            col += 1
        cells[(row, col)] = b
    ncols = col + 1
    nrows = row + 1
    lines = []
    for r in range(nrows):
        slots = []
        for c in range(ncols - 1, -1, -1):
            slots.append(f"{cells[(r, c)]:>{width}}" if (r, c) in cells else " " * width)
        lines.append("".join(slots).rstrip())
    return lines
