"""Run-length-constrained bit motifs: validation, enumeration, exact counts.

A motif on N sites is a bit vector (d_1, ..., d_{N-1}).  In a mixed local
context (m bosonic and n fermionic states, mn != 0) every bit vector occurs.
In a purely bosonic context no m consecutive 1s may appear, and in a purely
fermionic one no n consecutive 0s; complementing the bits swaps the two
families, and counting either one yields shifted m-nacci numbers.

Motifs are packed into plain integers with d_1 in the highest bit, so that
ascending word order coincides with lexicographic order on the bit sequence
and enumeration can be split into contiguous, independently traversable
word ranges.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "InfeasibleSizeError",
    "Motif",
    "HalfMotif",
    "is_valid",
    "is_valid_word",
    "enumerate_motifs",
    "count",
    "count_by_enumeration",
    "dual",
    "half",
    "count_half",
    "count_half_by_enumeration",
    "su2_half_count_series",
]

_BLOCK = 1 << 20
_MAX_ENUM_BITS = 62  # candidate words are generated as signed 64-bit blocks


class InfeasibleSizeError(ValueError):
    """Raised when a brute-force path would exceed its configured cap."""


def _check_context(m: int, n: int) -> None:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"need m, n >= 0 with m + n >= 1, got m={m}, n={n}")


def _has_ones_run(word: int, run: int) -> bool:
    # word holds a run of `run` consecutive 1s iff AND-folding `run` shifted
    # copies leaves a set bit
    w = word
    for _ in range(run - 1):
        w &= w >> 1
    return w != 0


def is_valid_word(word: int, length: int, m: int, n: int) -> bool:
    """Validity of a packed motif word of `length` bits in the (m, n) context."""
    _check_context(m, n)
    if m and n:
        return True
    if m:
        return not _has_ones_run(word, m)
    return not _has_ones_run(~word & ((1 << length) - 1), n)


@dataclass(frozen=True)
class Motif:
    """Packed motif: bit d_i of an N-site motif sits at position N - 1 - i."""

    word: int
    sites: int

    def __post_init__(self) -> None:
        if self.sites < 1:
            raise ValueError(f"need at least one site, got {self.sites}")
        if not 0 <= self.word < (1 << self.length):
            raise ValueError(f"word {self.word} out of range for {self.sites} sites")

    @property
    def length(self) -> int:
        return self.sites - 1

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Motif":
        word = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"motif bits must be 0 or 1, got {b!r}")
            word = (word << 1) | b
        return cls(word, len(bits) + 1)

    @property
    def bits(self) -> tuple[int, ...]:
        length = self.length
        return tuple((self.word >> (length - 1 - i)) & 1 for i in range(length))

    def bit(self, i: int) -> int:
        """d_i with 1 <= i <= N - 1."""
        if not 1 <= i <= self.length:
            raise IndexError(f"bit index {i} out of range 1..{self.length}")
        return (self.word >> (self.length - i)) & 1

    def rapidities(self) -> tuple[int, ...]:
        """Positions i with d_i = 1, ascending."""
        length = self.length
        return tuple(i for i in range(1, length + 1) if (self.word >> (length - i)) & 1)

    def ones(self) -> int:
        return self.word.bit_count()

    def is_valid_for(self, m: int, n: int) -> bool:
        return is_valid_word(self.word, self.length, m, n)

    def complement(self) -> "Motif":
        return Motif(self.word ^ ((1 << self.length) - 1), self.sites)

    def reversed(self) -> "Motif":
        word = 0
        for i in range(self.length):
            word = (word << 1) | ((self.word >> i) & 1)
        return Motif(word, self.sites)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class HalfMotif:
    """Symmetrized half of a motif: entries d_i + d_{N-i}, middle bit kept for even N."""

    entries: tuple[int, ...]
    sites: int

    @property
    def parity(self) -> int:
        return self.sites % 2

    def __str__(self) -> str:
        return "".join(map(str, self.entries))


def is_valid(bits: Sequence[int], m: int, n: int) -> bool:
    """Validity of a motif given as its bit sequence (d_1, ..., d_{N-1})."""
    motif = Motif.from_bits(bits)
    return is_valid_word(motif.word, motif.length, m, n)


def dual(motif: Motif) -> Motif:
    """Bitwise complement; maps (m, 0)-valid motifs onto (0, m)-valid ones."""
    return motif.complement()


def half(motif: Motif) -> HalfMotif:
    n_sites = motif.sites
    entries = [motif.bit(i) + motif.bit(n_sites - i) for i in range(1, (n_sites - 1) // 2 + 1)]
    if n_sites % 2 == 0:
        entries.append(motif.bit(n_sites // 2))
    return HalfMotif(tuple(entries), n_sites)


def count(N: int, m: int, n: int) -> int:
    """Number of valid motifs on N sites, by the run-length recursion."""
    _check_context(m, n)
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if m and n:
        return 1 << (N - 1)
    order = m or n
    vals = [1 << k for k in range(min(N, order))]
    while len(vals) < N:
        vals.append(sum(vals[-order:]))
    return vals[N - 1]


def _valid_word_blocks(
    N: int, m: int, n: int, start: int = 0, stop: int | None = None, block: int = _BLOCK
) -> Iterator[np.ndarray]:
    """Yield ascending int64 arrays of valid words in [start, stop)."""
    _check_context(m, n)
    length = N - 1
    if length > _MAX_ENUM_BITS:
        raise InfeasibleSizeError(f"cannot enumerate {length}-bit motif words")
    total = 1 << length
    stop = total if stop is None else min(stop, total)
    start = max(start, 0)
    mask = total - 1
    run = 0 if (m and n) else (m or n)
    for lo in range(start, stop, block):
        words = np.arange(lo, min(lo + block, stop), dtype=np.int64)
        if run == 0:
            yield words
            continue
        w = words if m else ~words & mask
        r = w.copy()
        for _ in range(run - 1):
            r &= r >> 1
        yield words[r == 0]


def enumerate_motifs(
    N: int, m: int, n: int, start: int = 0, stop: int | None = None
) -> Iterator[Motif]:
    """Valid motifs in lexicographic bit order, optionally over a word sub-range.

    Sub-ranges [start, stop) partition the 2^(N-1) candidate words, so disjoint
    ranges can be consumed independently and concatenate to the full ordering.
    """
    for arr in _valid_word_blocks(N, m, n, start, stop):
        for word in arr.tolist():
            yield Motif(word, N)


def _count_range(args: tuple[int, int, int, int, int]) -> int:
    N, m, n, start, stop = args
    return sum(arr.size for arr in _valid_word_blocks(N, m, n, start, stop))


def count_by_enumeration(N: int, m: int, n: int, jobs: int = 1) -> int:
    """Brute-force count by filtering all 2^(N-1) candidate words.

    Oracle-grade cross-check for count(); `jobs > 1` fans the word range out
    over a process pool and sums the per-range tallies.
    """
    total = 1 << (N - 1)
    jobs = max(1, min(jobs, total))
    if jobs == 1:
        return _count_range((N, m, n, 0, total))
    step = -(-total // jobs)
    ranges = [(N, m, n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_range, ranges))


_MU_LOCK = threading.Lock()
_MU: list[int] = [1]  # mu_r for r = 0, 1, ...; mu_{-1} = mu_{-2} = 0


def _mu(r: int) -> int:
    if r < 0:
        return 0
    with _MU_LOCK:
        while len(_MU) <= r:
            k = len(_MU)
            nxt = 2 * _MU[k - 1]
            if k >= 2:
                nxt += _MU[k - 2]
            if k >= 3:
                nxt -= _MU[k - 3]
            # k == 1: mu_{-1} = 0 contributes nothing; k == 2: -mu_{-1} = 0
            _MU.append(nxt)
        return _MU[r]


def su2_half_count_series(r_max: int) -> tuple[list[int], list[int]]:
    """Distinct-half counts for two-state bosonic motifs, by half length r.

    Returns (odd, even) where odd[r-1] counts halves of motifs on N = 2r + 1
    sites and even[r-1] those on N = 2r sites, for r = 1..r_max.
    """
    if r_max < 1:
        raise ValueError(f"need r_max >= 1, got {r_max}")
    odd = [_mu(r) for r in range(1, r_max + 1)]
    even = [_mu(r) - _mu(r - 2) for r in range(1, r_max + 1)]
    return odd, even


def count_half(N: int, m: int, n: int) -> int:
    """Number of distinct motif halves over all valid motifs on N sites.

    Closed forms exist for mixed contexts (powers of three) and for the
    two-state pure contexts (third-order recursion); other pure contexts
    fall back to explicit enumeration.
    """
    _check_context(m, n)
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    if m and n:
        return 3 ** ((N - 1) // 2) if N % 2 else 2 * 3 ** ((N - 2) // 2)
    order = m or n
    if order == 1:
        return 1
    if order == 2:
        if N % 2:
            return _mu((N - 1) // 2)
        r = N // 2
        return _mu(r) - _mu(r - 2)
    return count_half_by_enumeration(N, m, n)


def count_half_by_enumeration(N: int, m: int, n: int, cap: int = 1 << 26) -> int:
    """Distinct motif halves counted by enumerating the valid motifs."""
    _check_context(m, n)
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    length = N - 1
    if length > _MAX_ENUM_BITS or (1 << length) > cap:
        raise InfeasibleSizeError(f"2^{length} candidate words exceed cap {cap}")
    npairs = (N - 1) // 2
    keys: set[int] = set()
    for words in _valid_word_blocks(N, m, n):
        acc = np.zeros(words.shape, np.int64)
        for i in range(1, npairs + 1):
            e = ((words >> (length - i)) & 1) + ((words >> (length - (N - i))) & 1)
            acc = acc * 4 + e
        if N % 2 == 0:
            acc = acc * 4 + ((words >> (length - N // 2)) & 1)
        keys.update(np.unique(acc).tolist())
    return len(keys)
