"""Motif validity, enumeration, counting and half-motif reductions."""

from itertools import product

import pytest

from motifspectra import fibnum, motif


def test_validity_examples():
    assert motif.is_valid((1, 0, 1), 2, 0)
    assert not motif.is_valid((1, 1, 0), 2, 0)
    assert motif.is_valid((1, 1, 0), 3, 0)
    assert not motif.is_valid((1, 1, 1), 3, 0)
    # the zero-run rule is the mirror constraint
    assert not motif.is_valid((0, 0, 1), 0, 2)
    assert motif.is_valid((0, 1, 0), 0, 3)
    # mixed contexts accept everything
    assert motif.is_valid((1, 1, 1, 0, 0, 0), 1, 1)


def test_validity_matches_word_form():
    for bits in product((0, 1), repeat=6):
        mot = motif.Motif.from_bits(bits)
        for m, n in ((2, 0), (3, 0), (0, 2), (0, 4), (1, 1), (2, 1)):
            assert mot.is_valid_for(m, n) == motif.is_valid(bits, m, n)


def test_motif_accessors():
    mot = motif.Motif.from_bits((0, 0, 1, 1, 0, 1))
    assert mot.sites == 7
    assert mot.length == 6
    assert str(mot) == "001101"
    assert mot.rapidities() == (3, 4, 6)
    assert mot.ones() == 3
    assert mot.bit(3) == 1 and mot.bit(5) == 0
    assert str(mot.complement()) == "110010"
    assert str(mot.reversed()) == "101100"


def test_enumeration_is_lexicographic():
    mots = list(motif.enumerate_motifs(6, 2, 0))
    words = [mt.word for mt in mots]
    assert words == sorted(words)
    bit_rows = [mt.bits for mt in mots]
    assert bit_rows == sorted(bit_rows)
    assert all(mt.is_valid_for(2, 0) for mt in mots)


def test_enumeration_subranges_concatenate():
    full = [mt.word for mt in motif.enumerate_motifs(8, 3, 0)]
    split = []
    for lo in range(0, 128, 32):
        split.extend(mt.word for mt in motif.enumerate_motifs(8, 3, 0, lo, lo + 32))
    assert split == full


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_count_equals_mnacci(m):
    for N in range(1, 19):
        assert motif.count(N, m, 0) == fibnum.fib(m, N + m - 1)


def test_count_cross_checks():
    for m, n in ((2, 0), (3, 0), (5, 0), (0, 2), (0, 3), (1, 1), (2, 1), (2, 2)):
        for N in range(1, 15):
            assert motif.count(N, m, n) == motif.count_by_enumeration(N, m, n)


def test_count_mixed_is_free():
    for N in range(1, 20):
        assert motif.count(N, 1, 1) == 2 ** (N - 1)
        assert motif.count(N, 3, 2) == 2 ** (N - 1)


def test_count_parallel_matches_serial():
    assert motif.count_by_enumeration(14, 2, 0, jobs=4) == motif.count(14, 2, 0)


def test_bad_context_rejected():
    with pytest.raises(ValueError):
        motif.count(5, 0, 0)
    with pytest.raises(ValueError):
        motif.count(5, -1, 2)
    with pytest.raises(ValueError):
        motif.count(0, 2, 0)


def test_dual_is_involution_and_bijection():
    for N in range(2, 15):
        valid_m = {mt.word for mt in motif.enumerate_motifs(N, 2, 0)}
        valid_n = {mt.word for mt in motif.enumerate_motifs(N, 0, 2)}
        assert len(valid_m) == len(valid_n)
        image = set()
        for word in valid_m:
            mt = motif.Motif(word, N)
            dd = motif.dual(motif.dual(mt))
            assert dd == mt
            image.add(motif.dual(mt).word)
        assert image == valid_n


def test_half_entries():
    mot = motif.Motif.from_bits((1, 0, 0, 1, 0, 1))  # N = 7, pairs (d1,d6) (d2,d5) (d3,d4)
    h = motif.half(mot)
    assert h.entries == (2, 0, 1)
    assert h.sites == 7
    even = motif.Motif.from_bits((1, 0, 1, 0, 0))  # N = 6, middle d3 kept
    he = motif.half(even)
    assert he.entries == (1, 0, 1)
    assert he.parity == 0


def _unconstrained_pair_vectors(r):
    """Half vectors whose 2 entries only neighbor 0 entries."""
    for v in product((0, 1, 2), repeat=r):
        if all(
            not (v[i] == 2 and v[i + 1] >= 1) and not (v[i + 1] == 2 and v[i] >= 1)
            for i in range(r - 1)
        ):
            yield v


def _brute_mu(r):
    return sum(1 for v in _unconstrained_pair_vectors(r) if v[-1] != 2)


def _brute_mu_tilde(r):
    total = 0
    for v in _unconstrained_pair_vectors(r):
        last = v[-1]
        if last == 0 or (last == 1 and (r == 1 or v[-2] == 0)):
            total += 1
    return total


def test_half_count_series_against_characterization():
    odd, even = motif.su2_half_count_series(8)
    assert odd == [_brute_mu(r) for r in range(1, 9)]
    assert even == [_brute_mu_tilde(r) for r in range(1, 9)]


def test_half_count_series_values():
    odd, even = motif.su2_half_count_series(6)
    assert odd == [2, 5, 11, 25, 56, 126]
    assert even == [2, 4, 9, 20, 45, 101]


def test_half_count_against_enumeration():
    for N in range(2, 19):
        assert motif.count_half(N, 2, 0) == motif.count_half_by_enumeration(N, 2, 0)
        assert motif.count_half(N, 0, 2) == motif.count_half_by_enumeration(N, 0, 2)


def test_half_count_mixed_powers_of_three():
    for N in range(2, 16):
        expect = 3 ** ((N - 1) // 2) if N % 2 else 2 * 3 ** ((N - 2) // 2)
        assert motif.count_half(N, 1, 1) == expect
        assert motif.count_half_by_enumeration(N, 1, 1) == expect


def test_half_count_higher_order_falls_back_to_enumeration():
    for N in range(2, 13):
        assert motif.count_half(N, 3, 0) == motif.count_half_by_enumeration(N, 3, 0)


def test_half_count_order_one():
    # a single-letter alphabet leaves only the all-zeros motif
    for N in range(2, 10):
        assert motif.count_half(N, 1, 0) == 1
        assert motif.count(N, 1, 0) == 1
