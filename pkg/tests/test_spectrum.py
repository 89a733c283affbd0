"""Dispersion relations, exact level sets and level-count bounds."""

from fractions import Fraction

import pytest

from motifspectra import motif, spectrum
from motifspectra.spectrum import (
    FIDispersion,
    HSDispersion,
    NumericDispersion,
    PFDispersion,
    PolyDispersion,
    SymbolicAlphaDispersion,
)


def test_energy_examples():
    mot = motif.Motif.from_bits((1, 0, 1))
    assert spectrum.energy(mot, HSDispersion(4)) == 6
    assert spectrum.energy(mot, PFDispersion(4)) == 4
    assert spectrum.energy(mot, FIDispersion(4, 3)) == Fraction(18)
    assert spectrum.energy(mot, SymbolicAlphaDispersion(4)) == (4, 6)
    empty = motif.Motif.from_bits((0, 0, 0))
    assert spectrum.energy(empty, HSDispersion(4)) == 0


def test_ground_state_energy_is_full_band():
    assert spectrum.ground_state_energy(HSDispersion(4)) == 10
    assert spectrum.ground_state_energy(PFDispersion(5)) == 10
    assert spectrum.ground_state_energy(FIDispersion(3, Fraction(5, 2))) == Fraction(19, 2)


def test_fi_alpha_validation():
    with pytest.raises(ValueError):
        FIDispersion(4, 0)
    with pytest.raises(ValueError):
        FIDispersion(4, Fraction(-1, 2))


def test_hs_level_set_small():
    lv = spectrum.level_set(4, 2, 0, HSDispersion(4))
    assert lv == [(0, 5), (3, 6), (4, 4), (6, 1)]
    assert spectrum.average_degeneracy(lv) == Fraction(4)


def test_pf_level_set_small():
    lv = spectrum.level_set(4, 2, 0, PFDispersion(4))
    assert lv == [(0, 5), (1, 3), (2, 4), (3, 3), (4, 1)]


def test_degeneracies_always_sum_to_state_count():
    for m, n in ((2, 0), (0, 2), (1, 1), (2, 1)):
        for N in (3, 5, 6):
            lv = spectrum.level_set(N, m, n, HSDispersion(N))
            assert sum(d for _, d in lv) == (m + n) ** N


@pytest.mark.parametrize("make", [HSDispersion, PFDispersion, lambda N: FIDispersion(N, Fraction(5, 2))])
def test_duality_reflects_level_sets(make):
    for m, n in ((2, 0), (3, 0), (2, 1)):
        for N in (3, 5, 8):
            disp = make(N)
            pivot = spectrum.ground_state_energy(disp)
            direct = spectrum.level_set(N, m, n, disp)
            mirrored = sorted((pivot - e, d) for e, d in spectrum.level_set(N, n, m, disp))
            assert direct == mirrored


def test_hs_odd_size_energies_are_even():
    for N in (5, 7):
        for e, _ in spectrum.level_set(N, 2, 0, HSDispersion(N)):
            assert e % 2 == 0


def test_sites_mismatch_rejected():
    with pytest.raises(ValueError):
        spectrum.level_set(5, 2, 0, HSDispersion(4))
    with pytest.raises(ValueError):
        spectrum.level_count_by_enumeration(5, 2, 0, HSDispersion(4))


def test_level_count_by_enumeration_matches_level_set():
    for N in (4, 6, 9):
        for disp in (HSDispersion(N), PFDispersion(N), FIDispersion(N, Fraction(5, 2))):
            for m, n in ((2, 0), (1, 1)):
                by_enum = spectrum.level_count_by_enumeration(N, m, n, disp)
                assert by_enum == len(spectrum.level_set(N, m, n, disp))


def test_symbolic_counts_dominate_rational_ones():
    for N in (8, 10, 12):
        sym = spectrum.level_count_by_enumeration(N, 2, 0, SymbolicAlphaDispersion(N))
        for alpha in (3, Fraction(5, 2), Fraction(7, 3)):
            rat = spectrum.level_count_by_enumeration(N, 2, 0, FIDispersion(N, alpha))
            assert sym >= rat


def test_symbolic_count_matches_python_fallback():
    N = 9
    fast = spectrum.level_count_by_enumeration(N, 2, 0, SymbolicAlphaDispersion(N))
    slow = len(
        {spectrum.energy(mt, SymbolicAlphaDispersion(N)) for mt in motif.enumerate_motifs(N, 2, 0)}
    )
    assert fast == slow


def test_dispersion_from_coupling_recovers_hs():
    import math

    N = 8
    h = [0.0] + [0.5 / math.sin(math.pi * l / N) ** 2 for l in range(1, N)]
    disp = spectrum.dispersion_from_coupling(h)
    for j in range(1, N):
        assert abs(disp.eps(j) - j * (N - j)) < 1e-8


def test_dispersion_from_coupling_rejects_uneven_table():
    with pytest.raises(ValueError):
        spectrum.dispersion_from_coupling([0.0, 1.0, 2.0, 1.5])


def test_numeric_dispersion_merges_close_levels():
    disp = NumericDispersion(3, (1.0, 1.0 + 1e-12))
    assert spectrum.level_count_by_enumeration(3, 1, 1, disp) == 3
    lv = spectrum.level_set(3, 1, 1, disp)
    assert [d for _, d in lv] == [2, 4, 2]
    assert abs(lv[1][0] - 1.0) < 1e-9


def test_level_bounds_examples():
    assert spectrum.level_bounds(PFDispersion(10), 2, 0) == 26
    assert spectrum.level_bounds(PFDispersion(9), 2, 0) == 21
    assert spectrum.level_bounds(HSDispersion(4), 2, 0) == 7
    assert spectrum.level_bounds(HSDispersion(5), 2, 0) == 6
    assert spectrum.level_bounds(FIDispersion(4, 3), 2, 0) == 19
    assert spectrum.level_bounds(SymbolicAlphaDispersion(4), 2, 0) == 4**5 // 6


def test_level_bounds_dominate_counts():
    for N in (6, 9, 12):
        for disp in (
            HSDispersion(N),
            PFDispersion(N),
            FIDispersion(N, 3),
            FIDispersion(N, Fraction(5, 2)),
            SymbolicAlphaDispersion(N),
        ):
            count = spectrum.level_count_by_enumeration(N, 2, 0, disp)
            assert count <= spectrum.level_bounds(disp, 2, 0)
            assert count <= spectrum.level_bounds(disp, 0, 2)


def test_pf_bound_is_sharp():
    for N in (5, 8, 11):
        count = spectrum.level_count_by_enumeration(N, 2, 0, PFDispersion(N))
        assert count == spectrum.level_bounds(PFDispersion(N), 2, 0)


def test_level_bounds_need_two_state_context():
    with pytest.raises(ValueError):
        spectrum.level_bounds(HSDispersion(6), 3, 0)
    with pytest.raises(ValueError):
        spectrum.level_bounds(HSDispersion(6), 1, 1)


def test_poly_bounds():
    pd = PolyDispersion(6, ((0, 2, Fraction(1)),))
    assert [pd.eps(j) for j in range(1, 6)] == [1, 4, 9, 16, 25]
    assert spectrum.level_bounds(pd, 2, 0) == 648
    assert spectrum.poly_level_bound_generic(pd) == 56
    count = spectrum.level_count_by_enumeration(6, 2, 0, pd)
    assert count <= 56


def test_poly_dispersion_can_mimic_hs():
    N = 7
    pd = PolyDispersion(N, ((1, 1, Fraction(1)), (0, 2, Fraction(-1))))
    hs = HSDispersion(N)
    for j in range(1, N):
        assert pd.eps(j) == hs.eps(j)
