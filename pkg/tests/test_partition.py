"""Two-term level-polynomial recursions and the binary term format."""

import io
from fractions import Fraction

import pytest

from motifspectra import partition, spectrum
from motifspectra.partition import QPolynomial


def test_hs_small_values():
    assert partition.hs_partition(2).terms == {0: 1, 1: 3}
    assert partition.hs_partition(4).terms == {4: 1, 6: 4, 7: 6, 10: 5}


def test_fi_small_values():
    qp = partition.fi_partition(3, 3)
    assert qp.scale == 1
    assert qp.terms == {3: 2, 8: 2, 11: 4}


def test_normalization_counts_all_states():
    for N in range(1, 31):
        assert partition.hs_partition(N).value_at_one() == 2**N
        assert partition.fi_partition(N, 3).value_at_one() == 2**N
        assert partition.fi_partition(N, Fraction(5, 2)).value_at_one() == 2**N


def test_fi_scale_follows_alpha_denominator():
    assert partition.fi_partition(4, Fraction(5, 2)).scale == 2
    assert partition.fi_partition(4, Fraction(7, 3)).scale == 3
    with pytest.raises(ValueError):
        partition.fi_partition(4, 0)


def test_hs_odd_sizes_have_even_exponents():
    for N in (5, 7, 9, 11):
        assert all(e % 2 == 0 for e in partition.hs_partition(N).terms)


def test_recursion_matches_enumeration():
    for N in range(1, 13):
        disp = spectrum.HSDispersion(N)
        assert partition.hs_partition(N).terms == partition.enumerated_partition(N, 0, 2, disp).terms
    for alpha in (3, Fraction(5, 2)):
        for N in range(1, 13):
            disp = spectrum.FIDispersion(N, alpha)
            got = partition.fi_partition(N, alpha)
            want = partition.enumerated_partition(N, 0, 2, disp)
            assert got.terms == want.terms
            assert got.scale == want.scale


def test_reflection_recovers_bosonic_levels():
    for N in (4, 7, 10):
        disp = spectrum.HSDispersion(N)
        pivot = spectrum.ground_state_energy(disp)
        reflected = partition.hs_partition(N).reflected(pivot)
        assert sorted(reflected.terms.items()) == spectrum.level_set(N, 2, 0, disp)


def test_enumerated_partition_rejects_numeric():
    disp = spectrum.NumericDispersion(3, (1.0, 2.0))
    with pytest.raises(TypeError):
        partition.enumerated_partition(3, 0, 2, disp)


def test_level_summary():
    s = partition.levels(partition.hs_partition(4))
    assert s.count == 4
    assert s.max_degeneracy == 6
    assert s.average == Fraction(16, 4)
    with pytest.raises(ValueError):
        partition.levels(QPolynomial({}))


def test_energies_respect_scale():
    qp = partition.fi_partition(3, Fraction(5, 2))
    assert qp.energies() == [Fraction(e, qp.scale) for e in sorted(qp.terms)]
    # the scaled exponents reproduce the exact level values
    disp = spectrum.FIDispersion(3, Fraction(5, 2))
    want = sorted(e for e, _ in spectrum.level_set(3, 0, 2, disp))
    assert qp.energies() == want


def test_qpolynomial_validation():
    with pytest.raises(ValueError):
        QPolynomial({0: 0})
    with pytest.raises(ValueError):
        QPolynomial({0: -1})
    with pytest.raises(ValueError):
        QPolynomial({0: 1}, scale=0)


def test_dump_load_round_trip():
    for qp in (
        partition.hs_partition(12),
        partition.fi_partition(9, Fraction(5, 2)),
        QPolynomial({0: 1, 10**40: 2**200}),
    ):
        buf = io.BytesIO()
        partition.dump_terms(qp, buf)
        buf.seek(0)
        back = partition.load_terms(buf)
        assert back.terms == qp.terms
        assert back.scale == qp.scale


def test_dump_rejects_tuple_exponents():
    qp = QPolynomial({(1, 2): 1})
    with pytest.raises(TypeError):
        partition.dump_terms(qp, io.BytesIO())


def test_load_rejects_bad_magic():
    with pytest.raises(ValueError):
        partition.load_terms(io.BytesIO(b"NOPE" + b"\x00" * 32))


def test_big_size_stays_exact():
    qp = partition.hs_partition(50)
    assert qp.value_at_one() == 2**50
    assert max(qp.terms) == spectrum.ground_state_energy(spectrum.HSDispersion(50))
    buf = io.BytesIO()
    partition.dump_terms(qp, buf)
    buf.seek(0)
    assert partition.load_terms(buf).terms == qp.terms
