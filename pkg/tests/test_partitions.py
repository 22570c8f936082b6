"""Brute-force partition facts pinned against the series and lattice layers.

The enumeration side is deliberately naive.  Its whole value is that it
cannot share a bug with the generating-function code it checks.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sevencores.partitions import (
    PARTITION_BOUND,
    LatticeSpec,
    bg_rank,
    conjugate,
    core_rank_census,
    count_cores,
    count_cores_by_rank,
    enumerate_partitions,
    is_t_core,
    lattice_rank_sum,
    lattice_sum,
    lattice_theta,
    rank_histogram,
    rank_residue_classes,
)
from sevencores.theta import eta_quotient


def test_partitions_of_three():
    assert sorted(enumerate_partitions(3)) == [(1, 1, 1), (2, 1), (3,)]


def test_partitions_of_zero():
    assert list(enumerate_partitions(0)) == [()]


def test_partition_counts():
    # p(8) = 22, p(10) = 42
    assert sum(1 for _ in enumerate_partitions(8)) == 22
    assert sum(1 for _ in enumerate_partitions(10)) == 42


def test_enumeration_bound():
    with pytest.raises(ValueError):
        next(enumerate_partitions(PARTITION_BOUND + 1))
    with pytest.raises(ValueError):
        next(enumerate_partitions(-1))


def test_parts_descend():
    for lam in enumerate_partitions(9):
        assert all(a >= b for a, b in zip(lam, lam[1:]))
        assert sum(lam) == 9


def test_conjugate():
    assert conjugate((4, 1)) == (2, 1, 1, 1)
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate(()) == ()


@given(st.integers(min_value=0, max_value=14))
def test_conjugate_involution(n):
    for lam in enumerate_partitions(n):
        assert conjugate(conjugate(lam)) == lam


def test_bg_rank_examples():
    # alternating parity sum over parts, first part weighted +
    assert bg_rank(()) == 0
    assert bg_rank((1,)) == 1
    assert bg_rank((2, 1)) == -1
    assert bg_rank((3, 2, 1)) == 2
    assert bg_rank((2,)) == 0


def test_two_cores_are_staircases():
    for n, want in ((1, (1,)), (3, (2, 1)), (6, (3, 2, 1)), (10, (4, 3, 2, 1))):
        found = [lam for lam in enumerate_partitions(n) if is_t_core(lam, 2)]
        assert found == [want]
    assert not any(is_t_core(lam, 2) for lam in enumerate_partitions(5))


def test_seven_core_counts_head():
    want = (1, 1, 2, 3, 5, 7, 11, 8, 15)
    assert tuple(count_cores(n, 7) for n in range(9)) == want


def test_rank_split_examples():
    assert rank_histogram(6, 7) == {0: 10, 2: 1}
    assert rank_histogram(3, 7) == {-1: 1, 1: 2}
    assert rank_histogram(0, 7) == {0: 1}
    # single-class counts, including an empty class
    assert count_cores_by_rank(6, 7, 2) == 1
    assert count_cores_by_rank(3, 7, -1) == 1
    assert count_cores_by_rank(6, 7, 1) == 0


def test_census_rows_are_consistent():
    rows = core_rank_census(10, 7)
    assert len(rows) == 11
    for n, row in enumerate(rows):
        assert sum(row.values()) == count_cores(n, 7)


def test_rank_residue_class_sizes():
    sizes = {j: len(rank_residue_classes(j)) for j in (-1, 0, 1, 2)}
    assert sizes == {2: 1, 0: 35, 1: 21, -1: 7}
    # the four families tile all 64 even-distance patterns
    union = set()
    for j in (-1, 0, 1, 2):
        cls = rank_residue_classes(j)
        assert union.isdisjoint(cls)
        union |= cls
    assert len(union) == 64


def test_lattice_spec_validation():
    spec = LatticeSpec(7)
    assert spec.offset == (0, 1, 2, 3, 4, 5, 6)
    LatticeSpec(7, offset=(0, 1, 2, 3, 4, 5, 6))
    with pytest.raises(ValueError):
        LatticeSpec(7, offset=(1, 2, 3, 4, 5, 6, 7))
    with pytest.raises(ValueError):
        LatticeSpec(1)
    with pytest.raises(ValueError):
        LatticeSpec(3, residues=((0, 1),))  # wrong pattern length
    with pytest.raises(ValueError):
        LatticeSpec(3, residues=((0, 2, 0),))  # not a bit


def test_lattice_matches_eta_quotient():
    # t-core generating function as an eta quotient, small t
    for t in (2, 3, 5):
        assert lattice_sum(t, 25) == eta_quotient({t: t, 1: -1}, 25)


def test_lattice_counts_cores_directly():
    for n in range(16):
        brute = sum(1 for lam in enumerate_partitions(n) if is_t_core(lam, 3))
        assert lattice_sum(3, 16)[n] == brute


def test_rank_sums_match_census():
    rows = core_rank_census(12, 7)
    series = {j: lattice_rank_sum(j, 12) for j in (-1, 0, 1, 2)}
    for n in range(13):
        for j in (-1, 0, 1, 2):
            assert series[j][n] == rows[n].get(j, 0)


def test_rank_sums_partition_the_total():
    total = lattice_sum(7, 30)
    add = sum((lattice_rank_sum(j, 30) for j in (-1, 0, 1)), lattice_rank_sum(2, 30))
    assert add == total


def test_lattice_theta_rejects_bad_mask_source():
    with pytest.raises(ValueError):
        lattice_theta(LatticeSpec(0), 5)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=14), st.sampled_from((2, 3, 5, 7)))
def test_core_counts_match_lattice(n, t):
    brute = sum(1 for lam in enumerate_partitions(n) if is_t_core(lam, t))
    assert lattice_sum(t, 14)[n] == brute


@given(st.integers(min_value=0, max_value=12))
def test_bg_rank_of_seven_cores_stays_in_window(n):
    for lam in enumerate_partitions(n):
        if is_t_core(lam, 7):
            assert bg_rank(lam) in (-1, 0, 1, 2)


@given(st.integers(min_value=0, max_value=14))
def test_rank_parity_matches_size_parity(n):
    # the alternating parity sum always has the parity of n itself
    for lam in enumerate_partitions(n):
        assert bg_rank(lam) % 2 == n % 2
