import random

import pytest

from heckeprod import (
    BetaRow,
    ChargedPartition,
    DomainError,
    Partition,
    beta_row,
    content_count,
    from_beta,
    make_partition,
    multisegment_of,
    shift,
)
from helpers import mseg, random_charged_partition


def test_make_partition_sorts():
    assert make_partition([4, 1]).parts == (1, 4)


def test_make_partition_strips_zeros():
    assert make_partition([0, 0, 2, 3]).parts == (2, 3)


def test_make_partition_empty():
    assert make_partition([]).parts == ()


def test_make_partition_rejects_negative():
    with pytest.raises(DomainError):
        make_partition([3, -1])


def test_partition_invariants_enforced():
    with pytest.raises(DomainError):
        Partition((4, 1))
    with pytest.raises(DomainError):
        Partition((0, 2))


def test_charge_must_cover_length():
    with pytest.raises(DomainError):
        ChargedPartition(make_partition([1, 1, 2]), 2)
    with pytest.raises(DomainError):
        ChargedPartition(Partition(), 0)


@pytest.mark.parametrize(
    "parts,charge,expected",
    [
        ((1, 1, 2), 3, (2, 3, 5)),
        ((2, 3), 5, (1, 2, 3, 6, 8)),
        ((), 4, (1, 2, 3, 4)),
    ],
)
def test_beta_row_golden(parts, charge, expected):
    cp = ChargedPartition(make_partition(parts), charge)
    assert beta_row(cp).entries == expected


@pytest.mark.parametrize(
    "entries,parts,charge",
    [
        ((2, 3, 5), (1, 1, 2), 3),
        ((1, 2, 3, 4), (), 4),
        ((3, 7), (2, 5), 2),
    ],
)
def test_from_beta_golden(entries, parts, charge):
    cp = from_beta(entries)
    assert cp.partition.parts == parts
    assert cp.charge == charge


def test_from_beta_rejects_bad_rows():
    with pytest.raises(DomainError):
        from_beta((3, 3))
    with pytest.raises(DomainError):
        from_beta((5, 2))
    with pytest.raises(DomainError):
        from_beta(())
    with pytest.raises(DomainError):
        BetaRow((0, 2))


def test_round_trips_random():
    rng = random.Random(11)
    for _ in range(300):
        cp = random_charged_partition(rng, max_weight=9, max_charge=7)
        assert from_beta(beta_row(cp)) == cp
        row = beta_row(cp)
        assert beta_row(from_beta(row)) == row


@pytest.mark.parametrize(
    "parts,charge,j,expected",
    [
        ((1, 2, 3), 4, 2, 1),
        ((2, 3), 5, 5, 2),
        ((), 3, 1, 0),
        ((2, 3), 5, 99, 0),
        ((2, 3), 5, 0, 0),
    ],
)
def test_content_count_golden(parts, charge, j, expected):
    cp = ChargedPartition(make_partition(parts), charge)
    assert content_count(cp, j) == expected


def test_content_counts_sum_to_weight():
    rng = random.Random(23)
    for _ in range(200):
        cp = random_charged_partition(rng)
        top = cp.charge + (cp.partition.parts[-1] if len(cp.partition) else 0)
        total = sum(content_count(cp, j) for j in range(1, top + 1))
        assert total == cp.partition.weight


def test_content_count_matches_segment_membership():
    # independent route: count segments of the row multisegment covering j
    rng = random.Random(37)
    for _ in range(200):
        cp = random_charged_partition(rng)
        m = multisegment_of(cp)
        for j in range(0, cp.charge + 8):
            assert content_count(cp, j) == sum(1 for seg in m if seg.contains(j))


@pytest.mark.parametrize(
    "parts,charge,expected",
    [
        ((2, 3), 5, ((4, 5), (5, 7))),
        ((1, 4), 2, ((1, 1), (2, 5))),
        ((), 3, ()),
    ],
)
def test_multisegment_of_golden(parts, charge, expected):
    cp = ChargedPartition(make_partition(parts), charge)
    assert multisegment_of(cp) == mseg(*expected)


def test_multisegment_size_is_weight():
    rng = random.Random(41)
    for _ in range(200):
        cp = random_charged_partition(rng)
        assert multisegment_of(cp).size == cp.partition.weight


def test_charge_shift_translates_segments():
    rng = random.Random(53)
    for _ in range(200):
        cp = random_charged_partition(rng, max_charge=5)
        c = rng.randint(0, 4)
        shifted = ChargedPartition(cp.partition, cp.charge + c)
        assert multisegment_of(shifted) == shift(multisegment_of(cp), c)
