import pytest
from hypothesis import given, strategies as st

from pavoid.errors import BadToken, EmptyPartition, InvalidDecomp, NotDecreasing
from pavoid.partition import (EMPTY, Partition, RectDecomp, add, classify, conjugate,
                              from_columns, from_rect_decomp, ne, ones, parse_partition,
                              rect_decomp, staircase, top_multiplicity)

partitions = st.lists(st.integers(1, 9), max_size=8).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_parse_round_trip():
    p = parse_partition("6,5,5,2")
    assert p.parts == (6, 5, 5, 2)
    assert str(p) == "6,5,5,2"
    assert parse_partition("6 5 5 2") == p
    assert parse_partition("0") is EMPTY
    assert str(EMPTY) == "0"


@pytest.mark.parametrize("text, exc", [("3,x", BadToken), ("", BadToken), ("-1", BadToken),
                                       ("2,0", BadToken), ("2,3", NotDecreasing)])
def test_parse_rejects(text, exc):
    with pytest.raises(exc):
        parse_partition(text)


def test_trailing_zeros_stripped():
    assert Partition((3, 1, 0, 0)) == Partition.of(3, 1)
    assert Partition.of(3, 1).part(5) == 0
    assert Partition.of(3, 1).weight == 4


def test_add_and_ne():
    assert add(Partition.of(3, 1), ones(3)) == Partition.of(4, 2, 1)
    assert ne(Partition.of(3, 1)) == Partition.of(4, 3, 1)
    with pytest.raises(EmptyPartition):
        ne(EMPTY)


def test_top_multiplicity():
    assert top_multiplicity(Partition.of(5, 5, 5, 2)) == 3
    assert top_multiplicity(EMPTY) == 0


def test_classify():
    c = classify(Partition.of(5, 3, 1))
    assert c.is_strict and c.is_super_strict and not c.is_staircase
    assert classify(staircase(4)).is_staircase
    assert not classify(Partition.of(4, 3)).is_super_strict
    assert classify(Partition.of(6, 5, 5, 2)).distinct_magnitudes == 3


def test_rect_decomp_example():
    d = rect_decomp(Partition.of(6, 5, 5, 2))
    assert d.widths == (2, 3, 1) and d.heights == (4, 3, 1)
    assert d.weight == 18


def test_rect_decomp_validation():
    with pytest.raises(InvalidDecomp):
        RectDecomp((1, 1), (2, 2))
    with pytest.raises(EmptyPartition):
        rect_decomp(EMPTY)


@given(partitions)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight


@given(partitions.filter(bool))
def test_rect_decomp_round_trip(p):
    d = rect_decomp(p)
    assert from_rect_decomp(d) == p
    assert len(d) == classify(p).distinct_magnitudes


@given(partitions)
def test_from_columns(p):
    assert from_columns(conjugate(p).parts) == p
