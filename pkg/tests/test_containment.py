import pytest
from hypothesis import given, settings, strategies as st

from pavoid.containment import apply_deletion, avoids, contains, contains_oracle, witness
from pavoid.enumeration import partition_tuples
from pavoid.errors import CapExceeded
from pavoid.partition import EMPTY, Partition

ALPHA = Partition.of(6, 5, 5, 5, 4, 4, 2, 2)
MU = Partition.of(4, 3, 3, 2, 2)

parts = st.integers(0, 10).flatmap(lambda n: st.sampled_from(list(partition_tuples(n))))


def test_worked_example():
    assert contains(ALPHA, MU)
    assert contains_oracle(ALPHA, MU, cap=40)


def test_worked_example_witnesses():
    w = witness(ALPHA, MU)
    assert apply_deletion(ALPHA, w.deleted_rows, w.deleted_cols) == MU
    assert w.as_dict() == {"rows": [1, 2, 3], "cols": [4]}
    # a second, hand-picked deletion for the same pair
    assert apply_deletion(ALPHA, {2, 5, 7}, {3, 4}) == MU


def test_trivial_cases():
    assert contains(ALPHA, EMPTY)
    assert contains(ALPHA, ALPHA)
    assert avoids(Partition.of(3, 3), Partition.of(2, 2, 2))
    assert not contains(EMPTY, Partition.of(1))


def test_oracle_cap():
    with pytest.raises(CapExceeded):
        contains_oracle(ALPHA, MU)


def test_two_two_vs_three_one():
    # (3,1) has an L-shape; (2,2) needs two rows of equal length
    assert not contains(Partition.of(3, 1), Partition.of(2, 2))
    assert contains(Partition.of(3, 2, 2), Partition.of(2, 2))


@settings(max_examples=300, deadline=None)
@given(parts, parts)
def test_fast_matches_oracle(a, m):
    alpha, mu = Partition(a), Partition(m)
    assert contains(alpha, mu) == contains_oracle(alpha, mu)


@settings(max_examples=200, deadline=None)
@given(parts, parts)
def test_witness_replays(a, m):
    alpha, mu = Partition(a), Partition(m)
    w = witness(alpha, mu)
    if contains(alpha, mu):
        assert apply_deletion(alpha, w.deleted_rows, w.deleted_cols) == mu
    else:
        assert w is None


@settings(max_examples=200, deadline=None)
@given(parts, parts, parts)
def test_transitivity(a, b, c):
    pa, pb, pc = Partition(a), Partition(b), Partition(c)
    if contains(pa, pb) and contains(pb, pc):
        assert contains(pa, pc)
