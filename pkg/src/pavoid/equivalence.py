"""Rook equivalence, strict representatives and Wilf-equivalence checks.

Two partitions of the same weight are rook equivalent exactly when the
multisets ``{i + mu_i}`` agree (Foata and Schutzenberger), and rook
equivalence coincides with Wilf equivalence for partition avoidance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .enumeration import ENUM_CAP, av_series, strict_partition_tuples
from .errors import CapExceeded, EmptyPartition, HorizonTooSmall, InvariantViolation
from .partition import Partition, conjugate_parts, is_strict

EQUIV_CAP = 40
ROOK_ORACLE_CAP = 12


@dataclass(frozen=True, slots=True)
class FSMultiset:
    horizon: int
    values: tuple[int, ...]


def fs_multiset(p: Partition, horizon: int) -> FSMultiset:
    """Sorted ``{i + p_i : 1 <= i <= horizon}``."""
    if horizon < max(len(p), 1):
        raise HorizonTooSmall(f"horizon {horizon} is below the length {len(p)} of {p}")
    return FSMultiset(horizon, tuple(sorted(i + p.part(i) for i in range(1, horizon + 1))))


def rook_equivalent(p: Partition, q: Partition) -> bool:
    if p.weight != q.weight:
        return False
    L = max(len(p), len(q), 1)
    return fs_multiset(p, L).values == fs_multiset(q, L).values


def strict_representative(p: Partition, cap: int = EQUIV_CAP) -> Partition:
    """The unique strict partition rook equivalent to ``p``."""
    if not p.parts:
        raise EmptyPartition("the empty partition has no strict representative")
    if p.weight > cap:
        raise CapExceeded("weight", p.weight, cap)
    if is_strict(p):
        return p
    L = p.weight
    target = fs_multiset(p, L).values
    hits = [Partition(s) for s in strict_partition_tuples(p.weight)
            if fs_multiset(Partition(s), L).values == target]
    if len(hits) != 1:
        raise InvariantViolation(f"{len(hits)} strict partitions match {p}")
    return hits[0]


@dataclass(frozen=True, slots=True)
class RookPoly:
    """``coeffs[j]`` placements of ``j`` non-attacking rooks."""

    coeffs: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0


def rook_poly(p: Partition, cap: int = EQUIV_CAP) -> RookPoly:
    # columns shortest first: every earlier rook sits in a row the new column covers
    if p.weight > cap:
        raise CapExceeded("weight", p.weight, cap)
    r = [1]
    for c in sorted(conjugate_parts(p.parts)):
        r.append(0)
        for j in range(len(r) - 1, 0, -1):
            r[j] += (c - (j - 1)) * r[j - 1]
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return RookPoly(tuple(r))


def rook_poly_brute(p: Partition, cap: int = ROOK_ORACLE_CAP) -> RookPoly:
    """Placement counts by enumerating rook sets cell by cell."""
    if p.weight > cap:
        raise CapExceeded("weight", p.weight, cap)
    cells = [(i, j) for i, length in enumerate(p.parts) for j in range(length)]
    counts = [1]
    for size in range(1, min(len(p.parts), p.part(1)) + 1):
        total = 0
        for combo in combinations(cells, size):
            if len({c[0] for c in combo}) == size and len({c[1] for c in combo}) == size:
                total += 1
        if not total:
            break
        counts.append(total)
    return RookPoly(tuple(counts))


def wilf_check(p: Partition, q: Partition, n_max: int, cap: int = ENUM_CAP) -> bool:
    """Whether the avoidance counts of ``p`` and ``q`` agree for ``n = 1..n_max``."""
    return av_series(p, n_max, cap).counts == av_series(q, n_max, cap).counts
