"""Partition containment under row and column deletion.

``alpha`` contains ``mu`` when some rows and columns of the Ferrers board of
``alpha`` can be deleted so that the justified remainder is the board of ``mu``.

Two deciders are provided. :func:`contains_oracle` searches kept-column sets
exhaustively and is the reference. :func:`contains` is the fast test: it looks
for rows of ``alpha`` with lengths ``L_1 >= ... >= L_k`` such that

    L_a - L_{a+1} >= mu_a - mu_{a+1}     (a = 1..k, L_{k+1} = mu_{k+1} = 0)

and is validated against the oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import CapExceeded
from .partition import Partition

ORACLE_CAP = 16


@dataclass(frozen=True, slots=True)
class DeletionWitness:
    """1-based row and column indices of ``alpha`` to delete."""

    deleted_rows: frozenset[int]
    deleted_cols: frozenset[int]

    def as_dict(self) -> dict:
        return {"rows": sorted(self.deleted_rows), "cols": sorted(self.deleted_cols)}


def apply_deletion(alpha: Partition, rows, cols) -> Partition:
    """Delete the given rows and columns of ``alpha`` and justify what is left."""
    rows, cols = set(rows), set(cols)
    out = []
    for i, length in enumerate(alpha.parts, start=1):
        if i in rows:
            continue
        out.append(sum(1 for j in range(1, length + 1) if j not in cols))
    out.sort(reverse=True)
    return Partition(tuple(out))


def _is_subsequence(needle: Sequence[int], hay: Sequence[int]) -> bool:
    it = iter(hay)
    return all(any(x == y for y in it) for x in needle)


def contains_oracle(alpha: Partition, mu: Partition, cap: int = ORACLE_CAP) -> bool:
    """Exhaustive reference decider.

    Enumerates every set of ``mu_1`` kept columns. Kept columns past a row's
    end contribute nothing to it, so after fixing the columns each row of
    ``alpha`` has a known residual length and the remaining question, whether
    deleting rows leaves exactly ``mu``, is a subsequence test.
    """
    if alpha.weight > cap:
        raise CapExceeded("weight(alpha)", alpha.weight, cap)
    if not mu.parts:
        return True
    if mu.weight > alpha.weight or len(mu) > len(alpha) or mu.parts[0] > alpha.parts[0]:
        return False
    for kept in combinations(range(1, alpha.parts[0] + 1), mu.parts[0]):
        lengths = [sum(1 for c in kept if c <= a) for a in alpha.parts]
        residual = [x for x in lengths if x > 0]
        if _is_subsequence(mu.parts, residual):
            return True
    return False


def _select_rows(a: Sequence[int], m: Sequence[int]) -> list[int] | None:
    """Greedy bottom-up choice of 0-based row indices of ``a`` realising ``m``.

    Row ``m_k`` takes the lowest row long enough, then each row above takes
    the lowest unused row meeting the gap bound. Returns None if it runs out.
    """
    k = len(m)
    chosen = [0] * k
    j = len(a) - 1
    below_len = 0
    below_mu = 0
    for idx in range(k - 1, -1, -1):
        need = below_len + m[idx] - below_mu
        while j >= 0 and a[j] < need:
            j -= 1
        if j < 0:
            return None
        chosen[idx] = j
        below_len = a[j]
        below_mu = m[idx]
        j -= 1
    return chosen


def contains_parts(a: Sequence[int], m: Sequence[int]) -> bool:
    """:func:`contains` on raw part tuples (hot path for enumeration)."""
    if not m:
        return True
    if len(m) > len(a):
        return False
    return _select_rows(a, m) is not None


def contains(alpha: Partition, mu: Partition) -> bool:
    return contains_parts(alpha.parts, mu.parts)


def avoids(alpha: Partition, mu: Partition) -> bool:
    return not contains_parts(alpha.parts, mu.parts)


def witness(alpha: Partition, mu: Partition) -> DeletionWitness | None:
    """A deletion that turns ``alpha`` into ``mu``, or None if there is none.

    Rows are kept as low as possible, which makes the deleted-row set the
    lexicographically smallest one. Within each gap interval
    ``(L_{a+1}, L_a]`` the leftmost ``mu_a - mu_{a+1}`` columns are kept.
    """
    a, m = alpha.parts, mu.parts
    if not m:
        return DeletionWitness(frozenset(range(1, len(a) + 1)), frozenset())
    if len(m) > len(a):
        return None
    chosen = _select_rows(a, m)
    if chosen is None:
        return None
    kept_rows = {i + 1 for i in chosen}
    deleted_rows = frozenset(i for i in range(1, len(a) + 1) if i not in kept_rows)
    lengths = [a[i] for i in chosen] + [0]
    mm = list(m) + [0]
    deleted_cols = set()
    for idx in range(len(m)):
        lo, hi = lengths[idx + 1], lengths[idx]
        keep = mm[idx] - mm[idx + 1]
        deleted_cols.update(range(lo + 1 + keep, hi + 1))
    return DeletionWitness(deleted_rows, frozenset(deleted_cols))
