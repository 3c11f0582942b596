"""Exhaustive generation and counting of pattern-avoiding partitions.

All count series start at ``n = 1``. The empty partition avoids every
nonempty pattern; it is never included in a series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .containment import contains_parts
from .errors import (CapExceeded, EmptyPartition, IndexOutOfRange, NotInDomain,
                     NotStrict, PatternTooSmall, StaircaseHasNoHat)
from .partition import (Partition, add, conjugate_parts, distinct_magnitudes,
                        from_columns, is_staircase, is_strict, ones,
                        rect_decomp, top_multiplicity)

ENUM_CAP = 60
PROPERTY_CAP = 25


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded("n", n, cap)


def partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as tuples, in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        rem = 0
        while a and a[-1] == 1:
            a.pop()
            rem += 1
        if not a:
            return
        x = a.pop() - 1
        a.append(x)
        rem += 1
        while rem > x:
            a.append(x)
            rem -= x
        a.append(rem)


def partitions_of(n: int, cap: int = ENUM_CAP) -> Iterator[Partition]:
    _check_cap(n, cap)
    for p in partition_tuples(n):
        yield Partition(p)


def strict_partition_tuples(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into distinct parts, reverse lexicographic."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        if first * (first + 1) // 2 < n:
            break
        for rest in strict_partition_tuples(n - first, first - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class CountSeries:
    """``counts[n-1]`` is the count at weight ``n``; index with ``series[n]``."""

    pattern: Partition
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.counts):
            raise IndexError(f"n = {n} outside 1..{len(self.counts)}")
        return self.counts[n - 1]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def n_max(self) -> int:
        return len(self.counts)


def av_count(mu: Partition, n: int, cap: int = ENUM_CAP) -> int:
    _check_cap(n, cap)
    m = mu.parts
    return sum(1 for p in partition_tuples(n) if not contains_parts(p, m))


def av_series(mu: Partition, n_max: int, cap: int = ENUM_CAP) -> CountSeries:
    """Brute-force ``|Av_n(mu)|`` for ``n = 1..n_max``."""
    if not mu.parts:
        raise EmptyPartition("every partition contains the empty pattern")
    _check_cap(n_max, cap)
    return CountSeries(mu, tuple(av_count(mu, n, cap) for n in range(1, n_max + 1)))


def avoiders(mu: Partition, n: int, cap: int = ENUM_CAP) -> list[Partition]:
    _check_cap(n, cap)
    m = mu.parts
    return [Partition(p) for p in partition_tuples(n) if not contains_parts(p, m)]


def q_set(tau: Partition, mu: Partition, n: int, cap: int = ENUM_CAP) -> list[Partition]:
    """Partitions of weight ``n`` containing ``tau`` and avoiding ``mu``."""
    _check_cap(n, cap)
    t, m = tau.parts, mu.parts
    return [Partition(p) for p in partition_tuples(n)
            if contains_parts(p, t) and not contains_parts(p, m)]


def q_count(tau: Partition, mu: Partition, n: int, cap: int = ENUM_CAP) -> int:
    _check_cap(n, cap)
    t, m = tau.parts, mu.parts
    return sum(1 for p in partition_tuples(n)
               if contains_parts(p, t) and not contains_parts(p, m))


# -- the E, M, N set maps -----------------------------------------------------

def _rect(w: int, h: int) -> Partition:
    return Partition((w,) * h) if w else Partition()


def set_E(alpha: Partition) -> list[Partition]:
    """``{alpha + (1^c) : 0 < c <= m(alpha)}``."""
    if not alpha.parts:
        raise EmptyPartition("E is defined on nonempty partitions")
    m = top_multiplicity(alpha)
    return [add(alpha, ones(c)) for c in range(1, m + 1)]


def set_M(alpha: Partition, wmax: int) -> list[Partition]:
    """``{alpha + (w^m(alpha)) : 0 <= w <= wmax}``."""
    if not alpha.parts:
        raise EmptyPartition("M is defined on nonempty partitions")
    m = top_multiplicity(alpha)
    return [add(alpha, _rect(w, m)) for w in range(wmax + 1)]


def set_N(alpha: Partition, wmax: int) -> list[Partition]:
    """``{alpha + (w^m(alpha)) + (1^c) : 0 <= w <= wmax, 0 < c < m(alpha)}``."""
    if not alpha.parts:
        raise EmptyPartition("N is defined on nonempty partitions")
    m = top_multiplicity(alpha)
    return [add(add(alpha, _rect(w, m)), ones(c))
            for w in range(wmax + 1) for c in range(1, m)]


# -- D_n(mu): avoiders with mu_1 - 1 distinct magnitudes ----------------------

def _require_strict_pattern(mu: Partition) -> None:
    if not is_strict(mu):
        raise NotStrict(f"{mu} is not strict")
    if not mu.parts or mu.parts[0] < 2:
        raise PatternTooSmall(f"{mu} needs a first part of at least 2")


def wide_positions(mu: Partition) -> tuple[bool, ...]:
    """For rectangle indices ``1..mu_1 - 1``: True where ``mu`` has a part of that size."""
    present = set(mu.parts)
    return tuple(i in present for i in range(1, mu.parts[0]))


def _dtype_for(n_max: int, k: int):
    if n_max <= 1:
        return np.int64
    bound = (n_max * (1 + math.log(n_max))) ** k
    if bound < 2.0 ** 62 or n_max <= 400:
        return np.int64
    return object


def d_series(mu: Partition, n_max: int) -> list[int]:
    """``|D_n(mu)|`` for ``n = 0..n_max``.

    Counts rectangular decompositions ``sum x_i y_i`` with
    ``y_1 > ... > y_k > 0`` (``k = mu_1 - 1``), ``x_i >= 1`` and ``x_i = 1``
    wherever ``mu`` has no part of size ``i``. Heights are swept upward,
    placing rectangles from the shortest (index ``k``) to the tallest; a
    wide rectangle of height ``h`` adds any positive multiple of ``h``.
    """
    _require_strict_pattern(mu)
    wide = wide_positions(mu)
    k = len(wide)
    size = n_max + 1
    dtype = _dtype_for(n_max, k)
    dp = np.zeros((k + 1, size), dtype=dtype)
    dp[0, 0] = 1
    for h in range(1, size):
        for j in range(min(k - 1, h - 1), -1, -1):
            row = dp[j]
            if not row[: size - h].any():
                continue
            step = np.zeros(size, dtype=dtype)
            step[h:] = row[: size - h]
            if wide[k - 1 - j]:
                pad = -size % h
                if pad:
                    step = np.concatenate([step, np.zeros(pad, dtype=dtype)])
                step = step.reshape(-1, h).cumsum(axis=0).ravel()[:size]
            dp[j + 1] += step
    return [int(x) for x in dp[k]]


def d_count(mu: Partition, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return d_series(mu, n)[n]


def in_D(mu: Partition, alpha: Partition) -> bool:
    """Membership of ``alpha`` in ``D(mu)``."""
    _require_strict_pattern(mu)
    return (bool(alpha.parts)
            and distinct_magnitudes(alpha) == mu.parts[0] - 1
            and not contains_parts(alpha.parts, mu.parts))


def d_set(mu: Partition, n: int, cap: int = ENUM_CAP) -> list[Partition]:
    """``D_n(mu)`` by filtering all partitions of ``n``."""
    _require_strict_pattern(mu)
    _check_cap(n, cap)
    k = mu.parts[0] - 1
    m = mu.parts
    if n == 0:
        return []
    return [Partition(p) for p in partition_tuples(n)
            if len(set(p)) == k and not contains_parts(p, m)]


# -- divisor convolutions ------------------------------------------------------

@lru_cache(maxsize=None)
def _sigma0_table(n_max: int) -> tuple[int, ...]:
    t = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        for m in range(d, n_max + 1, d):
            t[m] += 1
    return tuple(t)


def nu_series(k: int, n_max: int) -> list[int]:
    """``nu_k(n)`` for ``n = 0..n_max``: ordered representations ``n = sum_{i<=k} x_i y_i``."""
    if k < 1:
        raise ValueError("k must be positive")
    s0 = _sigma0_table(n_max)
    cur = list(s0)
    for _ in range(k - 1):
        nxt = [0] * (n_max + 1)
        for n in range(2, n_max + 1):
            nxt[n] = sum(cur[m] * s0[n - m] for m in range(1, n))
        cur = nxt
    return cur


def nu(k: int, n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return nu_series(k, n)[n]


# -- hat, swap and the column-adjoining map -----------------------------------

def hat_index(mu: Partition) -> int | None:
    """Least ``i > 1`` with no part of size ``mu_i + 1``; None for staircases."""
    present = set(mu.parts)
    for i in range(2, len(mu) + 2):
        if mu.part(i) + 1 not in present:
            return i
    return None


def mu_hat(mu: Partition) -> Partition:
    """Delete part ``i = hat_index(mu)`` and lower every part above it by one."""
    if not is_strict(mu):
        raise NotStrict(f"{mu} is not strict")
    i = hat_index(mu)
    if i is None:
        raise StaircaseHasNoHat(f"{mu} is a staircase")
    p = mu.parts
    upper = tuple(x - 1 for x in p[: i - 1])
    lower = p[i:]
    return Partition(upper + lower)


def removed_part(mu: Partition) -> int:
    """The part of ``mu`` deleted when forming ``mu_hat`` (possibly 0)."""
    i = hat_index(mu)
    if i is None:
        raise StaircaseHasNoHat(f"{mu} is a staircase")
    return mu.part(i)


def top_run(mu: Partition) -> tuple[int, int]:
    """``(k, ell)`` with ``mu = (k+1, k, ..., k-ell+1, ...)`` and ``ell`` maximal."""
    k = mu.parts[0] - 1
    ell = 0
    while ell + 1 < len(mu) and mu.parts[ell + 1] == k - ell:
        ell += 1
    return k, ell


def mu_sup(mu: Partition, i: int) -> Partition:
    """Replace the part ``i`` (``k - ell < i <= k``) by a part ``k - ell``."""
    if not is_strict(mu):
        raise NotStrict(f"{mu} is not strict")
    if not mu.parts or is_staircase(mu):
        raise StaircaseHasNoHat(f"{mu} is a staircase")
    k, ell = top_run(mu)
    if not k - ell < i <= k:
        raise IndexOutOfRange(f"i = {i} outside ({k - ell}, {k}]")
    parts = [x for x in mu.parts if x != i] + [k - ell]
    return Partition(tuple(sorted(parts, reverse=True)))


def psi(mu: Partition, alpha: Partition, m: int) -> Partition:
    """Adjoin ``m`` cells to ``alpha in D(mu_hat)``.

    With ``q`` the height of the rectangle indexed by the removed part,
    ``m = q d + r`` and ``d`` columns of height ``q`` plus one of height
    ``r`` are added. A removed part of 0 means ``d = 0``, ``r = m``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    base = mu_hat(mu)
    if not (base.parts and base.parts[0] >= 2 and in_D(base, alpha)):
        raise NotInDomain(f"{alpha} is not in D({base})")
    cols = list(conjugate_parts(alpha.parts))
    idx = removed_part(mu)
    if idx > 0:
        q = rect_decomp(alpha).heights[idx - 1]
        d, r = divmod(m, q)
        cols += [q] * d
    else:
        r = m
    cols.append(r)
    return from_columns(cols)
