"""Integer partitions as Ferrers boards.

A :class:`Partition` stores its positive parts in weakly decreasing order.
Reading past the stored parts gives 0, so a partition behaves like the
infinite sequence ``mu_1 >= mu_2 >= ... >= 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Sequence

from .errors import BadToken, EmptyPartition, InvalidDecomp, NotDecreasing


@dataclass(frozen=True, slots=True)
class Partition:
    """Weakly decreasing tuple of positive parts with a cached weight."""

    parts: tuple[int, ...] = ()
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotDecreasing(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise BadToken(f"parts must be nonnegative, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """The ``i``-th part, 1-based; 0 beyond the last positive part."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({str(self)})"


EMPTY = Partition()

_TOKEN = re.compile(r"[,\s]+")


def parse_partition(text: str) -> Partition:
    """Parse ``"6,5,5,2"`` (commas or spaces) or ``"0"`` for the empty partition."""
    tokens = [t for t in _TOKEN.split(text.strip()) if t]
    if not tokens:
        raise BadToken(f"empty partition literal {text!r}")
    values = []
    for tok in tokens:
        if not re.fullmatch(r"\d+", tok):
            raise BadToken(f"not a nonnegative integer: {tok!r}")
        values.append(int(tok))
    if values == [0]:
        return EMPTY
    if 0 in values:
        raise BadToken(f"zero mixed with positive parts in {text!r}")
    for a, b in zip(values, values[1:]):
        if a < b:
            raise NotDecreasing(f"{text!r} is not weakly decreasing")
    return Partition(values)


def as_partition(p: Partition | Sequence[int] | str) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return parse_partition(p)
    return Partition(tuple(p))


def add(p: Partition, q: Partition) -> Partition:
    """Componentwise sum; on boards, the union of the two column multisets."""
    a, b = p.parts, q.parts
    if len(a) < len(b):
        a, b = b, a
    return Partition(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))


def ones(c: int) -> Partition:
    """The single column ``(1^c)``."""
    return Partition((1,) * c)


def top_multiplicity(p: Partition) -> int:
    """Number of parts equal to the largest part (``m(alpha)``)."""
    if not p.parts:
        return 0
    top = p.parts[0]
    m = 0
    for x in p.parts:
        if x != top:
            break
        m += 1
    return m


def ne(p: Partition) -> Partition:
    """``(mu_1 + 1, mu_1, mu_2, ...)``."""
    if not p.parts:
        raise EmptyPartition("ne() needs a nonempty partition")
    return Partition((p.parts[0] + 1,) + p.parts)


def conjugate_parts(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    out = []
    n = len(parts)
    for j in range(1, parts[0] + 1):
        while n and parts[n - 1] < j:
            n -= 1
        out.append(n)
    return tuple(out)


def conjugate(p: Partition) -> Partition:
    return Partition(conjugate_parts(p.parts))


@dataclass(frozen=True, slots=True)
class ShapeClass:
    is_strict: bool
    is_super_strict: bool
    is_staircase: bool
    distinct_magnitudes: int


def is_strict(p: Partition) -> bool:
    return all(a > b for a, b in zip(p.parts, p.parts[1:]))


def is_super_strict(p: Partition) -> bool:
    return all(a - b >= 2 for a, b in zip(p.parts, p.parts[1:]))


def is_staircase(p: Partition) -> bool:
    j = len(p.parts)
    return j >= 1 and p.parts == tuple(range(j, 0, -1))


def distinct_magnitudes(p: Partition) -> int:
    return len(set(p.parts))


def classify(p: Partition) -> ShapeClass:
    return ShapeClass(
        is_strict=is_strict(p),
        is_super_strict=is_super_strict(p),
        is_staircase=is_staircase(p),
        distinct_magnitudes=distinct_magnitudes(p),
    )


def staircase(j: int) -> Partition:
    """``(j, j-1, ..., 1)``; empty for ``j = 0``."""
    return Partition(tuple(range(j, 0, -1)))


@dataclass(frozen=True, slots=True)
class RectDecomp:
    """Side-by-side rectangles ``widths[i] x heights[i]``, heights strictly decreasing."""

    widths: tuple[int, ...]
    heights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.widths)
        h = tuple(int(y) for y in self.heights)
        if len(w) != len(h) or not w:
            raise InvalidDecomp("widths and heights must be nonempty and of equal length")
        if min(w) < 1 or min(h) < 1:
            raise InvalidDecomp("widths and heights must be positive")
        if any(a <= b for a, b in zip(h, h[1:])):
            raise InvalidDecomp(f"heights must be strictly decreasing, got {h}")
        object.__setattr__(self, "widths", w)
        object.__setattr__(self, "heights", h)

    @property
    def weight(self) -> int:
        return sum(x * y for x, y in zip(self.widths, self.heights))

    def __len__(self) -> int:
        return len(self.heights)


def rect_decomp(p: Partition) -> RectDecomp:
    if not p.parts:
        raise EmptyPartition("the empty partition has no rectangular decomposition")
    cols = conjugate_parts(p.parts)
    runs = [(h, len(list(g))) for h, g in groupby(cols)]
    return RectDecomp(tuple(w for _, w in runs), tuple(h for h, _ in runs))


def from_rect_decomp(d: RectDecomp) -> Partition:
    cols = []
    for w, h in zip(d.widths, d.heights):
        cols.extend([h] * w)
    return Partition(conjugate_parts(cols))


def from_columns(columns: Iterable[int]) -> Partition:
    """Build a partition from an unordered collection of column heights."""
    cols = sorted((c for c in columns if c > 0), reverse=True)
    return Partition(conjugate_parts(cols))
