"""Integer partitions and the census of line-graph algebras.

P(m) is computed by the classic part-bounded dynamic program with exact
integers.  The number of algebra isomorphism classes realized by oriented
paths on n vertices is P(n-1) - P(n-4): partitions of the n-1 edges into
sink groups, minus those with three or more singleton groups.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .classify import SemisimpleType

DEFAULT_LIMIT = 1000


class PartitionTable:
    """Memoized partition counts P(0..limit).

    P(0) = 1 and P(m) = 0 for m < 0.  Values grow fast but stay exact;
    the limit only bounds the memo, raise it for larger arguments.
    """

    def __init__(self, limit: int = DEFAULT_LIMIT):
        if limit < 0:
            raise ValueError("limit must be nonnegative")
        self.limit = limit
        self._table: list[int] | None = None

    def _build(self) -> list[int]:
        ways = [0] * (self.limit + 1)
        ways[0] = 1
        for part in range(1, self.limit + 1):
            for total in range(part, self.limit + 1):
                ways[total] += ways[total - part]
        return ways

    def count(self, m: int) -> int:
        if m < 0:
            return 0
        if m > self.limit:
            raise ValueError(f"P({m}) exceeds the table limit {self.limit}")
        if self._table is None:
            self._table = self._build()
        return self._table[m]


_default_table = PartitionTable()


def partition_count(m: int) -> int:
    """P(m), with P(0) = 1 and P(m) = 0 for negative m."""
    return _default_table.count(m)


def partitions_of(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing partitions of m, ascending lexicographic order."""
    if m == 0:
        yield ()
        return
    if max_part is None:
        max_part = m
    for first in range(1, min(m, max_part) + 1):
        for rest in partitions_of(m - first, first):
            yield (first,) + rest


def line_algebra_count(n: int) -> int:
    """Number of algebra classes coming from oriented paths on n vertices."""
    if n < 2:
        raise ValueError("a line graph needs at least 2 vertices")
    return partition_count(n - 1) - partition_count(n - 4)


def enumerate_line_types(n: int) -> list[SemisimpleType]:
    """All types realizable on an n-vertex oriented path, deterministically.

    A partition of the n-1 edges with at most two singleton parts maps to
    the type with parts one larger; order follows partitions_of.
    """
    if n < 2:
        raise ValueError("a line graph needs at least 2 vertices")
    out = []
    for lam in partitions_of(n - 1):
        if sum(1 for p in lam if p == 1) <= 2:
            out.append(tuple(sorted(p + 1 for p in lam)))
    return out
