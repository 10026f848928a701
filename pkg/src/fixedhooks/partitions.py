"""Integer partitions, Young diagram hook lengths, and restricted enumeration.

Partitions are weakly decreasing tuples of positive integers.  Everything in
this module is exact integer combinatorics; the generating-function side of
the package lives in :mod:`fixedhooks.qseries` and :mod:`fixedhooks.genfun`.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator


class Family(str, Enum):
    """Which partitions an enumeration yields.

    ``ODD`` keeps partitions whose parts are all odd, ``DISTINCT`` those with
    strictly decreasing parts, ``ODD_DISTINCT`` both at once.
    """

    ALL = "all"
    ODD = "odd"
    DISTINCT = "distinct"
    ODD_DISTINCT = "odd-distinct"

    def admits(self, parts: tuple[int, ...]) -> bool:
        if self in (Family.ODD, Family.ODD_DISTINCT):
            if any(p % 2 == 0 for p in parts):
                return False
        if self in (Family.DISTINCT, Family.ODD_DISTINCT):
            if any(a == b for a, b in zip(parts, parts[1:])):
                return False
        return True


def conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Column counts of the Young diagram: entry j-1 is #{i : parts[i] >= j}."""
    if not parts:
        return ()
    out = []
    r = len(parts)
    i = r
    for j in range(1, parts[0] + 1):
        while i > 0 and parts[i - 1] < j:
            i -= 1
        out.append(i)
    return tuple(out)


class Partition:
    """A partition of a non-negative integer.

    Zero parts are stripped on construction, so ``parts`` holds positive
    integers only and the empty tuple is the unique partition of 0.
    Instances are treated as immutable; the conjugate is cached.

    >>> Partition((4, 4, 3, 1)).conjugate().parts
    (4, 3, 3, 2)
    """

    __slots__ = ("parts", "n", "_conj")

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be non-negative: {ps}")
        self.parts = ps
        self.n = sum(ps)
        self._conj = None

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.parts) + ")"

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        """The transpose of the Young diagram.  An involution."""
        if self._conj is None:
            self._conj = conjugate_parts(self.parts)
        return Partition(self._conj)

    def conj_parts(self) -> tuple[int, ...]:
        if self._conj is None:
            self._conj = conjugate_parts(self.parts)
        return self._conj

    def hook_length(self, i: int, j: int) -> int:
        """Hook length of cell (i, j), 1-indexed: arm + leg + 1.

        Raises ValueError when (i, j) is not a cell of the diagram.
        """
        if not (1 <= i <= len(self.parts)) or not (1 <= j <= self.parts[i - 1]):
            raise ValueError(f"({i}, {j}) is not a cell of {self}")
        return self.parts[i - 1] + self.conj_parts()[j - 1] - i - j + 1

    def column_hooks(self, m: int) -> tuple[int, ...]:
        """Hook lengths down column m: (h_{1,m}, ..., h_{t,m}) with t parts >= m.

        The sequence is strictly decreasing; it is empty when no part
        reaches column m.
        """
        if m < 1:
            raise ValueError("column index must be >= 1")
        conj = self.conj_parts()
        t = conj[m - 1] if m <= len(conj) else 0
        cm = conj[m - 1] if t else 0
        return tuple(self.parts[i - 1] + cm - i - m + 1 for i in range(1, t + 1))


def _gen_all(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _gen_all(n - first, first):
            yield (first,) + rest


def _gen_odd(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    first = min(n, cap)
    if first % 2 == 0:
        first -= 1
    for f in range(first, 0, -2):
        for rest in _gen_odd(n - f, f):
            yield (f,) + rest


def _gen_distinct(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _gen_distinct(n - first, first - 1):
            yield (first,) + rest


def _gen_odd_distinct(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    first = min(n, cap)
    if first % 2 == 0:
        first -= 1
    for f in range(first, 0, -2):
        for rest in _gen_odd_distinct(n - f, f - 2):
            yield (f,) + rest


_GENERATORS = {
    Family.ALL: _gen_all,
    Family.ODD: _gen_odd,
    Family.DISTINCT: _gen_distinct,
    Family.ODD_DISTINCT: _gen_odd_distinct,
}


def enumerate_parts(
    n: int, family: Family = Family.ALL, max_part: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield the part tuples of every partition of n in the family.

    Reverse-lexicographic order: (n) first, (1,...,1) last.  ``max_part``
    additionally caps every part.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = n if max_part is None else min(n, max_part)
    yield from _GENERATORS[Family(family)](n, cap)


def enumerate_partitions(
    n: int, family: Family = Family.ALL, max_part: int | None = None
) -> Iterator[Partition]:
    """Like :func:`enumerate_parts` but wrapping each tuple in a Partition."""
    for parts in enumerate_parts(n, family, max_part):
        yield Partition(parts)


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int | None = None) -> int:
    """Number of partitions of n (into parts <= max_part when given).

    Bounded-part dynamic programming, exact integers.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    cap = n if max_part is None else min(max_part, n)
    if cap <= 0:
        return 0
    if cap == 1:
        return 1
    return partition_count(n - cap, cap) + partition_count(n, cap - 1)
