"""Brute-force enumeration oracles for fixed-hook counts.

Every count here is obtained by enumerating partitions and inspecting Young
diagrams directly.  The generating-function builders in
:mod:`fixedhooks.genfun` are verified coefficient-by-coefficient against
these oracles; nothing in this module touches q-series arithmetic.

A cell (i, m) of a partition is an *h-fixed hook in column m* when
``hook_length(i, m) == i + h``.  Because the hooks down a column strictly
decrease while ``i + h`` strictly increases, a column contains at most one
h-fixed hook for each h.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import (
    Family,
    Partition,
    conjugate_parts,
    enumerate_parts,
    enumerate_partitions,
    partition_count,
)


def count_fixed_by_part(n: int, m: int, h: int, k: int, family: Family = Family.ALL) -> int:
    """Pairs (partition of n, row i) with part size k and an h-fixed hook at (i, m).

    Requires k >= m, since a part smaller than m has no cell in column m.
    """
    if m < 1:
        raise ValueError("column index m must be >= 1")
    if k < m:
        raise ValueError(f"part size k={k} has no cell in column m={m}")
    total = 0
    for parts in enumerate_parts(n, family):
        conj = conjugate_parts(parts)
        cm = conj[m - 1] if m <= len(conj) else 0
        for i, part in enumerate(parts, start=1):
            if part == k and part + cm - i - m + 1 == i + h:
                total += 1
    return total


def count_fixed_by_hook(n: int, m: int, h: int, k: int, family: Family = Family.ALL) -> int:
    """Pairs (partition of n, row i) with an h-fixed hook of size k at (i, m).

    The row is forced to i = k - h; the count is 0 when k - h < 1.
    """
    if m < 1:
        raise ValueError("column index m must be >= 1")
    i = k - h
    if i < 1:
        return 0
    total = 0
    for parts in enumerate_parts(n, family):
        if len(parts) < i or parts[i - 1] < m:
            continue
        conj = conjugate_parts(parts)
        if parts[i - 1] + conj[m - 1] - i - m + 1 == k:
            total += 1
    return total


def count_hooks_of_size(
    n: int, k: int, m: int | None = None, family: Family = Family.ALL
) -> int:
    """Cells with hook length k in all partitions of n in the family.

    With ``m`` given, only cells in column m are counted; with ``m`` absent,
    cells in every column.
    """
    if k < 1:
        raise ValueError("hook size k must be >= 1")
    total = 0
    for parts in enumerate_parts(n, family):
        conj = conjugate_parts(parts)
        if m is not None:
            cm = conj[m - 1] if m <= len(conj) else 0
            for i in range(1, cm + 1):
                if parts[i - 1] + cm - i - m + 1 == k:
                    total += 1
        else:
            for i, part in enumerate(parts, start=1):
                for j in range(1, part + 1):
                    if part + conj[j - 1] - i - j + 1 == k:
                        total += 1
    return total


# ---------------------------------------------------------------------------
# Colored-partition oracles
# ---------------------------------------------------------------------------
#
# A two-colored partition is an ordinary partition (the first color) together
# with a second partition whose parts are capped at m - 1 (the second color).
# Only part sizes 1 .. m-1 may appear twice-colored; larger sizes exist in the
# first color alone.


def t11_qualifying_sizes(parts: tuple[int, ...], m: int) -> list[int]:
    """Sizes L such that L appears exactly L + m - 1 times in ``parts`` while
    none of L+1, ..., L+2m-2 appears."""
    mult = Counter(parts)
    out = []
    for L in sorted(mult):
        if mult[L] != L + m - 1:
            continue
        if any(mult.get(x, 0) for x in range(L + 1, L + 2 * m - 1)):
            continue
        out.append(L)
    return out


@lru_cache(maxsize=None)
def _t11_first_weight(a: int, m: int) -> int:
    """Sum over first-color partitions of a of their number of qualifying sizes."""
    return sum(len(t11_qualifying_sizes(parts, m)) for parts in enumerate_parts(a))


def count_colored_thm11(n: int, m: int) -> int:
    """Sum over L of the two-colored partitions of n in which a part of size L
    occurs exactly L + m - 1 times in the first color with no first-color parts
    of sizes L+1 .. L+2m-2.

    An object is counted once per qualifying L.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    total = 0
    for a in range(n + 1):
        w = _t11_first_weight(a, m)
        if w:
            total += w * partition_count(n - a, m - 1)
    return total


def colored_t11_witnesses(n: int, m: int) -> list[tuple[Partition, Partition, int]]:
    """The (first, second, L) triples behind :func:`count_colored_thm11`."""
    out = []
    for a in range(n, -1, -1):
        for first in enumerate_parts(a):
            sizes = t11_qualifying_sizes(first, m)
            if not sizes:
                continue
            for second in enumerate_parts(n - a, max_part=m - 1):
                for L in sizes:
                    out.append((Partition(first), Partition(second), L))
    return out


@lru_cache(maxsize=None)
def _t13_first_count(a: int, m: int, k: int) -> int:
    """First-color partitions of a avoiding sizes k-m+1 .. k+m-1 and containing
    every size 1 .. k-m at least once."""
    lo, hi = k - m + 1, k + m - 1
    need = range(1, k - m + 1)
    total = 0
    for parts in enumerate_parts(a):
        sizes = set(parts)
        if any(lo <= p <= hi for p in sizes):
            continue
        if all(x in sizes for x in need):
            total += 1
    return total


@lru_cache(maxsize=None)
def _distinct_exact(d: int, j: int, cap: int) -> int:
    """Partitions of d into exactly j distinct parts, each <= cap."""
    if j == 0:
        return 1 if d == 0 else 0
    if cap <= 0 or d < j * (j + 1) // 2:
        return 0
    return _distinct_exact(d, j, cap - 1) + _distinct_exact(d - cap, j - 1, cap - 1)


def count_colored_thm13(nprime: int, m: int, k: int, h: int = 0, variant: str = "stated") -> int:
    """Colored companions of the h-fixed hooks from parts of size k in column m.

    ``variant="stated"`` counts two-colored partitions of ``nprime`` whose
    first color avoids part sizes k-m+1 .. k+m-1 and contains every size
    1 .. k-m at least once; ``h`` does not restrict these objects.  That
    description only tracks the fixed-hook count at h = 0.

    ``variant="derived"`` counts the h-aware configurations the summands
    actually decompose into: exactly u first-color parts of size >= k+m
    (u ranging over max(0, k-m-h), ...), together with k-m distinct extra
    parts of sizes in [1, u+h], plus free second-color parts <= m-1, at
    weight ``nprime + (k-m-h)(k+m)``.  At h = 0 both variants agree.

    Returns 0 for negative ``nprime``.
    """
    if m < 1 or k < m:
        raise ValueError("need k >= m >= 1")
    if nprime < 0:
        return 0
    if variant == "stated":
        return sum(
            _t13_first_count(a, m, k) * partition_count(nprime - a, m - 1)
            for a in range(nprime + 1)
        )
    if variant != "derived":
        raise ValueError(f"unknown variant {variant!r}")
    weight = nprime + (k - m - h) * (k + m)
    if weight < 0:
        return 0
    total = 0
    u = max(0, k - m - h)
    while u * (k + m) <= weight:
        rem0 = weight - u * (k + m)
        for d in range(rem0 + 1):
            ways = _distinct_exact(d, k - m, u + h)
            if not ways:
                continue
            rem = rem0 - d
            pads = sum(
                partition_count(b, u) * partition_count(rem - b, m - 1)
                for b in range(rem + 1)
            )
            total += ways * pads
        u += 1
    return total


@lru_cache(maxsize=None)
def _t12_profile(t: int, m: int) -> tuple[tuple[int, int], ...]:
    """For partitions of t with exactly one part m and no parts strictly
    between m and 2m: how many have g parts of size >= 2m, per g."""
    counts: Counter[int] = Counter()
    for parts in enumerate_parts(t):
        if sum(1 for p in parts if p == m) != 1:
            continue
        if any(m < p < 2 * m for p in parts):
            continue
        counts[sum(1 for p in parts if p >= 2 * m)] += 1
    return tuple(sorted(counts.items()))


def count_restricted_thm12(n: int, m: int, h: int) -> int:
    """Partitions of n - m*h in which m appears exactly once, no part lies in
    m+1 .. 2m-1, and at least -h parts are >= 2m (vacuous for h >= 0).

    Returns 0 when n - m*h < 0.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    t = n - m * h
    if t < 0:
        return 0
    need = max(0, -h)
    return sum(c for g, c in _t12_profile(t, m) if g >= need)


# ---------------------------------------------------------------------------
# Batched census
# ---------------------------------------------------------------------------


@dataclass
class HookTally:
    """One-pass census of hook statistics over all partitions of n <= max_n.

    ``by_part[(n, m, k, h)]`` counts cells (i, m) with part size k and
    fixedness h = hook - i, for columns m <= max_m; ``by_hook`` keys on the
    hook size instead.  ``hooks_col[(n, m, k)]`` counts hooks of size k in
    column m <= max_m, and ``hooks_total[(n, k)]`` in all columns.
    """

    max_n: int
    family: Family
    max_m: int
    by_part: Counter = field(default_factory=Counter)
    by_hook: Counter = field(default_factory=Counter)
    hooks_col: Counter = field(default_factory=Counter)
    hooks_total: Counter = field(default_factory=Counter)


@lru_cache(maxsize=None)
def hook_tally(max_n: int, family: Family = Family.ALL, max_m: int = 6) -> HookTally:
    """Census every partition of every n <= max_n once; see :class:`HookTally`."""
    tally = HookTally(max_n, family, max_m)
    by_part, by_hook = tally.by_part, tally.by_hook
    hooks_col, hooks_total = tally.hooks_col, tally.hooks_total
    for n in range(max_n + 1):
        for parts in enumerate_parts(n, family):
            conj = conjugate_parts(parts)
            for i, part in enumerate(parts, start=1):
                base = part - i + 1
                for m in range(1, part + 1):
                    hook = base + conj[m - 1] - m
                    hooks_total[(n, hook)] += 1
                    if m <= max_m:
                        h = hook - i
                        by_part[(n, m, part, h)] += 1
                        by_hook[(n, m, hook, h)] += 1
                        hooks_col[(n, m, hook)] += 1
    return tally


def fixed_hook_witnesses(
    n: int,
    m: int,
    h: int,
    k: int | None = None,
    family: Family = Family.ALL,
    by: str = "hook",
) -> list[Partition]:
    """Partitions of n owning an h-fixed hook in column m, in enumeration order.

    With ``k`` given, only hooks of size k (``by="hook"``) or hooks arising
    from parts of size k (``by="part"``) qualify.  Since a column carries at
    most one h-fixed hook, each partition appears at most once.
    """
    out = []
    for lam in enumerate_partitions(n, family):
        conj = lam.conj_parts()
        cm = conj[m - 1] if m <= len(conj) else 0
        for i in range(1, cm + 1):
            hook = lam.parts[i - 1] + cm - i - m + 1
            if hook != i + h:
                continue
            if k is not None:
                size = hook if by == "hook" else lam.parts[i - 1]
                if size != k:
                    continue
            out.append(lam)
            break
    return out
