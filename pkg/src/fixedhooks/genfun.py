"""Series builders for fixed-hook counting identities.

Each public ``gf_*`` function returns a :class:`LaurentSeries` truncated at a
caller-supplied order N whose coefficient at q^n is a fixed-hook count of the
matching enumeration oracle in :mod:`fixedhooks.oracles`.  Infinite sums are
truncated by the monotone growth of each summand's minimum exponent, noted
inline per builder; every summand's remaining factors have valuation >= 0, so
dropping indices past the stated bound never loses a coefficient below N.

Two conventions do the index bookkeeping everywhere:

* ``inv_poch(..., count)`` is the zero series for ``count < 0`` (reciprocal
  of a pole), which switches off summands whose row count would be negative;
* ``gauss_binomial(a, b)`` is zero unless ``0 <= b <= a`` (with ``b == 0``
  giving 1), which enforces the printed summation limits.

Three builders take a ``variant`` argument because the closed form they
implement circulates in two index conventions that disagree for columns
past the first; the verifier compares both against the brute-force oracle
and records which one matches.  The naming is uniform: ``"stated"`` is the
closed form exactly as displayed, ``"derived"`` re-derives the under- and
above-hook factors from the diagram geometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .partitions import Family
from .qseries import LaurentSeries, gauss_binomial, inv_poch, poch

Factor = Callable[[int], LaurentSeries]


def _choose2(x: int) -> int:
    """x*(x-1)/2 as a polynomial in x (negative arguments allowed)."""
    return x * (x - 1) // 2


def _term(order: int, exp: int, factors: Sequence[Factor]) -> LaurentSeries:
    """q**exp times a product of factors, exact below ``order``.

    Factors are callables from a working order to a series.  They usually
    have valuation 0; when one reaches into negative exponents the first
    build comes out short and is redone with the missing headroom.
    """
    width = order - exp
    if width <= 0:
        return LaurentSeries.zero(order)
    pad = 0
    while True:
        working = width + pad
        prod = LaurentSeries.one(working)
        for factor in factors:
            prod = prod * factor(working)
            if prod.is_zero():
                break
        if prod.order >= width:
            return prod.truncate(width).shift(exp)
        pad += width - prod.order


def _require_column(m: int, k: int | None = None) -> None:
    if m < 1:
        raise ValueError("column index m must be >= 1")
    if k is not None and k < m:
        raise ValueError(f"part size k={k} has no cell in column m={m}")


def _finish(total: LaurentSeries, order: int, factors: Sequence[Factor]) -> LaurentSeries:
    """Multiply ``total`` by valuation-0 tail factors and truncate to ``order``.

    The factors are built with enough headroom that a ``total`` reaching into
    negative exponents still comes out exact below ``order``.
    """
    pad = max(0, -total.min_exp)
    for factor in factors:
        total = total * factor(order + pad)
    return total.truncate(order)


# ---------------------------------------------------------------------------
# Fixed hooks counted by the part size they arise from
# ---------------------------------------------------------------------------


def gf_fixed_by_part_m1(k: int, h: int, order: int, form: str = "reindexed") -> LaurentSeries:
    """First-column h-fixed hooks arising from parts of size k.

    ``form="reindexed"`` sums from s = 0; ``form="rows"`` keeps the summation
    index equal to the row of the fixed part.  Both displayed forms agree
    coefficientwise.  Summand minimum exponents grow linearly in s (slope
    k+1), which bounds the truncation.
    """
    if k < 1:
        raise ValueError("part size k must be >= 1")
    total = LaurentSeries.zero(order)
    if form == "reindexed":
        s = 0
        while True:
            e = s * (k + 1) + k * (k - h)
            if e > order:
                break
            total = total + _term(
                order, e,
                [lambda M, s=s: inv_poch(1, s + k - h - 1, M),
                 lambda M, s=s: gauss_binomial(s + k - 1, k - 1, 1, M)],
            )
            s += 1
    elif form == "rows":
        s = max(1, k - h)
        while True:
            e = (k + 1) * (s - 1) + h + 1
            if e > order:
                break
            total = total + _term(
                order, e,
                [lambda M, s=s: inv_poch(1, s - 1, M),
                 lambda M, s=s: gauss_binomial(s + h - 1, k - 1, 1, M)],
            )
            s += 1
    else:
        raise ValueError(f"unknown form {form!r}")
    return total


def gf_mfixed_by_part(
    m: int, k: int, h: int, order: int, form: str = "reindexed"
) -> LaurentSeries:
    """h-fixed hooks in column m arising from parts of size k >= m.

    At m = 1 this coincides coefficientwise with :func:`gf_fixed_by_part_m1`.
    Summand exponents grow with slope k+m.
    """
    _require_column(m, k)
    total = LaurentSeries.zero(order)
    if form == "reindexed":
        s = 0
        while True:
            e = s * (k + m) + k * (k - h - m + 1)
            if e > order:
                break
            total = total + _term(
                order, e,
                [lambda M, s=s: inv_poch(1, s + k - h - m, M),
                 lambda M, s=s: gauss_binomial(s + k - m, k - m, 1, M)],
            )
            s += 1
    elif form == "rows":
        s = max(1, k - h - m + 1)
        while True:
            e = s * (k + m) + m * (h - k + m - 1)
            if e > order:
                break
            total = total + _term(
                order, e,
                [lambda M, s=s: inv_poch(1, s - 1, M),
                 lambda M, s=s: gauss_binomial(s + h - 1, k - m, 1, M)],
            )
            s += 1
    else:
        raise ValueError(f"unknown form {form!r}")
    return _finish(total, order, [lambda M: inv_poch(1, m - 1, M)])


def gf_odd_by_part(
    m: int, k: int, h: int, order: int, variant: str = "derived"
) -> LaurentSeries:
    """h-fixed hooks in column m from parts of size k, in all-odd partitions.

    A part of an odd partition is odd, so the series is zero for even k (the
    binomial parameters also stop being integers there).  The two variants
    differ in the lower index of the under-hook binomial: "stated" uses
    s + h - k, "derived" uses the row count s + h - k + m - 1 below the hook
    (and, for even m, carries the inserted column through the exponent).
    They coincide at m = 1.
    """
    _require_column(m, k)
    if variant not in ("stated", "derived"):
        raise ValueError(f"unknown variant {variant!r}")
    if k % 2 == 0:
        return LaurentSeries.zero(order)
    total = LaurentSeries.zero(order)
    s = max(1, k - h - m + 1)
    while True:
        j = s + h - k + m - 1
        if m % 2 == 1:
            e = s * (k + m) + m * (h - k + m - 1)
            top_shift = (k - m) // 2
        elif variant == "derived":
            e = s * (k + m + 1) + (m + 1) * (h - k + m - 1)
            top_shift = (k - m - 1) // 2
        else:
            e = s * (k + m + 1) + m * (h - k + m) + h - k + 1
            top_shift = (k - m - 1) // 2
        if e > order:
            break
        bottom = j if variant == "derived" else s + h - k
        total = total + _term(
            order, e,
            [lambda M, s=s: inv_poch(2, s - 1, M, step=2),
             lambda M, b=bottom, t=top_shift: gauss_binomial(b + t, b, 2, M)],
        )
        s += 1
    half = (m - 1) // 2 if m % 2 else m // 2
    return _finish(total, order, [lambda M: inv_poch(1, half, M, step=2)])


def gf_distinct_by_part(
    m: int, k: int, h: int, order: int, variant: str = "stated"
) -> LaurentSeries:
    """h-fixed hooks in column m from parts of size k, in distinct partitions.

    The sum is finite (s = 0 .. k-m).  "stated" keeps the displayed constant
    denominator (q;q)_{k-h-1}; "derived" uses the row-dependent
    (q;q)_{s+k-m-h}, the count of rows above the fixed part.  The verifier
    records which one matches the enumeration.
    """
    _require_column(m, k)
    if variant not in ("stated", "derived"):
        raise ValueError(f"unknown variant {variant!r}")
    total = LaurentSeries.zero(order)
    for s in range(0, k - m + 1):
        e = (
            s * (k + m)
            + k * (k - h - m + 1)
            + _choose2(s + k - m + 1 - h)
            + _choose2(s)
        )
        if variant == "stated":
            denom = lambda M, _=s: inv_poch(1, k - h - 1, M)
        else:
            denom = lambda M, s=s: inv_poch(1, s + k - m - h, M)
        total = total + _term(
            order, e,
            [lambda M, s=s: gauss_binomial(k - m, s, 1, M), denom],
        )
    return _finish(total, order, [lambda M: poch(1, m - 1, M, sign=-1)])


# ---------------------------------------------------------------------------
# Fixed hooks counted by their hook size
# ---------------------------------------------------------------------------


def gf_fixed_by_hook_m1(k: int, h: int, order: int) -> LaurentSeries:
    """First-column h-fixed hooks of size k.  Zero series when h >= k."""
    if k < 1:
        raise ValueError("hook size k must be >= 1")
    if k - h - 1 < 0:
        return LaurentSeries.zero(order)
    total = LaurentSeries.zero(order)
    for l in range(1, k + 1):
        e = k + l * (k - h - 1)
        total = total + _term(
            order, e, [lambda M, l=l: gauss_binomial(k - 1, l - 1, 1, M)]
        )
    return _finish(total, order, [lambda M: inv_poch(1, k - h - 1, M)])


def gf_mfixed_by_hook(m: int, k: int, h: int, order: int) -> LaurentSeries:
    """h-fixed hooks of size k in column m; specializes to the m = 1 builder."""
    _require_column(m)
    if k < 1:
        raise ValueError("hook size k must be >= 1")
    if k - h - 1 < 0:
        return LaurentSeries.zero(order)
    total = LaurentSeries.zero(order)
    for l in range(1, k + 1):
        e = (m - 1) * (2 * k - h - l) + k + l * (k - h - 1)
        total = total + _term(
            order, e, [lambda M, l=l: gauss_binomial(k - 1, l - 1, 1, M)]
        )
    return _finish(total, order, [lambda M: inv_poch(1, k - h - 1, M),
                                  lambda M: inv_poch(1, m - 1, M)])


def gf_odd_by_hook(m: int, k: int, h: int, order: int) -> LaurentSeries:
    """h-fixed hooks of size k in column m, in all-odd partitions.

    The horizontal span l of the hook must share the parity of m so that the
    part it sits in is odd; the sum runs over that parity class only.
    """
    _require_column(m)
    if k - h - 1 < 0:
        return LaurentSeries.zero(order)
    total = LaurentSeries.zero(order)
    for l in range(1, k + 1):
        if l % 2 != m % 2:
            continue
        e = k + l * (k - h - 1) + (m - 1) * (2 * k - h - l)
        if m % 2 == 1:
            top = k - l + (l - 1) // 2
        else:
            e += k - l
            top = k - l + (l - 2) // 2
        total = total + _term(
            order, e, [lambda M, t=top: gauss_binomial(t, k - l, 2, M)]
        )
    half = (m - 1) // 2 if m % 2 else m // 2
    return _finish(total, order, [lambda M: inv_poch(2, k - h - 1, M, step=2),
                                  lambda M: inv_poch(1, half, M, step=2)])


def gf_distinct_by_hook(m: int, k: int, h: int, order: int) -> LaurentSeries:
    """h-fixed hooks of size k in column m, in distinct partitions.

    Spans below ceil((k+1)/2) would need more distinct parts under the hook
    than there are available sizes; the binomial vanishes there anyway.
    """
    _require_column(m)
    if k - h - 1 < 0:
        return LaurentSeries.zero(order)
    total = LaurentSeries.zero(order)
    for l in range((k + 2) // 2, k + 1):
        e = (
            k
            + l * (k - h - 1)
            + (m - 1) * (2 * k - h - l)
            + _choose2(k - h)
            + _choose2(k - l)
        )
        total = total + _term(
            order, e, [lambda M, l=l: gauss_binomial(l - 1, k - l, 1, M)]
        )
    return _finish(total, order, [lambda M: inv_poch(1, k - h - 1, M),
                                  lambda M: poch(1, m - 1, M, sign=-1)])


def gf_odd_distinct_by_hook(m: int, k: int, h: int, order: int) -> LaurentSeries:
    """h-fixed hooks of size k in column m, in odd-and-distinct partitions.

    The under-hook binomial has top (l-1)/2 (m odd) or (l-2)/2 (m even):
    the count of odd part sizes available below the part carrying the hook.
    """
    _require_column(m)
    if k - h - 1 < 0:
        return LaurentSeries.zero(order)
    total = LaurentSeries.zero(order)
    if m % 2 == 1:
        lmin, parity, top_of = (2 * k + 1) // 3, 1, lambda l: (l - 1) // 2
    else:
        lmin, parity, top_of = (2 * k + 2) // 3, 0, lambda l: (l - 2) // 2
    for l in range(max(1, lmin), k + 1):
        if l % 2 != parity:
            continue
        e = (
            (m - 1) * (2 * k - h - l)
            + k
            + l * (k - h - 1)
            + 2 * _choose2(k - h)
            + 2 * _choose2(k - l)
        )
        if m % 2 == 0:
            e += k - l
        total = total + _term(
            order, e, [lambda M, l=l: gauss_binomial(top_of(l), k - l, 2, M)]
        )
    half = (m - 1) // 2 if m % 2 else m // 2
    return _finish(total, order, [lambda M: inv_poch(2, k - h - 1, M, step=2),
                                  lambda M: poch(1, half, M, step=2, sign=-1)])


def gf_odd_distinct_total(k: int, order: int, variant: str = "derived") -> LaurentSeries:
    """Hooks of length k in all odd-and-distinct partitions, all columns.

    Obtained by resumming :func:`gf_odd_distinct_by_hook` over every column
    and fixedness; the inner sums over the column-reindexing variable j are
    truncated once the exponent 2j(k-l+1), respectively (2j+1)(k-l+1), passes
    the working order (k-l+1 >= 1 keeps them growing).  The "stated" variant
    keeps the circulated inner Pochhammer lengths; "derived" recollapses the
    telescoping product, which shifts the odd-span length to (l+1)/2 and the
    even-span base to q^(2j+3).
    """
    if k < 1:
        raise ValueError("hook size k must be >= 1")
    if variant not in ("stated", "derived"):
        raise ValueError(f"unknown variant {variant!r}")

    def inner(M: int, span: int, odd_span: bool) -> LaurentSeries:
        acc = LaurentSeries.zero(M)
        j = 0
        while True:
            if odd_span:
                e = 2 * j * (k - span + 1)
                count = (span + 1) // 2 if variant == "derived" else (span - 1) // 2
                base = 2 * j + 1
            elif variant == "derived":
                e = (2 * j + 1) * (k - span + 1)
                count, base = span // 2, 2 * j + 3
            else:
                e = 2 * j * (k - span + 1)
                count, base = span // 2, 2 * j + 1
            if e > M:
                break
            acc = acc + _term(
                M, e, [lambda W, b=base, c=count: inv_poch(b, c, W, step=2, sign=-1)]
            )
            j += 1
        return acc

    total = LaurentSeries.zero(order)
    for l in range((2 * k + 1) // 3, k + 1):
        if l % 2 != 1:
            continue
        e0 = k + 2 * _choose2(k - l)
        total = total + _term(
            order, e0,
            [lambda M, l=l: gauss_binomial((l - 1) // 2, k - l, 2, M),
             lambda M, l=l: inner(M, l, True)],
        )
    for l in range(max(1, (2 * k + 2) // 3), k + 1):
        if l % 2 != 0:
            continue
        e0 = k + 2 * _choose2(k - l) + (k - l)
        total = total + _term(
            order, e0,
            [lambda M, l=l: gauss_binomial((l - 2) // 2, k - l, 2, M),
             lambda M, l=l: inner(M, l, False)],
        )
    return _finish(total, order, [lambda M: poch(1, None, M, step=2, sign=-1)])


# ---------------------------------------------------------------------------
# Closed forms for the headline identities
# ---------------------------------------------------------------------------


def gf_t11_closed_form(m: int, order: int) -> LaurentSeries:
    """Partitions with a 0-fixed hook in column m, via the colored closed form.

    The l-sum is truncated once l(l+m-1) > N; the quadratic growth in l makes
    the remainder invisible below N.
    """
    _require_column(m)
    total = LaurentSeries.zero(order)
    l = 1
    while True:
        e = l * (l + m - 1)
        if e > order:
            break
        total = total + _term(order, e, [lambda M, l=l: poch(l, 2 * m - 1, M)])
        l += 1
    return _finish(total, order, [lambda M: inv_poch(1, m - 1, M),
                                  lambda M: inv_poch(1, None, M)])


def gf_t12_closed_form(m: int, h: int, order: int) -> LaurentSeries:
    """h-fixed hooks in column m arising from parts of size exactly m.

    For h < 0 the closed form subtracts the first -h terms of the series
    expansion; for h >= 0 the correction sum is empty.
    """
    _require_column(m)

    def core(M: int) -> LaurentSeries:
        acc = inv_poch(2 * m, None, M)
        for s in range(0, -h):
            acc = acc - _term(M, 2 * m * s, [lambda W, s=s: inv_poch(1, s, W)])
        return acc

    return _term(order, m * h + m, [lambda M: inv_poch(1, m - 1, M), core])


def t13_weight_shift(m: int, k: int, h: int) -> int:
    """Weight offset between the fixed-hook count and its colored companion:
    the colored objects live at n + C(k-m+1, 2) - k(k-h-m+1)."""
    _require_column(m, k)
    return _choose2(k - m + 1) - k * (k - h - m + 1)


def gf_t14_hooks_of_size_k(m: int, k: int, order: int) -> LaurentSeries:
    """Hooks of size k in column m of all partitions.

    The summands carry negative powers of q that must cancel in the total;
    the cancellation is asserted rather than simplified away.
    """
    _require_column(m)
    if k < 1:
        raise ValueError("hook size k must be >= 1")

    def inner(M: int) -> LaurentSeries:
        acc = LaurentSeries.zero(M)
        for l in range(1, k + 1):
            acc = acc + _term(
                M, -(l - 1) * (m - 1),
                [lambda W, l=l: poch(m, l - 1, W),
                 lambda W, l=l: inv_poch(1, l - 1, W),
                 lambda W, l=l: inv_poch(1, k - l, W)],
            )
        return acc

    series = _term(order, k * m, [lambda M: inv_poch(k, None, M), inner])
    v = series.valuation()
    if v is not None and v < 0:
        raise AssertionError(
            f"negative powers of q failed to cancel (valuation {v}) for m={m}, k={k}"
        )
    return series


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


class TheoremId(str, Enum):
    """Stable identifiers for the verifiable identities."""

    T11_ClosedForm = "T11_ClosedForm"
    T12_ClosedForm = "T12_ClosedForm"
    T13_Shifted = "T13_Shifted"
    T14_HooksOfSizeK = "T14_HooksOfSizeK"
    FixedByPart_m1 = "FixedByPart_m1"
    MFixedByPart = "MFixedByPart"
    OddBySize = "OddBySize"
    DistinctBySize = "DistinctBySize"
    DistinctBySize_VariantB = "DistinctBySize_VariantB"
    FixedByHook_m1 = "FixedByHook_m1"
    MFixedByHook = "MFixedByHook"
    OddByHook = "OddByHook"
    DistinctByHook = "DistinctByHook"
    OddDistinctByHook = "OddDistinctByHook"
    OddDistinctTotal = "OddDistinctTotal"


@dataclass(frozen=True)
class BuilderSpec:
    """How to drive one catalog entry: its parameters, the partition family
    its coefficients count, the builder, and the variants it supports."""

    params: tuple[str, ...]
    family: Family
    build: Callable[..., LaurentSeries] | None
    variants: tuple[str, ...] = ()


CATALOG: dict[TheoremId, BuilderSpec] = {
    TheoremId.T11_ClosedForm: BuilderSpec(
        ("m",), Family.ALL, lambda order, m: gf_t11_closed_form(m, order)
    ),
    TheoremId.T12_ClosedForm: BuilderSpec(
        ("m", "h"), Family.ALL, lambda order, m, h: gf_t12_closed_form(m, h, order)
    ),
    TheoremId.T13_Shifted: BuilderSpec(("m", "k", "h"), Family.ALL, None),
    TheoremId.T14_HooksOfSizeK: BuilderSpec(
        ("m", "k"), Family.ALL, lambda order, m, k: gf_t14_hooks_of_size_k(m, k, order)
    ),
    TheoremId.FixedByPart_m1: BuilderSpec(
        ("k", "h"), Family.ALL, lambda order, k, h: gf_fixed_by_part_m1(k, h, order)
    ),
    TheoremId.MFixedByPart: BuilderSpec(
        ("m", "k", "h"),
        Family.ALL,
        lambda order, m, k, h: gf_mfixed_by_part(m, k, h, order),
    ),
    TheoremId.OddBySize: BuilderSpec(
        ("m", "k", "h"),
        Family.ODD,
        lambda order, m, k, h, variant="derived": gf_odd_by_part(m, k, h, order, variant),
        variants=("stated", "derived"),
    ),
    TheoremId.DistinctBySize: BuilderSpec(
        ("m", "k", "h"),
        Family.DISTINCT,
        lambda order, m, k, h, variant="stated": gf_distinct_by_part(m, k, h, order, variant),
        variants=("stated", "derived"),
    ),
    TheoremId.DistinctBySize_VariantB: BuilderSpec(
        ("m", "k", "h"),
        Family.DISTINCT,
        lambda order, m, k, h: gf_distinct_by_part(m, k, h, order, "derived"),
    ),
    TheoremId.FixedByHook_m1: BuilderSpec(
        ("k", "h"), Family.ALL, lambda order, k, h: gf_fixed_by_hook_m1(k, h, order)
    ),
    TheoremId.MFixedByHook: BuilderSpec(
        ("m", "k", "h"),
        Family.ALL,
        lambda order, m, k, h: gf_mfixed_by_hook(m, k, h, order),
    ),
    TheoremId.OddByHook: BuilderSpec(
        ("m", "k", "h"),
        Family.ODD,
        lambda order, m, k, h: gf_odd_by_hook(m, k, h, order),
    ),
    TheoremId.DistinctByHook: BuilderSpec(
        ("m", "k", "h"),
        Family.DISTINCT,
        lambda order, m, k, h: gf_distinct_by_hook(m, k, h, order),
    ),
    TheoremId.OddDistinctByHook: BuilderSpec(
        ("m", "k", "h"),
        Family.ODD_DISTINCT,
        lambda order, m, k, h: gf_odd_distinct_by_hook(m, k, h, order),
    ),
    TheoremId.OddDistinctTotal: BuilderSpec(
        ("k",),
        Family.ODD_DISTINCT,
        lambda order, k, variant="derived": gf_odd_distinct_total(k, order, variant),
        variants=("stated", "derived"),
    ),
}


def resolve_theorem(name: str) -> TheoremId:
    """Match a user-supplied tag: exact value, case-insensitive, or the short
    T11/T12/T13/T14 aliases."""
    lowered = name.lower()
    for tid in TheoremId:
        if tid.value.lower() == lowered:
            return tid
    aliases = {
        "t11": TheoremId.T11_ClosedForm,
        "t12": TheoremId.T12_ClosedForm,
        "t13": TheoremId.T13_Shifted,
        "t14": TheoremId.T14_HooksOfSizeK,
    }
    if lowered in aliases:
        return aliases[lowered]
    raise ValueError(f"unknown theorem tag {name!r}")


def build_series(
    theorem: TheoremId,
    order: int,
    m: int | None = None,
    k: int | None = None,
    h: int | None = None,
    variant: str | None = None,
) -> LaurentSeries:
    """Dispatch to the builder behind ``theorem`` with exactly its parameters."""
    spec = CATALOG[theorem]
    if spec.build is None:
        raise ValueError(f"{theorem.value} is an identity check, not a series builder")
    supplied = {"m": m, "k": k, "h": h}
    kwargs = {}
    for name in spec.params:
        if supplied[name] is None:
            raise ValueError(f"{theorem.value} requires --{name}")
        kwargs[name] = supplied[name]
    if variant is not None:
        if not spec.variants:
            raise ValueError(f"{theorem.value} has no variants")
        kwargs["variant"] = variant
    return spec.build(order, **kwargs)
