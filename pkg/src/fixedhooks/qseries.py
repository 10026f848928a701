"""Exact truncated Laurent series in one variable q.

A :class:`LaurentSeries` knows its coefficients for every exponent below a
truncation order N and nothing above; all arithmetic propagates the largest
order the operands justify.  Coefficients are Python integers, so every
stored value is exact at any magnitude.

The module also provides the two product primitives every generating
function here is assembled from: the q-Pochhammer symbol
``(a; b)_n = prod_{i=0}^{n-1} (1 - a b^i)`` with ``a = +-q^j`` and
``b = q^d``, and the Gaussian binomial
``binom(a, b)_q = (q;q)_a / ((q;q)_b (q;q)_{a-b})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class LaurentSeries:
    """Truncated formal Laurent series with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**(min_exp + i)``; exponents at or
    above ``order`` are unknown.  Instances are immutable; leading zero
    coefficients are normalized away (the zero-so-far series has
    ``min_exp == order`` and no stored coefficients).
    """

    __slots__ = ("min_exp", "coeffs", "order")

    def __init__(self, min_exp: int, coeffs: Iterable[int] = (), order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = min_exp + len(cs)
        if min_exp + len(cs) > order:
            raise ValueError("more coefficients than the truncation order admits")
        cs.extend([0] * (order - min_exp - len(cs)))
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        self.min_exp = min_exp + lead
        self.coeffs = tuple(cs[lead:])
        self.order = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls(order, (), order)

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> "LaurentSeries":
        """The series coeff * q**exp, truncated at ``order``."""
        if exp >= order:
            return cls.zero(order)
        return cls(exp, (coeff,), order)

    # -- inspection --------------------------------------------------------

    def coefficient(self, e: int) -> int:
        """Coefficient of q**e; raises for exponents at or past the order."""
        if e >= self.order:
            raise ValueError(f"exponent {e} is beyond the truncation order {self.order}")
        if e < self.min_exp:
            return 0
        return self.coeffs[e - self.min_exp]

    def coefficients(self, start: int, stop: int) -> list[int]:
        """Coefficients of q**start .. q**(stop-1); ``stop`` must be <= order."""
        return [self.coefficient(e) for e in range(start, stop)]

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) for the nonzero known terms."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None if zero so far."""
        for e, _ in self.items():
            return e
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.min_exp, self.coeffs, self.order))

    def __repr__(self):
        terms = []
        for e, c in self.items():
            if len(terms) == 8:
                terms.append("...")
                break
            terms.append(f"{c}*q^{e}" if e else str(c))
        body = " + ".join(terms) if terms else "0"
        return f"<{body} + O(q^{self.order})>"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        lo = min(self.min_exp, other.min_exp, order)
        out = [0] * (order - lo)
        for s in (self, other):
            base = s.min_exp - lo
            for i, c in enumerate(s.coeffs):
                if c and base + i < len(out):
                    out[base + i] += c
        return LaurentSeries(lo, out, order)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_exp, [-c for c in self.coeffs], self.order)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentSeries.zero(self.order)
            return LaurentSeries(
                self.min_exp, [other * c for c in self.coeffs], self.order
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        lo = min(self.min_exp + other.min_exp, order)
        length = order - lo
        out = [0] * length
        a, b = self, other
        if len(a.coeffs) > len(b.coeffs):
            a, b = b, a
        bc = b.coeffs
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            off = a.min_exp + b.min_exp + i - lo
            lim = min(len(bc), length - off)
            for j in range(lim):
                cb = bc[j]
                if cb:
                    out[off + j] += ca * cb
        return LaurentSeries(lo, out, order)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def shift(self, e: int) -> "LaurentSeries":
        """Multiply by q**e; exponents and order all move by e."""
        return LaurentSeries(self.min_exp + e, self.coeffs, self.order + e)

    def truncate(self, order: int) -> "LaurentSeries":
        """Forget coefficients at exponents >= order (order may only shrink)."""
        if order > self.order:
            raise ValueError(f"cannot extend knowledge from O(q^{self.order}) to O(q^{order})")
        if order >= self.order:
            return self
        keep = max(0, order - self.min_exp)
        return LaurentSeries(min(self.min_exp, order), self.coeffs[:keep], order)

    def reciprocal(self) -> "LaurentSeries":
        """The series g with self * g = 1 up to the truncation order.

        The lowest nonzero coefficient must be +1 or -1.  The reciprocal of a
        series with valuation v is known below ``order - 2v``.
        """
        v = self.valuation()
        if v is None:
            raise ValueError("the zero series has no reciprocal")
        unit = self.coeffs[v - self.min_exp]
        if unit not in (1, -1):
            raise ValueError(f"leading coefficient {unit} is not a unit")
        width = self.order - v
        a = [self.coefficient(v + j) for j in range(width)]
        b = [0] * width
        b[0] = unit
        for x in range(1, width):
            acc = 0
            for i in range(1, x + 1):
                if a[i] and b[x - i]:
                    acc += a[i] * b[x - i]
            b[x] = -unit * acc
        return LaurentSeries(-v, b, self.order - 2 * v)


@dataclass(frozen=True)
class PochSpec:
    """One q-Pochhammer factor family ``(sign * q^base_exp ; q^step)_count``.

    ``sign=+1`` gives factors ``(1 - q^(base_exp + step*i))`` and ``sign=-1``
    factors ``(1 + q^(base_exp + step*i))``.  ``count=None`` means the
    infinite product.
    """

    sign: int
    base_exp: int
    step: int = 1
    count: int | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be non-negative")


def _factor_exponents(base: int, step: int, count: int | None, order: int):
    if count is None:
        e = base
        while e < order:
            yield e
            e += step
    else:
        for i in range(count):
            yield base + step * i


@lru_cache(maxsize=None)
def _poch_coeffs(sign: int, base: int, step: int, count: int | None, order: int) -> tuple[int, ...]:
    length = max(order, 0)
    c = [0] * length
    if length:
        c[0] = 1
    for e in _factor_exponents(base, step, count, order):
        if e >= length:
            continue
        for x in range(length - 1, e - 1, -1):
            if c[x - e]:
                c[x] -= sign * c[x - e]
    return tuple(c)


@lru_cache(maxsize=None)
def _inv_poch_coeffs(sign: int, base: int, step: int, count: int | None, order: int) -> tuple[int, ...]:
    # Dividing by (1 - s*q^e) is the exact recurrence c[x] += s * c[x - e].
    length = max(order, 0)
    c = [0] * length
    if length:
        c[0] = 1
    for e in _factor_exponents(base, step, count, order):
        if e >= length:
            continue
        for x in range(e, length):
            if c[x - e]:
                c[x] += sign * c[x - e]
    return tuple(c)


def pochhammer(spec: PochSpec, order: int) -> LaurentSeries:
    """The truncated product described by ``spec``; count 0 gives 1.

    The infinite product requires ``base_exp >= 1`` so that successive
    factors touch ever-higher exponents.
    """
    if spec.count is None and spec.base_exp < 1:
        raise ValueError("infinite products need base_exp >= 1 to converge coefficientwise")
    if order <= 0:
        return LaurentSeries.zero(order)
    return LaurentSeries(0, _poch_coeffs(spec.sign, spec.base_exp, spec.step, spec.count, order), order)


def poch(base_exp: int, count: int | None, order: int, step: int = 1, sign: int = 1) -> LaurentSeries:
    """Shorthand for :func:`pochhammer` on an inline :class:`PochSpec`."""
    return pochhammer(PochSpec(sign, base_exp, step, count), order)


def inv_poch(base_exp: int, count: int | None, order: int, step: int = 1, sign: int = 1) -> LaurentSeries:
    """Reciprocal Pochhammer ``1 / (sign*q^base_exp; q^step)_count``.

    By the usual convention a negative ``count`` yields the zero series (the
    reciprocal of a pole), which is what makes sums over shifting row counts
    terminate cleanly.
    """
    if count is not None and count < 0:
        return LaurentSeries.zero(order)
    if count is None and base_exp < 1:
        raise ValueError("infinite products need base_exp >= 1")
    if order <= 0:
        return LaurentSeries.zero(order)
    return LaurentSeries(0, _inv_poch_coeffs(sign, base_exp, step, count, order), order)


@lru_cache(maxsize=None)
def _gauss_coeffs(a: int, b: int, step: int, order: int) -> tuple[int, ...]:
    length = max(order, 0)
    c = [0] * length
    if length:
        c[0] = 1
    for i in range(1, b + 1):
        e = step * (a - b + i)
        if e < length:
            for x in range(length - 1, e - 1, -1):
                if c[x - e]:
                    c[x] -= c[x - e]
        e = step * i
        for x in range(e, length):
            if c[x - e]:
                c[x] += c[x - e]
    return tuple(c)


def gauss_binomial(a: int, b: int, step: int = 1, order: int = 64) -> LaurentSeries:
    """Gaussian binomial coefficient as a truncated series in q**step.

    For 0 <= b <= a this is the generating polynomial for partitions into at
    most b parts each at most a - b (exact once ``order`` exceeds the degree
    ``step*b*(a-b)``).  For b < 0 or b > a it is the zero series, and b == 0
    gives 1 whatever ``a`` is.
    """
    if step not in (1, 2):
        raise ValueError("step must be 1 or 2")
    if order <= 0:
        return LaurentSeries.zero(order)
    if b == 0:
        return LaurentSeries.one(order)
    if b < 0 or b > a:
        return LaurentSeries.zero(order)
    return LaurentSeries(0, _gauss_coeffs(a, b, step, order), order)
