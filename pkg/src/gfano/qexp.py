"""q-expansions with fractional leading exponents: eta-products and friends.

A QExpansion is q^offset · body(q) where the offset is a rational with
denominator dividing 24 and the body is a TruncatedSeries with nonzero
constant term.  This is exactly what is needed for

    eta(q)   = q^{1/24} Π_{n≥1} (1 - q^n)
    Delta(q) = eta(q)^24
    E4(q)    = 1 + 240 Σ σ₃(n) q^n
    j(q)     = E4^3 / Delta = 1/q + 744 + 196884 q + ...

and for the eta-products/quotients attached to levels 6, 10, 12, 14, 15:

    eta_6p  = η(q) η(q²) η(q³) η(q⁶)
    eta_10p = η(q) η(q²) η(q⁵) η(q¹⁰)
    eta_12p = η(q²)⁴ η(q⁶)⁴ / (η(q) η(q³) η(q⁴) η(q¹²))
    eta_14p = η(q) η(q²) η(q⁷) η(q¹⁴)
    eta_15p = η(q) η(q³) η(q⁵) η(q¹⁵)

The eta body is generated by the pentagonal-number theorem; the naive
truncated product is kept in the test-suite as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Union

from .series import (
    NonUnitConstant,
    Rational,
    SeriesError,
    TruncatedSeries,
    _frac,
)


class OffsetError(SeriesError):
    """Offsets that cannot be reconciled or leave (1/24)·Z."""


def _check_offset(off: Fraction) -> Fraction:
    if 24 % off.denominator:
        raise OffsetError(f"offset {off} is not in (1/24)·Z")
    return off


class QExpansion:
    """q^offset times a unit power series in q, all arithmetic exact."""

    __slots__ = ("offset", "body")

    def __init__(self, offset: Rational, body: TruncatedSeries):
        self.offset = _check_offset(_frac(offset))
        self.body = body

    @classmethod
    def constant(cls, value: Rational, order: int) -> "QExpansion":
        return cls(0, TruncatedSeries([value], order))

    @property
    def order(self) -> int:
        return self.body.order

    def coefficient(self, exponent: Rational) -> Fraction:
        """Coefficient of q^exponent (zero off the support lattice)."""
        idx = _frac(exponent) - self.offset
        if idx.denominator != 1 or idx < 0:
            return Fraction(0)
        if idx > self.order:
            raise IndexError(f"q^{exponent} beyond truncation")
        return self.body.coeffs[int(idx)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        return self.offset == other.offset and self.body == other.body

    def __hash__(self):
        return hash((self.offset, self.body))

    def __repr__(self) -> str:
        return f"QExpansion(offset={self.offset}, body={self.body!r})"

    def __mul__(self, other) -> "QExpansion":
        if isinstance(other, (int, Fraction)):
            return QExpansion(self.offset, self.body * other)
        return QExpansion(self.offset + other.offset, self.body * other.body)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QExpansion":
        if isinstance(other, (int, Fraction)):
            return QExpansion(self.offset, self.body / other)
        return QExpansion(self.offset - other.offset, self.body / other.body)

    def reciprocal(self) -> "QExpansion":
        return QExpansion(-self.offset, self.body.reciprocal())

    def __add__(self, other) -> "QExpansion":
        """Sum; offsets must differ by an integer.

        The summand with the larger offset has its body shifted into the
        frame of the smaller offset.  If leading terms cancel the offset is
        advanced past them.
        """
        if isinstance(other, (int, Fraction)):
            other = QExpansion.constant(other, self.order)
        lo, hi = (self, other) if self.offset <= other.offset else (other, self)
        d = hi.offset - lo.offset
        if d.denominator != 1:
            raise OffsetError(f"offsets {lo.offset} and {hi.offset} differ by {d}")
        d = int(d)
        k = min(lo.order, hi.order + d)
        cs = list(lo.body.coeffs[: k + 1])
        cs += [Fraction(0)] * (k + 1 - len(cs))
        for n, c in enumerate(hi.body.coeffs):
            if n + d > k:
                break
            cs[n + d] += c
        body = TruncatedSeries(cs, k)
        v = body.valuation()
        if 0 < v <= k:
            body = TruncatedSeries(body.coeffs[v:], k - v)
            return QExpansion(lo.offset + v, body)
        return QExpansion(lo.offset, body)

    __radd__ = __add__

    def __neg__(self) -> "QExpansion":
        return QExpansion(self.offset, -self.body)

    def __sub__(self, other) -> "QExpansion":
        if isinstance(other, (int, Fraction)):
            other = QExpansion.constant(other, self.order)
        return self + (-other)

    def __pow__(self, n: int) -> "QExpansion":
        return QExpansion(self.offset * n, self.body ** n)

    def pow_rational(self, e: Rational) -> "QExpansion":
        """Power with rational exponent; the body must be a unit with constant 1."""
        e = _frac(e)
        if self.body.coeffs[0] != 1:
            raise NonUnitConstant("fractional power needs body constant exactly 1")
        return QExpansion(self.offset * e, self.body.pow_rational(e))

    def truncate(self, order: int) -> "QExpansion":
        return QExpansion(self.offset, self.body.truncate(order))

    def to_json(self) -> dict:
        off24 = self.offset * 24
        return {
            "offset": f"{off24.numerator}/24",
            "order": self.order,
            "coeffs": [str(c) for c in self.body.coeffs],
        }


# -- Dedekind eta ------------------------------------------------------------


@lru_cache(maxsize=None)
def _eta_body_coeffs(order: int) -> tuple:
    """Coefficients of Π (1 - q^n) by the pentagonal-number theorem.

    The exponents k(3k∓1)/2 are the generalized pentagonal numbers and the
    sign is (-1)^k, so the body is 1 - q - q² + q⁵ + q⁷ - q¹² - ...
    """
    cs = [0] * (order + 1)
    cs[0] = 1
    k = 1
    while True:
        p1 = k * (3 * k - 1) // 2
        p2 = k * (3 * k + 1) // 2
        if p1 > order:
            break
        sign = -1 if k % 2 else 1
        cs[p1] = sign
        if p2 <= order:
            cs[p2] = sign
        k += 1
    return tuple(cs)


def eta(order: int) -> QExpansion:
    """Dedekind eta: offset 1/24, pentagonal-number body."""
    if order < 1:
        raise SeriesError("eta needs order >= 1")
    return QExpansion(Fraction(1, 24), TruncatedSeries(_eta_body_coeffs(order), order))


def dilate(a: TruncatedSeries, m: int, order: int) -> TruncatedSeries:
    """Substitute q -> q^m by index dilation with zero-fill.

    The result is trusted through min(order, m·(K+1)-1): coefficients at
    indices that are not multiples of m are exactly zero, and the first
    unknown one sits at m·(K+1).
    """
    if m == 1:
        return a.truncate(order)
    k = min(order, m * (a.order + 1) - 1)
    cs = [Fraction(0)] * (k + 1)
    for n, c in enumerate(a.coeffs):
        if n * m > k:
            break
        cs[n * m] = c
    return TruncatedSeries(cs, k)


# An eta exponent map sends a cycle length i to the exponent of η(q^i);
# negative exponents give eta-quotients.
EtaExponentMap = Mapping[int, int]


def eta_product(exponents: EtaExponentMap, order: int) -> QExpansion:
    """Π_i η(q^i)^{a_i} as a QExpansion with offset Σ i·a_i / 24."""
    if order < 1:
        raise SeriesError("eta_product needs order >= 1")
    body = TruncatedSeries.one(order)
    for i, a in sorted(exponents.items()):
        if a == 0:
            continue
        factor = dilate(TruncatedSeries(_eta_body_coeffs(order // i), order // i), i, order)
        body = body * factor ** a
    return QExpansion(Fraction(sigma1(exponents), 24), body)


def sigma1(exponents: EtaExponentMap) -> int:
    """24 times the valuation of the eta-product: Σ i·a_i.

    Taken with the positive sign, which is the one matching every exponent
    that actually multiplies a Hauptmodul in the identities (1/2, 3/4, 1/2,
    1, 1 for levels 6, 10, 12, 14, 15).
    """
    return sum(i * a for i, a in exponents.items())


ETA_PRODUCTS: Dict[str, Dict[int, int]] = {
    "1+": {1: 4},
    "6+": {1: 1, 2: 1, 3: 1, 6: 1},
    "10+": {1: 1, 2: 1, 5: 1, 10: 1},
    "12+": {2: 4, 6: 4, 1: -1, 3: -1, 4: -1, 12: -1},
    "14+": {1: 1, 2: 1, 7: 1, 14: 1},
    "15+": {1: 1, 3: 1, 5: 1, 15: 1},
}


# -- Eisenstein E4, discriminant, Klein j ------------------------------------


def _sigma3_table(order: int) -> list:
    """σ₃(n) = Σ_{d|n} d³ for n = 0..order by a divisor sieve."""
    s = [0] * (order + 1)
    for d in range(1, order + 1):
        cube = d * d * d
        for n in range(d, order + 1, d):
            s[n] += cube
    return s


def eisenstein_e4(order: int) -> QExpansion:
    """E4 = 1 + 240 Σ_{n≥1} σ₃(n) q^n, offset 0."""
    if order < 1:
        raise SeriesError("eisenstein_e4 needs order >= 1")
    s3 = _sigma3_table(order)
    cs = [Fraction(1)] + [Fraction(240 * s3[n]) for n in range(1, order + 1)]
    return QExpansion(0, TruncatedSeries(cs, order))


def discriminant(order: int) -> QExpansion:
    """Delta = eta^24: offset 1, body Π (1-q^n)^24 = 1 - 24q + 252q² - ..."""
    return eta(order) ** 24


def klein_j(order: int) -> QExpansion:
    """j = E4³ / Delta: offset -1, body 1 + 744 q + 196884 q² + ..."""
    e4 = eisenstein_e4(order)
    return (e4 * e4 * e4) / discriminant(order)
