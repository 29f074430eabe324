"""Truncated power series over exact rationals.

A TruncatedSeries holds coefficients c_0 .. c_K of a formal series
Σ c_n t^n together with its truncation order K (the last index that is
trusted).  All arithmetic is exact: coefficients are `fractions.Fraction`,
never floats.  Binary operations truncate to the minimum order of their
operands; composition truncates to the order of the inner series.

On top of ring arithmetic the module provides the shift/regularization
operators used throughout:

    laplace(A)          = Σ n! a_n t^n
    inverse_laplace(A)  = Σ a_n / n! t^n
    shifted_laplace(A, s) = laplace(exp(s t) · A)
    regular_shift(A, s) = shifted_laplace(inverse_laplace(A), s)
    normalize(A)        = regular_shift(A, -a_1)   (kills the linear term)
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class ZeroConstantTerm(SeriesError):
    """Division by a series with zero constant term."""


class NonzeroInnerConstant(SeriesError):
    """Composition with an inner series of nonzero constant term."""


class NotInvertible(SeriesError):
    """Compositional inversion of a series whose valuation is not 1."""


class NonUnitConstant(SeriesError):
    """Rational power of a series whose constant term is not 1."""


def _frac(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class TruncatedSeries:
    """Dense truncated power series Σ_{n=0}^{K} c_n t^n with exact coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            if not cs:
                raise SeriesError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise SeriesError("truncation order must be non-negative")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif len(cs) > order + 1:
            cs = cs[: order + 1]
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order: int = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series t itself."""
        return cls([0, 1], order)

    @classmethod
    def exponential(cls, s: Rational, order: int) -> "TruncatedSeries":
        """exp(s t) = Σ s^n / n! t^n to the requested order."""
        s = _frac(s)
        cs = [Fraction(1)]
        for n in range(1, order + 1):
            cs.append(cs[-1] * s / n)
        return cls(cs, order)

    # -- basics ------------------------------------------------------------

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient; order+1 if identically zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return self.coeffs[: k + 1] == other.coeffs[: k + 1]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"

    def to_json(self) -> dict:
        """JSON form {"order": K, "coeffs": ["p/q", ...]} with reduced fractions."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls([Fraction(c) for c in data["coeffs"]], data["order"])

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        k = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(k + 1)], k
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return TruncatedSeries([c * s for c in self.coeffs], self.order)
        other = self._coerce(other)
        k = min(self.order, other.order)
        out = [Fraction(0)] * (k + 1)
        # iterate over the sparser operand: eta-type series are mostly zeros
        a, b = self.coeffs, other.coeffs
        if _nonzero_count(b, k) < _nonzero_count(a, k):
            a, b = b, a
        for i in range(min(len(a) - 1, k) + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b) - 1, k - i) + 1):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, k)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            s = _frac(other)
            return TruncatedSeries([c / s for c in self.coeffs], self.order)
        return self._coerce(other).reciprocal() * self

    def __rtruediv__(self, other) -> "TruncatedSeries":
        return self._coerce(other) / self

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        raise TypeError(f"cannot combine TruncatedSeries with {type(other)!r}")

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires nonzero constant term."""
        if not self.coeffs[0]:
            raise ZeroConstantTerm("cannot divide by a series with zero constant term")
        k = self.order
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * k
        nz = [i for i in range(1, k + 1) if self.coeffs[i]]
        for n in range(1, k + 1):
            acc = Fraction(0)
            for i in nz:
                if i > n:
                    break
                acc += self.coeffs[i] * out[n - i]
            out[n] = -acc * inv0
        return TruncatedSeries(out, k)

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int):
            raise TypeError("use pow_rational for non-integer exponents")
        if n < 0:
            return self.reciprocal() ** (-n)
        result = TruncatedSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- composition and inversion ------------------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """outer ∘ inner, truncated to the inner order.

        The inner series must have zero constant term.  The outer series is
        treated as a polynomial in its known coefficients (Horner evaluation).
        """
        if inner.coeffs[0]:
            raise NonzeroInnerConstant("inner series must have zero constant term")
        k = inner.order
        result = TruncatedSeries([self.coeffs[self.order]], k)
        for n in range(self.order - 1, -1, -1):
            result = result * inner + self.coeffs[n]
        return result.truncate(k)

    def reverse(self) -> "TruncatedSeries":
        """Compositional inverse via Lagrange inversion.

        Requires valuation exactly 1.  With f = Σ_{n≥1} f_n t^n the inverse
        r satisfies f(r(t)) = t and its coefficients are
        r_n = [t^{n-1}] (t/f)^n / n.
        """
        if self.coeffs[0] or self.order < 1 or not self.coeffs[1]:
            raise NotInvertible("reversion needs valuation exactly 1")
        k = self.order
        # w = t/f as a unit series of order k-1
        w = TruncatedSeries(self.coeffs[1:], k - 1).reciprocal()
        out = [Fraction(0), w.coeffs[0]]
        power = w
        for n in range(2, k + 1):
            power = power * w
            out.append(power.coeffs[n - 1] / n)
        return TruncatedSeries(out, k)

    def pow_rational(self, e: Rational) -> "TruncatedSeries":
        """Binomial series (1 + x)^e with x = self - 1; needs constant term 1."""
        if self.coeffs[0] != 1:
            raise NonUnitConstant("rational powers need constant term exactly 1")
        e = _frac(e)
        k = self.order
        x = self - TruncatedSeries.one(k)
        v = x.valuation()
        result = TruncatedSeries.one(k)
        if v > k:
            return result
        xp = TruncatedSeries.one(k)
        binom = Fraction(1)
        for n in range(1, k // v + 1):
            binom = binom * (e - n + 1) / n
            if not binom:  # non-negative integer exponent exhausted
                break
            xp = xp * x
            result = result + xp * binom
        return result


def _nonzero_count(cs: Sequence[Fraction], upto: int) -> int:
    return sum(1 for c in cs[: upto + 1] if c)


# -- shifts and regularizations ---------------------------------------------


def laplace(a: TruncatedSeries) -> TruncatedSeries:
    """Σ a_n t^n  ->  Σ n! a_n t^n."""
    return TruncatedSeries(
        [c * factorial(n) for n, c in enumerate(a.coeffs)], a.order
    )


def inverse_laplace(a: TruncatedSeries) -> TruncatedSeries:
    """Σ a_n t^n  ->  Σ a_n / n! t^n."""
    return TruncatedSeries(
        [c / factorial(n) for n, c in enumerate(a.coeffs)], a.order
    )


def shifted_laplace(a: TruncatedSeries, s: Rational) -> TruncatedSeries:
    """laplace(exp(s t) · a)."""
    return laplace(TruncatedSeries.exponential(s, a.order) * a)


def regular_shift(a: TruncatedSeries, s: Rational) -> TruncatedSeries:
    """shifted_laplace ∘ inverse_laplace; shifts the linear coefficient by s."""
    return shifted_laplace(inverse_laplace(a), s)


def normalize(a: TruncatedSeries) -> TruncatedSeries:
    """Regular shift by minus the linear coefficient.

    On unit series (constant term 1) this kills the linear term, which is
    the normalization every period series here goes through.
    """
    if a.order < 1:
        return a
    return regular_shift(a, -a.coeffs[1])
