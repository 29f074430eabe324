"""Moonshine Hauptmoduln H = 1/q + c + O(q) and mirror maps.

Labels 10A, 12A, 14A, 15A have closed eta-quotient expressions:

    H_10A = 8 + f + 16/f,  f = η(q)⁴η(q⁵)⁴ / (η(q²)⁴η(q¹⁰)⁴)
    H_12A = (η(q²)²η(q⁶)² / (η(q)η(q³)η(q⁴)η(q¹²)))⁶
    H_14A = 4 + g + 8/g,   g = η(q)³η(q⁷)³ / (η(q²)³η(q¹⁴)³)
    H_15A = 3 + h + 9/h,   h = η(q)²η(q⁵)² / (η(q³)²η(q¹⁵)²)

1A is Klein's j.  6A has no closed quotient here; it is produced by
solving the defining functional equation

    I(1/H) = E(q) · H^e        (E the eta-product body, e = σ₁/24)

order by order for the tail of H, where I is the regular shift of the
normalized period F by s.  Matching the q¹ coefficients of both sides
forces s = E₁ + e·c, so a wrong (s, c) pair is rejected at order 1; at
every later order the new tail coefficient enters linearly with constant
pivot e.  The same solver run against the other labels cross-checks the
eta-quotient route.

The constant term c is a free normalization: renormalizing changes
exactly one coefficient.  Mirror maps are compositional inverses of
inverse Hauptmoduln, q(t) = reverse(1/H).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import d3
from .qexp import ETA_PRODUCTS, QExpansion, eta_product, klein_j
from .series import (
    Rational,
    SeriesError,
    TruncatedSeries,
    _frac,
    regular_shift,
)


class UnknownLabel(KeyError):
    """Hauptmodul label outside {1A, 6A, 10A, 12A, 14A, 15A}."""


class WrongOffset(SeriesError):
    """Operation expecting a 1/q + c + O(q) expansion (offset -1)."""


class InconsistentIdentity(SeriesError):
    """The functional equation admits no solution at some q-order."""

    def __init__(self, order: int, lhs: Fraction, rhs: Fraction):
        super().__init__(
            f"functional equation inconsistent at q-order {order}: {lhs} != {rhs}"
        )
        self.order = order
        self.lhs = lhs
        self.rhs = rhs


LABELS = ("1A", "6A", "10A", "12A", "14A", "15A")

#: Printed constant term of each Hauptmodul.
DEFAULT_CONSTANTS = {"1A": 744, "6A": 10, "10A": 4, "12A": 6, "14A": 1, "15A": 1}

#: (operator key, shift s, constant c) feeding the functional-equation route.
SOLVE_CONFIGS = {
    "6A": ("L6,2", 4, 10),
    "10A": ("L10", 2, 4),
    "12A": ("L12", 4, 6),
    "14A": ("L14", 0, 1),
    "15A": ("L15", 0, 1),
}

#: Eta-product id whose body appears in each label's functional equation.
ETA_IDS = {"1A": "1+", "6A": "6+", "10A": "10+", "12A": "12+", "14A": "14+", "15A": "15+"}


def renormalize_constant(h: QExpansion, c: Rational) -> QExpansion:
    """Replace the q⁰ coefficient by c, leaving every other one untouched."""
    if h.offset != -1:
        raise WrongOffset(f"expected offset -1, got {h.offset}")
    cs = list(h.body.coeffs)
    cs[1] = _frac(c)
    return QExpansion(-1, TruncatedSeries(cs, h.order))


def inverse_hauptmodul(h: QExpansion) -> TruncatedSeries:
    """1/H as a valuation-1 power series in q, ready to be composed into."""
    if h.offset != -1:
        raise WrongOffset(f"expected offset -1, got {h.offset}")
    w = h.body.reciprocal()
    return TruncatedSeries([Fraction(0), *w.coeffs], h.order + 1)


def mirror_map(h: QExpansion, order: Optional[int] = None) -> TruncatedSeries:
    """q(t) = compositional inverse of t = 1/H(q)."""
    q_of_t = inverse_hauptmodul(h).reverse()
    return q_of_t if order is None else q_of_t.truncate(order)


def solve_hauptmodul_from_identity(
    f_normalized: TruncatedSeries,
    s: Rational,
    c: Rational,
    eta: QExpansion,
    exponent: Rational,
    order: int,
) -> QExpansion:
    """Solve I(1/H) = eta · H^exponent for H = 1/q + c + Σ h_k q^k.

    I is the regular shift of f_normalized by s (so I has linear
    coefficient s).  Writing H = q⁻¹·B(q) the equation becomes an equality
    of unit power series I(q/B) = E·B^e whose q^m coefficient determines
    h_{m-1} linearly with pivot e.  The q¹ coefficient has no unknown and
    must already balance: s = E₁ + e·c.
    """
    e = _frac(exponent)
    if e == 0:
        raise InconsistentIdentity(1, Fraction(0), Fraction(0))
    if eta.offset != e:
        raise SeriesError(
            f"eta-product valuation {eta.offset} does not match exponent {e}"
        )
    if f_normalized.order < order or eta.order < order:
        raise SeriesError("inputs must be computed at least to the requested order")
    if f_normalized.coeffs[1]:
        raise SeriesError("expected a normalized series with zero linear term")
    s = _frac(s)
    c = _frac(c)

    i_series = regular_shift(f_normalized, s)
    E = eta.body.coeffs

    lhs1 = i_series.coeffs[1]
    rhs1 = E[1] + e * c
    if lhs1 != rhs1:
        raise InconsistentIdentity(1, lhs1, rhs1)

    B = [Fraction(1), c]           # body of H
    V = [Fraction(1)]              # 1/B
    P = [Fraction(1), e * c]       # B^e
    u = [Fraction(0), Fraction(1)]  # q/B
    powers = {1: u}                # powers[r][n] = [q^n] u^r

    for m in range(2, order + 1):
        V.append(-sum(B[k] * V[m - 1 - k] for k in range(1, m)))
        u.append(V[m - 1])
        for r in range(2, m + 1):
            prev = powers[r - 1]
            row = powers.setdefault(r, [Fraction(0)] * r)
            row.append(sum(u[k] * prev[m - k] for k in range(1, m - r + 2)))
        lhs_m = sum(i_series.coeffs[r] * powers[r][m] for r in range(1, m + 1))
        # B^e extended with the provisional B_m = 0
        p_m = sum(((e + 1) * j - m) * B[j] * P[m - j] for j in range(1, m)) / m
        rhs_m = sum(E[k] * P[m - k] for k in range(1, m + 1)) + p_m
        h = (lhs_m - rhs_m) / e
        B.append(h)
        P.append(p_m + e * h)

    return QExpansion(-1, TruncatedSeries(B, order))


# -- construction routes -------------------------------------------------------


def _sum_with_constant(f: QExpansion, const: int, scale: int, order: int) -> QExpansion:
    """const + f + scale/f for the three two-term eta-quotient Hauptmoduln."""
    return f + QExpansion.constant(const, order) + scale * f.reciprocal()


@lru_cache(maxsize=None)
def _eta_route(label: str, order: int) -> QExpansion:
    if label == "1A":
        return klein_j(order)
    if label == "10A":
        f = eta_product({1: 4, 5: 4, 2: -4, 10: -4}, order)
        return _sum_with_constant(f, 8, 16, order)
    if label == "12A":
        return eta_product({2: 12, 6: 12, 1: -6, 3: -6, 4: -6, 12: -6}, order)
    if label == "14A":
        g = eta_product({1: 3, 7: 3, 2: -3, 14: -3}, order)
        return _sum_with_constant(g, 4, 8, order)
    if label == "15A":
        h = eta_product({1: 2, 5: 2, 3: -2, 15: -2}, order)
        return _sum_with_constant(h, 3, 9, order)
    raise UnknownLabel(label)


@lru_cache(maxsize=None)
def _identity_route(label: str, order: int) -> QExpansion:
    op_key, s, c = SOLVE_CONFIGS[label]
    f = d3.holomorphic_solution(d3.OPERATORS[op_key], order)
    eta = eta_product(ETA_PRODUCTS[ETA_IDS[label]], order)
    return solve_hauptmodul_from_identity(f, s, c, eta, eta.offset, order)


def hauptmodul(label: str, c: Optional[Rational] = None, order: int = 60) -> QExpansion:
    """The Hauptmodul for the label, constant term renormalized to c.

    6A has no printed eta-quotient and is produced by the identity solver;
    it is accepted because it reproduces the printed McKay-Thompson tail
    79, 352, 1431, 4160, 13015, 31968 (asserted in the test-suite).
    """
    if label not in LABELS:
        raise UnknownLabel(label)
    h = _identity_route(label, order) if label == "6A" else _eta_route(label, order)
    if c is None:
        c = DEFAULT_CONSTANTS[label]
    return renormalize_constant(h, c)


def hauptmodul_json(label: str, c: Optional[Rational] = None, order: int = 60) -> dict:
    """q-expansion JSON with the label attached."""
    return {"label": label, **hauptmodul(label, c, order).to_json()}
