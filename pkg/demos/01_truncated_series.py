#!/usr/bin/env python3
"""Tour of the exact truncated-series substrate.

Everything downstream (eta-products, Hauptmoduln, period verification)
reduces to a handful of operations on dense lists of rationals: Cauchy
products, composition, reversion, fractional powers, and the
Laplace-type regularization operators.
"""

from fractions import Fraction as F

from gfano import TruncatedSeries, laplace, inverse_laplace, normalize, regular_shift

S = TruncatedSeries

print("== ring arithmetic ==")
geo = S.one(8) / S([1, -1], 8)
print("1/(1-t)        :", [int(c) for c in geo.coeffs])
print("(1+t)(1-t)     :", [int(c) for c in (S([1, 1], 4) * S([1, -1], 4)).coeffs])

print()
print("== composition and reversion ==")
f = S([0, 1, -1], 8)  # t - t^2
r = f.reverse()
print("reverse(t - t^2):", [int(c) for c in r.coeffs], " <- Catalan numbers")
print("f(reverse(f))   :", [int(c) for c in f.compose(r).coeffs], " <- identity")

print()
print("== fractional powers ==")
sqrt = S([1, 1], 6).pow_rational(F(1, 2))
print("(1+q)^(1/2)     :", [str(c) for c in sqrt.coeffs])
print("squared back    :", [int(c) for c in sqrt.pow_rational(2).coeffs])

print()
print("== shifts and regularization ==")
# the degree-30 quantum period: regularized shifted form 1 + 3t + 15t^2 + ...
i15 = S([1, 3, 15, 105, 855, 7533], 5)
print("I (shifted form):", [int(c) for c in i15.coeffs])
g = S.exponential(-3, 5) * inverse_laplace(i15)
print("G = e^{-3t} L^-1:", [str(c) for c in g.coeffs])
print("normalize(I)    :", [int(c) for c in normalize(i15).coeffs],
      " <- the D3 solution F")
print("shift group     :", regular_shift(regular_shift(i15, 7), -7) == i15)
