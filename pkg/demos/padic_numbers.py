#!/usr/bin/env python3
"""p-adic algebraic numbers via Hensel witnesses.

x^3 - 3x - 1 has three simple roots mod 17 (3, 4 and 10), each lifting to a
root in Z_17.  The walkthrough lifts the witness at 3, measures p-adic
distances, derives the image of the algebraic relation beta = alpha^2 - 2,
and produces convergent-grade p-adic approximations by lattice reduction.
"""

from fractions import Fraction

from gapkit import liouville_c7, hensel_root, padic_abs_linear, parse_poly
from gapkit.padic import derive_padic, good_padic_approximations

f = parse_poly("x^3 - 3*x - 1")
xi = hensel_root(f, 17, 3)
print("witness:", xi)
for k in (1, 2, 3, 4):
    print(f"  root mod 17^{k} =", xi.lift(k))

print("\n|alpha - 3|_17  =", padic_abs_linear(xi, 3, 1, 4))
print("|alpha - 207|_17 =", padic_abs_linear(xi, 207, 1, 6))
print("|alpha|_17      =", padic_abs_linear(xi, 0, 1, 2))

print("\nLiouville constant C7 =", liouville_c7(xi),
      " (|y a - x|_17 >= C7 / H^3 for all x, y)")

g = parse_poly("x^3 - 3*x + 1")
beta = derive_padic(xi, (Fraction(-2), 0, Fraction(1)), g)
print("\nbeta = alpha^2 - 2 is the 17-adic root", beta.residue,
      "of", g, "; lift mod 17^2 =", beta.lift(2))

print("\nbest small-height 17-adic approximations (lattice-reduced):")
for x, y in good_padic_approximations(xi, 8):
    q = padic_abs_linear(xi, x, y, 40)
    print(f"  x/y = {x}/{y}   H = {max(abs(x), abs(y)):4d}   |y a - x|_17 = 17^(-{q.valuation})")
