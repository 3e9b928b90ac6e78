#!/usr/bin/env python3
"""Minimal pairs for (alpha, beta) = (2cos(2pi/15), 2cos(4pi/15)).

Both numbers are roots of x^4 - x^3 - 4x^2 + 4x + 1, and beta = alpha^2 - 2
(the double-angle identity).  The walkthrough finds an exact minimal pair,
verifies the two classical pairs, and prints the associated constants.
"""

from fractions import Fraction

from gapkit import (AlgNum, c12, c13, find_pair, parse_poly, power_rep,
                    verify_pair, wronskian)

f = parse_poly("x^4 - x^3 - 4*x^2 + 4*x + 1")
alpha = AlgNum.near(f, Fraction("1.827"))
beta = AlgNum.near(f, Fraction("1.338"))

print("alpha =", alpha)
print("beta  =", beta)

rep = power_rep(alpha, beta)
print("\npower-basis representation: beta =",
      " + ".join(f"({c})*alpha^{i}" for i, c in enumerate(rep.coeffs) if c))

pair = find_pair(alpha, beta, mode="exact")
print("\nminimal pair (exact height mode):")
print("  P =", pair.p)
print("  Q =", pair.q)
print("  r =", pair.r, " max height =", pair.height_bound)
print("  Wronskian:", wronskian(pair.p, pair.q))

print("\nverifying the two classical pairs:")
for p_txt, q_txt in (("-x^2 + 2", "1"), ("-x^2 + 2*x - 1", "x^2 - x - 1")):
    p, q = parse_poly(p_txt), parse_poly(q_txt)
    rpt = verify_pair(alpha, beta, p, q, rep=rep, reference=pair)
    print(f"  ({p_txt:18s}, {q_txt:14s}) ->", "ok" if rpt["ok"] else rpt)

print("\nheight and Wronskian constants:")
print("  C12 =", c12(alpha, beta, rep, pair))
print("  C13 ~", float(c13(alpha, pair)))
