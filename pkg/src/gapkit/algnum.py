"""Algebraic numbers with certified Archimedean embeddings.

An :class:`AlgNum` is a pair (minimal polynomial, root index): the minimal
polynomial is irreducible over Q, primitive, with positive leading
coefficient, and the index selects one certified root enclosure (roots
ordered by real part, then imaginary part).

The module also houses the power-basis machinery for beta in Q(alpha):
exact reduction tables, the coefficient-size constants, the denominator
scalar that replaces the ring index, and the explicit Liouville constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

import mpmath
import sympy

from .intpoly import IntPoly, RatPoly, discriminant_poly
from .isolation import (IsolationError, RootEnclosure, eval_on_disk, house,
                        isolate_roots, mahler_measure, root_enclosure)
from .rounding import RatInterval, tidy_down, tidy_up


class NotInFieldError(ValueError):
    """beta admits no power-basis representation over the given alpha."""


_X = sympy.Symbol("x")


def is_irreducible(p: IntPoly) -> bool:
    if p.degree < 1:
        return False
    return sympy.Poly(list(reversed(p.coeffs)), _X).is_irreducible


def normalize_minimal_poly(p: IntPoly) -> IntPoly:
    """Primitive form with positive leading coefficient."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.primitive()
    return p if p.lead > 0 else -p


@dataclass(frozen=True)
class AlgNum:
    """Algebraic number: irreducible minimal polynomial + root selector."""

    minpoly: IntPoly
    index: int

    def __post_init__(self):
        f = self.minpoly
        if f.lead < 0 or f.content() > 1:
            raise ValueError("minimal polynomial must be primitive with positive lead")
        if not (0 <= self.index <= f.degree - 1):
            raise ValueError("root index out of range")

    @staticmethod
    def make(p: IntPoly, index: int = 0, check_irreducible: bool = True) -> "AlgNum":
        p = normalize_minimal_poly(p)
        if check_irreducible and not is_irreducible(p):
            raise ValueError(f"polynomial is not irreducible over Q: {p}")
        return AlgNum(p, index)

    @staticmethod
    def near(p: IntPoly, approx, check_irreducible: bool = True) -> "AlgNum":
        """Select the root whose enclosure is nearest to a rational guess."""
        p = normalize_minimal_poly(p)
        if check_irreducible and not is_irreducible(p):
            raise ValueError(f"polynomial is not irreducible over Q: {p}")
        approx = Fraction(approx)
        encl = isolate_roots(p, Fraction(1, 10 ** 9))
        best = min(encl, key=lambda e: e.distance_interval(approx).hi)
        return AlgNum(p, best.index)

    # -- basic data -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def lead(self) -> int:
        """c_alpha, the (positive) leading coefficient of the minimal polynomial."""
        return self.minpoly.lead

    def height(self) -> int:
        return self.minpoly.height()

    def enclosure(self, width: Fraction = Fraction(1, 10 ** 12)) -> RootEnclosure:
        return root_enclosure(self.minpoly, self.index, width)

    @property
    def is_real(self) -> bool:
        return self.enclosure().is_real

    def conjugates(self, width: Fraction = Fraction(1, 10 ** 12)) -> list[RootEnclosure]:
        return isolate_roots(self.minpoly, width)

    def abs_interval(self, width: Fraction = Fraction(1, 10 ** 12)) -> RatInterval:
        return self.enclosure(width).abs_interval()

    def house_interval(self, precision: Fraction = Fraction(1, 10 ** 20)) -> RatInterval:
        return house(self.minpoly, precision)

    def mahler_interval(self, precision: Fraction = Fraction(1, 10 ** 20)) -> RatInterval:
        return mahler_measure(self.minpoly, precision)

    def __str__(self):
        return f"root #{self.index} of {self.minpoly}"


# -- power tables ------------------------------------------------------------

def power_table(alpha: AlgNum, r: int) -> tuple[Fraction, ...]:
    """Coefficients (a_{r,0}, ..., a_{r,d-1}) of the exact reduction of x**r
    modulo the minimal polynomial, so alpha**r = sum a_{r,i} alpha**i."""
    if r < 0:
        raise ValueError("exponent must be nonnegative")
    return _power_tables(alpha.minpoly, r)[r]


def _power_tables(f: IntPoly, r_max: int) -> list[tuple[Fraction, ...]]:
    d = f.degree
    rows: list[tuple[Fraction, ...]] = []
    # x^d = -(c_{d-1} x^{d-1} + ... + c_0)/c_d
    top = tuple(Fraction(-f.coeff(i), f.lead) for i in range(d))
    cur = [Fraction(0)] * d
    for r in range(r_max + 1):
        if r < d:
            row = [Fraction(0)] * d
            row[r] = Fraction(1)
        else:
            prev = rows[-1]
            row = [Fraction(0)] * d
            for i in range(d - 1):
                row[i + 1] += prev[i]
            if prev[d - 1]:
                for i in range(d):
                    row[i] += prev[d - 1] * top[i]
        rows.append(tuple(row))
    return rows


def c8(alpha: AlgNum) -> Fraction:
    """1 + max_i |a_{d,i}| where alpha**d = sum a_{d,i} alpha**i."""
    row = power_table(alpha, alpha.degree)
    return 1 + max(abs(c) for c in row)


# -- power-basis representations ---------------------------------------------

@dataclass(frozen=True)
class PowerBasisRep:
    """beta = sum b_i alpha**i with exact rational coefficients."""

    alpha: AlgNum
    beta: AlgNum
    coeffs: tuple[Fraction, ...]

    @property
    def denominator(self) -> int:
        out = 1
        for c in self.coeffs:
            out = lcm(out, c.denominator)
        return out

    def max_abs(self) -> Fraction:
        return max(abs(c) for c in self.coeffs)

    def as_poly(self) -> RatPoly:
        return RatPoly(self.coeffs)


def denominator_scalar(rep: PowerBasisRep) -> int:
    """Least positive D with D*b_i integral for all i; divides the classical
    index scalar theta_alpha * c_beta."""
    return rep.denominator


def power_rep(alpha: AlgNum, beta: AlgNum,
              max_prec_bits: int = 2400) -> PowerBasisRep:
    """Exact power-basis representation of beta over alpha.

    The candidate is found by integer-relation search (PSLQ) on the selected
    embeddings and then verified exactly: the beta minimal polynomial must
    vanish on the representation modulo the alpha minimal polynomial, and the
    certified image of the representation must land in beta's enclosure.
    Raises NotInFieldError when no representation exists (certain when the
    degree divisibility test fails; otherwise reported after the search
    budget is exhausted).
    """
    d = alpha.degree
    if d % beta.degree != 0:
        raise NotInFieldError(
            f"degree {beta.degree} does not divide degree {d}")
    if not alpha.is_real or not beta.is_real:
        raise NotInFieldError(
            "numeric relation search requires real selected embeddings")
    if beta == alpha:
        if d == 1:
            root = Fraction(-alpha.minpoly.coeff(0), alpha.lead)
            return PowerBasisRep(alpha, beta, (root,))
        coeffs = [Fraction(0)] * d
        coeffs[1] = Fraction(1)
        return PowerBasisRep(alpha, beta, tuple(coeffs))

    bits = 240
    while bits <= max_prec_bits:
        rel = _pslq_candidate(alpha, beta, bits)
        if rel is not None:
            rep = _verify_rep(alpha, beta, rel)
            if rep is not None:
                return rep
        bits *= 2
    raise NotInFieldError(
        f"no verified representation of {beta} over {alpha} "
        f"within {max_prec_bits} bits")


def _pslq_candidate(alpha: AlgNum, beta: AlgNum, bits: int):
    width = Fraction(1, 2 ** bits)
    a_enc = alpha.enclosure(width)
    b_enc = beta.enclosure(width)
    old = mpmath.mp.prec
    try:
        mpmath.mp.prec = bits + 64
        a = mpmath.mpf(a_enc.interval.mid().numerator) / a_enc.interval.mid().denominator
        b = mpmath.mpf(b_enc.interval.mid().numerator) / b_enc.interval.mid().denominator
        vec = [a ** i for i in range(alpha.degree)] + [b]
        rel = mpmath.pslq(vec, maxcoeff=10 ** (bits // 8), maxsteps=4000)
    finally:
        mpmath.mp.prec = old
    if rel is None or rel[-1] == 0:
        return None
    return rel


def _verify_rep(alpha: AlgNum, beta: AlgNum, rel) -> PowerBasisRep | None:
    d = alpha.degree
    denom = -rel[-1]
    coeffs = tuple(Fraction(rel[i], denom) for i in range(d))
    rep = PowerBasisRep(alpha, beta, coeffs)
    if not _verify_algebraic(alpha.minpoly, beta.minpoly, rep.as_poly()):
        return None
    if not _verify_embedding(alpha, beta, rep):
        return None
    return rep


def _verify_algebraic(f: IntPoly, g: IntPoly, b: RatPoly) -> bool:
    """g(b(x)) == 0 in Q[x]/(f), checked exactly."""
    fq = RatPoly.from_intpoly(f)
    acc = RatPoly(())
    for c in reversed(g.coeffs):
        acc = (acc * b + RatPoly((c,))).mod(fq)
    return acc.is_zero


def _verify_embedding(alpha: AlgNum, beta: AlgNum, rep: PowerBasisRep) -> bool:
    """Certify that the representation evaluates to beta's selected root,
    not another conjugate: the certified image must meet beta's enclosure
    and avoid every other root enclosure."""
    width = Fraction(1, 10 ** 12)
    for _ in range(6):
        a_enc = alpha.enclosure(width)
        num, den = rep.as_poly().clear_denominators()
        img = _image_interval(num, a_enc) * Fraction(1, den)
        b_enc = beta.enclosure(width)
        others = [e for e in beta.conjugates(width) if e.index != beta.index]
        if b_enc.is_real:
            biv = b_enc.interval
            if img.certainly_lt(biv) or img.certainly_gt(biv):
                return False
            if all(_interval_avoids(img, o) for o in others):
                return True
        width /= 10 ** 6
    raise IsolationError("embedding verification undecided at budget")


def _image_interval(p: IntPoly, enc: RootEnclosure) -> RatInterval:
    if enc.is_real:
        return p.eval_at(RatInterval(enc.interval.lo, enc.interval.hi))
    img = eval_on_disk(p, enc.disk)
    return img.re_interval()  # real part only; imaginary handled by caller


def _interval_avoids(img: RatInterval, other: RootEnclosure) -> bool:
    if other.is_real:
        return img.certainly_lt(other.interval) or img.certainly_gt(other.interval)
    return True  # a real value never equals a certified nonreal root


def c9(alpha: AlgNum, beta: AlgNum,
       precision: Fraction = Fraction(1, 10 ** 12)) -> Fraction:
    """Rounded-up rational upper bound on max_i |b_i| for any power-basis
    representation of beta over alpha:

        d * house(beta) * max_j prod_{i != j} (1 + |alpha_i|) / |alpha_i - alpha_j|
    """
    d = alpha.degree
    width = Fraction(precision)
    for _ in range(8):
        encl = alpha.conjugates(width)
        try:
            best = RatInterval(0)
            for j in range(d):
                prod = RatInterval(1)
                for i in range(d):
                    if i == j:
                        continue
                    num = encl[i].abs_interval() + 1
                    den = encl[i].distance_interval(encl[j])
                    prod = prod * (num / den)
                if prod.hi > best.hi:
                    best = prod
            hb = house(beta.minpoly, width)
            return tidy_up(d * hb.hi * best.hi)
        except ZeroDivisionError:
            width /= 10 ** 6
    raise IsolationError("conjugate separation undecided at budget")


def theta_upper_bound(alpha: AlgNum) -> int:
    """Integer upper bound on the index of Z[c_alpha * alpha] in the maximal
    order: floor of sqrt |disc(minpoly of c_alpha * alpha)|."""
    f = alpha.minpoly
    if f.degree == 1:
        return 1
    g = f.scale_root(f.lead)  # monic minimal polynomial of c_alpha * alpha
    disc = discriminant_poly(g)
    return max(1, isqrt(abs(disc)))


def liouville_c6(alpha: AlgNum,
                 precision: Fraction = Fraction(1, 10 ** 12)) -> Fraction:
    """Positive rational C6 with |alpha - x/y| >= C6 / H(x, y)**d for every
    rational x/y != alpha (y != 0):

        C6 = (c_alpha * prod_{i != selected} (1 + |alpha_i|))**(-1), rounded down.
    """
    encl = alpha.conjugates(Fraction(precision))
    denom = RatInterval(Fraction(alpha.lead))
    for e in encl:
        if e.index == alpha.index:
            continue
        denom = denom * (e.abs_interval() + 1)
    return tidy_down(Fraction(1) / denom.hi)
