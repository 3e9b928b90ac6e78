"""Certified root enclosures for squarefree integer polynomials.

Real roots are isolated by Sturm bisection with exact rational endpoints.
Nonreal roots are seeded by arbitrary-precision numerics and then *certified*
with exact arithmetic only:

* every disk D(c, rho) with rho an upper rounding of
  ``deg(P) * |P(c)| / |P'(c)|`` contains at least one root of P
  (log-derivative bound, P'(c) != 0);
* the certified real intervals together with the disks and their conjugate
  mirrors are pairwise disjoint, the disks avoid the real axis, and there are
  deg(P) regions in total -- so each region holds exactly one root.

Refinement produces new, smaller enclosures; the old value is never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .intpoly import IntPoly, is_squarefree, poly_gcd_q
from .rounding import (RatInterval, pow_half_integer_down, sqrt_down,
                       sqrt_up)


class IsolationError(ValueError):
    pass


# -- exact complex rational arithmetic -----------------------------------------

@dataclass(frozen=True)
class CRat:
    """Complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "CRat":
        return CRat(Fraction(re), Fraction(im))

    def __add__(self, other: "CRat") -> "CRat":
        return CRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CRat") -> "CRat":
        return CRat(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "CRat") -> "CRat":
        return CRat(self.re * other.re - self.im * other.im,
                    self.re * other.im + self.im * other.re)

    def scale(self, q: Fraction) -> "CRat":
        return CRat(self.re * q, self.im * q)

    def conj(self) -> "CRat":
        return CRat(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "CRat":
        a2 = self.abs2()
        if a2 == 0:
            raise ZeroDivisionError
        return CRat(self.re / a2, -self.im / a2)

    def abs_interval(self) -> RatInterval:
        a2 = self.abs2()
        return RatInterval(sqrt_down(a2), sqrt_up(a2))


def eval_crat(p: IntPoly, z: CRat) -> CRat:
    acc = CRat.of(0)
    for c in reversed(p.coeffs):
        acc = acc * z + CRat.of(c)
    return acc


class ComplexDisk:
    """Closed disk with rational-complex center and rational radius; the
    basic certified enclosure for nonreal values."""

    __slots__ = ("center", "radius")

    def __init__(self, center: CRat, radius):
        self.center = center
        self.radius = Fraction(radius)
        if self.radius < 0:
            raise ValueError("negative radius")

    @staticmethod
    def from_interval(x: RatInterval) -> "ComplexDisk":
        return ComplexDisk(CRat.of(x.mid()), x.width / 2)

    @staticmethod
    def point(z: CRat) -> "ComplexDisk":
        return ComplexDisk(z, 0)

    def abs_interval(self) -> RatInterval:
        c = self.center.abs_interval()
        return RatInterval(max(Fraction(0), c.lo - self.radius), c.hi + self.radius)

    def __add__(self, other: "ComplexDisk") -> "ComplexDisk":
        return ComplexDisk(self.center + other.center, self.radius + other.radius)

    def __sub__(self, other: "ComplexDisk") -> "ComplexDisk":
        return ComplexDisk(self.center - other.center, self.radius + other.radius)

    def __mul__(self, other: "ComplexDisk") -> "ComplexDisk":
        c1, r1, c2, r2 = self.center, self.radius, other.center, other.radius
        rad = (c1.abs_interval().hi * r2 + c2.abs_interval().hi * r1 + r1 * r2)
        return ComplexDisk(c1 * c2, rad)

    def inverse(self) -> "ComplexDisk":
        clo = self.center.abs_interval().lo
        if clo <= self.radius:
            raise ZeroDivisionError("disk may contain zero")
        rad = self.radius / (clo * (clo - self.radius))
        return ComplexDisk(self.center.inverse(), rad)

    def __truediv__(self, other: "ComplexDisk") -> "ComplexDisk":
        return self * other.inverse()

    def contains_zero(self) -> bool:
        return self.center.abs_interval().lo <= self.radius

    def disjoint_from(self, other: "ComplexDisk") -> bool:
        d2 = (self.center - other.center).abs2()
        s = self.radius + other.radius
        return d2 > s * s

    def contains_disk(self, other: "ComplexDisk") -> bool:
        if other.radius > self.radius:
            return False
        d_hi = (self.center - other.center).abs_interval().hi
        return d_hi + other.radius <= self.radius

    def re_interval(self) -> RatInterval:
        return RatInterval(self.center.re - self.radius, self.center.re + self.radius)

    def im_interval(self) -> RatInterval:
        return RatInterval(self.center.im - self.radius, self.center.im + self.radius)

    def __repr__(self):
        return f"ComplexDisk(({float(self.center.re):.6g}, {float(self.center.im):.6g}), r={float(self.radius):.3g})"


def eval_on_disk(p: IntPoly, d: ComplexDisk) -> ComplexDisk:
    """Certified image disk: P(c) plus the Taylor tail sum |D_k P(c)| r^k."""
    c, r = d.center, d.radius
    center = eval_crat(p, c)
    tail = Fraction(0)
    rk = Fraction(1)
    for k in range(1, p.degree + 1):
        rk *= r
        dk = eval_crat(p.divided_derivative(k), c)
        tail += dk.abs_interval().hi * rk
    return ComplexDisk(center, tail)


# -- root enclosures -------------------------------------------------------------

@dataclass(frozen=True)
class RootEnclosure:
    """Certified enclosure of exactly one root of ``poly``.

    Real roots carry an exact rational interval; nonreal roots carry a disk
    that avoids the real axis.  ``index`` is the position in the root
    ordering (by real part, then imaginary part, midpoints breaking the rare
    unresolved tie)."""

    poly: IntPoly
    index: int
    interval: RatInterval | None = None
    disk: ComplexDisk | None = None

    @property
    def is_real(self) -> bool:
        return self.interval is not None

    def width(self) -> Fraction:
        if self.is_real:
            return self.interval.width
        return 2 * self.disk.radius

    def as_disk(self) -> ComplexDisk:
        if self.is_real:
            return ComplexDisk.from_interval(self.interval)
        return self.disk

    def abs_interval(self) -> RatInterval:
        if self.is_real:
            return self.interval.abs()
        return self.disk.abs_interval()

    def re_interval(self) -> RatInterval:
        return self.interval if self.is_real else self.disk.re_interval()

    def distance_interval(self, other: "RootEnclosure | RatInterval | Fraction") -> RatInterval:
        """Certified |self - other|."""
        if isinstance(other, RootEnclosure):
            if self.is_real and other.is_real:
                return (self.interval - other.interval).abs()
            return (self.as_disk() - other.as_disk()).abs_interval()
        if isinstance(other, RatInterval):
            if self.is_real:
                return (self.interval - other).abs()
            return (self.as_disk() - ComplexDisk.from_interval(other)).abs_interval()
        q = Fraction(other)
        if self.is_real:
            return (self.interval - RatInterval(q)).abs()
        return (self.as_disk() - ComplexDisk.point(CRat.of(q))).abs_interval()

    def refine(self, width: Fraction) -> "RootEnclosure":
        """Enclosure of the same root with width <= ``width``."""
        return _refine_enclosure(self, Fraction(width))

    def approx(self) -> complex:
        if self.is_real:
            return complex(float(self.interval.mid()), 0.0)
        return complex(float(self.disk.center.re), float(self.disk.center.im))


# -- Sturm machinery ---------------------------------------------------------

def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Signed pseudo-remainder Sturm chain with integer coefficients."""
    chain = [p.primitive(), p.derivative().primitive()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        # multiply by an even power of lc(b) so signs are preserved
        delta = a.degree - b.degree + 1
        mult = b.lead ** (2 * ((delta + 1) // 2))
        rem = _int_poly_rem(a * mult, b)
        rem = -rem
        if rem.is_zero:
            break
        chain.append(rem.primitive())
    return chain


def _int_poly_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of a by b; requires the division to stay integral (callers
    pre-scale by powers of lc(b))."""
    rem = list(a.coeffs)
    db, lb = b.degree, b.lead
    while len(rem) - 1 >= db and rem:
        k = len(rem) - 1 - db
        q, r = divmod(rem[-1], lb)
        if r != 0:
            # scale once more; keeps sign since lb**2 > 0
            rem = [c * lb for c in rem]
            continue
        for j, c in enumerate(b.coeffs):
            rem[k + j] -= q * c
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPoly(rem)


def _sign_variations(chain: Sequence[IntPoly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q.eval_at(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: IntPoly, lo: Fraction, hi: Fraction, chain=None) -> int:
    """Number of real roots of squarefree p in (lo, hi]."""
    chain = chain or sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def cauchy_root_bound(p: IntPoly) -> Fraction:
    """All complex roots have modulus < 1 + H(p)/|lc(p)|."""
    return 1 + Fraction(p.height(), abs(p.lead))


# -- real isolation ----------------------------------------------------------

def isolate_real_roots(p: IntPoly) -> list[RatInterval]:
    """Disjoint isolating intervals for all real roots of squarefree p,
    sorted increasingly.  Exact rational roots give point intervals."""
    if p.is_zero:
        raise IsolationError("zero polynomial")
    if p.degree == 0:
        return []
    if p.degree == 1:
        root = Fraction(-p.coeffs[0], p.coeffs[1])
        return [RatInterval(root, root)]
    chain = sturm_chain(p)
    bound = cauchy_root_bound(p)
    total = count_real_roots(p, -bound, bound, chain)
    out: list[RatInterval] = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_tighten_single(p, chain, lo, hi))
            continue
        # split at a certified non-root so the half-open Sturm counts
        # partition the roots exactly
        split = (lo + hi) / 2
        k = 1
        while p.eval_at(split) == 0:
            split = lo + (hi - lo) * Fraction(2 * k + 1, 4 * k + 3)
            k += 1
        left = count_real_roots(p, lo, split, chain)
        stack.append((lo, split, left))
        stack.append((split, hi, n - left))
    out.sort(key=lambda iv: iv.lo)
    # adjacent isolating intervals may share a (non-root) split endpoint;
    # bisect until the closures are pairwise disjoint
    for i in range(len(out) - 1):
        guard = 0
        while out[i].intersects(out[i + 1]):
            if out[i].width > 0:
                out[i] = _bisect_to_width(p, out[i], out[i].width / 4)
            if out[i + 1].width > 0:
                out[i + 1] = _bisect_to_width(p, out[i + 1], out[i + 1].width / 4)
            guard += 1
            if guard > 300:
                raise IsolationError("isolating intervals failed to separate")
    return out


def _tighten_single(p: IntPoly, chain, lo: Fraction, hi: Fraction) -> RatInterval:
    """Shrink an interval known to hold exactly one root until the endpoint
    signs are nonzero and opposite (or the root is hit exactly)."""
    for _ in range(4 * p.degree + 64):
        vlo, vhi = p.eval_at(lo), p.eval_at(hi)
        if vlo == 0:
            return RatInterval(lo, lo)
        if vhi == 0:
            return RatInterval(hi, hi)
        if (vlo > 0) != (vhi > 0):
            return RatInterval(lo, hi)
        mid = (lo + hi) / 2
        if count_real_roots(p, lo, mid, chain) == 1:
            hi = mid
        else:
            lo = mid
    raise IsolationError("failed to trap sign change")


def _bisect_to_width(p: IntPoly, iv: RatInterval, width: Fraction) -> RatInterval:
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    vlo = p.eval_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        vmid = p.eval_at(mid)
        if vmid == 0:
            return RatInterval(mid, mid)
        if (vlo > 0) != (vmid > 0):
            hi = mid
        else:
            lo, vlo = mid, vmid
    return RatInterval(lo, hi)


# -- full isolation (real + nonreal), with certification ----------------------

_DEFAULT_WIDTH = Fraction(1, 10 ** 12)


class _RootSystem:
    """All-root isolation of one squarefree polynomial, lazily refined."""

    def __init__(self, p: IntPoly):
        if not is_squarefree(p):
            raise IsolationError(f"polynomial is not squarefree: {p}")
        self.poly = p
        self.real = isolate_real_roots(p)
        self.disks = _certified_disks(p, self.real)
        self._order()

    def _order(self):
        items: list[tuple] = []
        for iv in self.real:
            items.append((iv.mid(), Fraction(0), RatInterval(iv.lo, iv.hi), None))
        for d in self.disks:
            items.append((d.center.re, d.center.im, None, d))
        items.sort(key=lambda t: (t[0], t[1]))
        self.best = {i: RootEnclosure(self.poly, i, interval=iv, disk=d)
                     for i, (_, _, iv, d) in enumerate(items)}

    def enclosures(self) -> list[RootEnclosure]:
        return [self.best[i] for i in sorted(self.best)]

    def refined(self, index: int, width: Fraction) -> RootEnclosure:
        cur = self.best[index]
        if cur.width() <= width:
            return cur
        out = _refine_enclosure(cur, width)
        self.best[index] = out
        return out


def _certified_disks(p: IntPoly, real_ivs: list[RatInterval],
                     prec: int = 120) -> list[ComplexDisk]:
    """Certified disks for the nonreal roots of squarefree p."""
    n_complex = p.degree - len(real_ivs)
    if n_complex == 0:
        return []
    if n_complex % 2:
        raise IsolationError("nonreal root count must be even")
    deriv = p.derivative()
    for attempt in range(8):
        bits = prec << attempt
        seeds = [z for z in _numeric_seeds(p, bits) if mpmath.im(z) > 0]
        if len(seeds) != n_complex // 2:
            continue
        disks: list[ComplexDisk] = []
        ok = True
        for z in seeds:
            c = CRat(_dyadic(mpmath.re(z), bits), _dyadic(mpmath.im(z), bits))
            disk = _containment_disk(p, deriv, c)
            if disk is None or disk.center.im - disk.radius <= 0:
                ok = False
                break
            disks.append(disk)
        if not ok:
            continue
        mirrored = disks + [ComplexDisk(d.center.conj(), d.radius) for d in disks]
        if _all_disjoint(mirrored, real_ivs):
            return mirrored
    raise IsolationError(f"could not certify nonreal roots of {p}")


def _numeric_seeds(p: IntPoly, bits: int) -> list:
    old = mpmath.mp.prec
    try:
        mpmath.mp.prec = bits
        coeffs = [mpmath.mpf(c) for c in reversed(p.coeffs)]
        return [mpmath.mpc(r)
                for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=bits)]
    finally:
        mpmath.mp.prec = old


def _dyadic(x, bits: int) -> Fraction:
    """Exact dyadic rational from an mpf/float at the working precision."""
    m = mpmath.mpf(x)
    sign, man, exp, _ = m._mpf_
    if man == 0:
        return Fraction(0)
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def _containment_disk(p: IntPoly, deriv: IntPoly, c: CRat) -> ComplexDisk | None:
    """Disk around c certified to contain >= 1 root of p (log-derivative
    bound): radius = deg(p) |p(c)| / |p'(c)| rounded up."""
    pc = eval_crat(p, c)
    dc = eval_crat(deriv, c)
    d2 = dc.abs2()
    if d2 == 0:
        return None
    rho2 = Fraction(p.degree ** 2) * pc.abs2() / d2
    return ComplexDisk(c, sqrt_up(rho2))


def _all_disjoint(disks: list[ComplexDisk], real_ivs: list[RatInterval]) -> bool:
    for i in range(len(disks)):
        if abs(disks[i].center.im) <= disks[i].radius:
            return False
        for j in range(i + 1, len(disks)):
            if not disks[i].disjoint_from(disks[j]):
                return False
    # disks avoid the real axis, so they cannot meet real intervals
    for i in range(len(real_ivs)):
        for j in range(i + 1, len(real_ivs)):
            if real_ivs[i].intersects(real_ivs[j]):
                return False
    return True


_SYSTEMS: dict[tuple, _RootSystem] = {}


def root_system(p: IntPoly) -> _RootSystem:
    key = p.coeffs
    sys = _SYSTEMS.get(key)
    if sys is None:
        sys = _RootSystem(p)
        _SYSTEMS[key] = sys
    return sys


def isolate_roots(p: IntPoly, precision: Fraction = _DEFAULT_WIDTH) -> list[RootEnclosure]:
    """Exactly deg(p) pairwise-disjoint certified enclosures of the roots of
    squarefree p, each refined to width <= precision."""
    sys = root_system(p)
    return [sys.refined(i, Fraction(precision)) for i in sorted(sys.best)]


def root_enclosure(p: IntPoly, index: int, precision: Fraction = _DEFAULT_WIDTH) -> RootEnclosure:
    """Certified enclosure of the index-th root (ordered by real part, then
    imaginary part) of squarefree p."""
    sys = root_system(p)
    if index not in sys.best:
        raise IndexError(f"root index {index} out of range for degree {p.degree}")
    return sys.refined(index, Fraction(precision))


def _refine_enclosure(e: RootEnclosure, width: Fraction) -> RootEnclosure:
    if e.width() <= width:
        return e
    if e.is_real:
        return RootEnclosure(e.poly, e.index,
                             interval=_bisect_to_width(e.poly, e.interval, width))
    disk = _refine_disk(e.poly, e.disk, width)
    return RootEnclosure(e.poly, e.index, disk=disk)


def _refine_disk(p: IntPoly, disk: ComplexDisk, width: Fraction) -> ComplexDisk:
    """Newton iteration from the disk center with exact validation; each
    accepted step must stay inside the previous certified disk."""
    deriv = p.derivative()
    cur = disk
    bits = max(64, 2 * _bits_of(width))
    for _ in range(64):
        if 2 * cur.radius <= width:
            return cur
        c = cur.center
        dc = eval_crat(deriv, c)
        if dc.abs2() == 0:
            break
        step = eval_crat(p, c) * dc.inverse()
        nxt_center = CRat(_round_dyadic(c.re - step.re, bits),
                          _round_dyadic(c.im - step.im, bits))
        nxt = _containment_disk(p, deriv, nxt_center)
        if nxt is None:
            break
        if cur.contains_disk(nxt) or nxt.radius < cur.radius / 2:
            # same root: the new disk intersects the old (both contain it)
            if not nxt.disjoint_from(cur):
                cur = nxt
                continue
        break
    if 2 * cur.radius <= width:
        return cur
    raise IsolationError("disk refinement stalled; raise seed precision")


def _bits_of(width: Fraction) -> int:
    if width >= 1:
        return 8
    return int(Fraction(width.denominator, width.numerator)).bit_length() + 8


def _round_dyadic(q: Fraction, bits: int) -> Fraction:
    scaled = q * (1 << bits)
    return Fraction(round(scaled), 1 << bits)


# -- derived quantities ---------------------------------------------------------

def mahler_measure(p, precision: Fraction = Fraction(1, 10 ** 25)) -> RatInterval:
    """Certified enclosure of M(P) = |c_P| * prod max(1, |alpha_i|).

    Accepts an IntPoly or a BinForm (measured through F(x, 1); the degree
    drops with leading zero coefficients, matching M(Q) = M(Q(x, 1))).
    Multiple roots are handled by the multiplicative splitting
    M(P) = M(gcd(P, P')) * M(P / gcd(P, P')).  For a nonzero integer
    polynomial the lower endpoint is clamped at 1 (Landau).
    """
    p = _as_univariate(p)
    if p.is_zero:
        raise ValueError("zero polynomial")
    out = _mahler_rec(p, Fraction(precision) / (2 * (p.degree + 1) or 2))
    lo = max(out.lo, Fraction(1))
    return RatInterval(min(lo, out.hi), out.hi)


def _mahler_rec(p: IntPoly, width: Fraction) -> RatInterval:
    from .intpoly import RatPoly

    if p.degree == 0:
        v = abs(p.coeffs[0])
        return RatInterval(v, v)
    if is_squarefree(p):
        out = RatInterval(Fraction(abs(p.lead)))
        for e in isolate_roots(p, width):
            out = out * e.abs_interval().max_with(1)
        return out
    g = poly_gcd_q(p, p.derivative())
    quot, rem = RatPoly.from_intpoly(p).divmod(RatPoly.from_intpoly(g))
    assert rem.is_zero
    h, denom = quot.clear_denominators()
    return _mahler_rec(g, width) * _mahler_rec(h, width) * Fraction(1, denom)


def house(p, precision: Fraction = Fraction(1, 10 ** 25)) -> RatInterval:
    """Certified enclosure of the house (max root modulus) of p."""
    from .intpoly import squarefree_part

    p = _as_univariate(p)
    if p.is_zero or p.degree < 1:
        raise ValueError("house needs degree >= 1")
    sf = p if is_squarefree(p) else squarefree_part(p)
    encl = isolate_roots(sf, Fraction(precision) / 4)
    lo = max(e.abs_interval().lo for e in encl)
    hi = max(e.abs_interval().hi for e in encl)
    return RatInterval(lo, hi)


def _as_univariate(p) -> IntPoly:
    from .binforms import BinForm

    if isinstance(p, BinForm):
        return p.dehomogenize()
    return p


def root_separation_lower_bound(p: IntPoly, q: IntPoly) -> Fraction:
    """Positive rational lower bound on min |mu_i - nu_j| over roots mu of P
    and nu of Q, for coprime P, Q with r = deg P >= max(1, deg Q):

        2**(1-r) (r+1)**((1-3r)/2) max(H(P), H(Q))**(-2r)

    rounded down when the half-integer exponent makes the value irrational.
    """
    r, s = p.degree, q.degree
    if r < 1 or r < s:
        raise ValueError("need deg P >= max(1, deg Q)")
    if poly_gcd_q(p, q).degree != 0:
        raise ValueError("polynomials share a factor")
    h = Fraction(max(p.height(), q.height()))
    val = Fraction(2) ** (1 - r) * h ** (-2 * r)
    return val * pow_half_integer_down(Fraction(r + 1), 1 - 3 * r)
