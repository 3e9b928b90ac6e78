"""Directed rational rounding and certified real enclosures.

Every inequality verdict in this package is made from rational bounds that
are rounded *away* from the claim being certified: upper bounds round up,
lower bounds round down.  This module supplies the primitives:

* directed square roots and n-th roots of nonnegative rationals,
* directed rational powers ``base**(p/q)``,
* :class:`SqrtVal`, an exact value ``q * sqrt(n)`` (half-integer exponents
  such as ``(1 - 3r)/2`` produce these),
* :class:`RatInterval`, a closed interval with rational endpoints, and
* certified ``log``/``exp`` enclosures backed by ``mpmath.iv`` interval
  arithmetic with exact dyadic endpoint extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath
from mpmath import iv

Rat = Fraction


def _nth_root_floor(n: int, k: int) -> int:
    """Largest integer r with r**k <= n, for n >= 0, k >= 1 (integer Newton)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << -(-n.bit_length() // k)  # power of two >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def sqrt_down(x: Rat) -> Rat:
    """Rational lower bound on sqrt(x), exact when x is a perfect square."""
    return root_down(x, 2)


def sqrt_up(x: Rat) -> Rat:
    """Rational upper bound on sqrt(x), exact when x is a perfect square."""
    return root_up(x, 2)


# Extra denominator scaling so directed roots are tight enough for strict
# comparisons without a refinement loop at every call site.  A power of two
# keeps denominators dyadic along enclosure arithmetic.
_ROOT_SCALE = 1 << 100


# operands above this bit size go through the top-bits fast path (relative
# error ~2^-160, plenty for directed bounds on astronomical constants)
_BIG_OPERAND_BITS = 8192


def _root_big(x: Fraction, k: int, up: bool) -> Fraction:
    """Directed k-th root via mantissa/exponent split: sandwich x between
    dyadic bounds with ~160k-bit mantissas, root the mantissa exactly."""
    num, den = x.numerator, x.denominator
    bits = 160
    a = k * bits - (num.bit_length() - den.bit_length())
    a -= a % k  # keep 2^(a/k) exact
    if up:
        u = (num << a) // den + 1 if a >= 0 else num // (den << -a) + 1
        r = _nth_root_floor(u, k)
        if r ** k != u:
            r += 1
    else:
        u = (num << a) // den if a >= 0 else num // (den << -a)
        r = _nth_root_floor(u, k)
    e = a // k
    return Fraction(r, 1 << e) if e >= 0 else Fraction(r << -e)


def root_down(x: Rat, k: int, scale: int = _ROOT_SCALE) -> Rat:
    """Rational lower bound on x**(1/k) for x >= 0."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    num, den = x.numerator, x.denominator
    if max(num.bit_length(), den.bit_length()) > _BIG_OPERAND_BITS:
        return _root_big(x, k, up=False)
    # x**(1/k) = nthroot(num * den**(k-1)) / den ; scale for accuracy.
    m = num * den ** (k - 1) * scale ** k
    return Fraction(_nth_root_floor(m, k), den * scale)


def root_up(x: Rat, k: int, scale: int = _ROOT_SCALE) -> Rat:
    """Rational upper bound on x**(1/k) for x >= 0."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    num, den = x.numerator, x.denominator
    if max(num.bit_length(), den.bit_length()) > _BIG_OPERAND_BITS:
        return _root_big(x, k, up=True)
    m = num * den ** (k - 1) * scale ** k
    r = _nth_root_floor(m, k)
    if r ** k != m:
        r += 1
    return Fraction(r, den * scale)


def pow_down(base: Rat, exp: Rat) -> Rat:
    """Rational lower bound on base**exp for base > 0 and rational exp;
    exact for integer exponents."""
    base, exp = Fraction(base), Fraction(exp)
    if base <= 0:
        raise ValueError("base must be positive")
    if exp < 0:
        up = pow_up(base, -exp)
        return Fraction(up.denominator, up.numerator)
    p, q = exp.numerator, exp.denominator
    if q == 1:
        return base ** p
    return root_down(base ** p, q)


def pow_up(base: Rat, exp: Rat) -> Rat:
    """Rational upper bound on base**exp for base > 0 and rational exp;
    exact for integer exponents."""
    base, exp = Fraction(base), Fraction(exp)
    if base <= 0:
        raise ValueError("base must be positive")
    if exp < 0:
        dn = pow_down(base, -exp)
        return Fraction(dn.denominator, dn.numerator)
    p, q = exp.numerator, exp.denominator
    if q == 1:
        return base ** p
    return root_up(base ** p, q)


@dataclass(frozen=True)
class SqrtVal:
    """Exact value ``coeff * sqrt(radicand)`` with coeff rational, radicand a
    nonnegative integer.  Closed under multiplication by rationals and by
    SqrtVals sharing the same radicand; supports exact comparison against
    rationals and other SqrtVals via squaring."""

    coeff: Rat
    radicand: int = 1

    def __post_init__(self):
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        r = _nth_root_floor(self.radicand, 2)
        if r * r == self.radicand:  # collapse perfect squares to pure rationals
            object.__setattr__(self, "coeff", self.coeff * r)
            object.__setattr__(self, "radicand", 1)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def as_rational(self) -> Rat:
        if not self.is_rational:
            raise ValueError("value is irrational")
        return self.coeff

    def round_down(self) -> Rat:
        if self.radicand == 1:
            return self.coeff
        s = sqrt_down(Fraction(self.radicand)) if self.coeff >= 0 else sqrt_up(Fraction(self.radicand))
        return self.coeff * s

    def round_up(self) -> Rat:
        if self.radicand == 1:
            return self.coeff
        s = sqrt_up(Fraction(self.radicand)) if self.coeff >= 0 else sqrt_down(Fraction(self.radicand))
        return self.coeff * s

    def __mul__(self, other):
        if isinstance(other, SqrtVal):
            if other.radicand == self.radicand:
                return SqrtVal(self.coeff * other.coeff * self.radicand, 1)
            return SqrtVal(self.coeff * other.coeff, self.radicand * other.radicand)
        return SqrtVal(self.coeff * Fraction(other), self.radicand)

    __rmul__ = __mul__

    def _cmp_key(self, other) -> int:
        """Sign of self - other, decided exactly."""
        if isinstance(other, SqrtVal) and not other.is_rational:
            if other.radicand == self.radicand:
                return (self.coeff > other.coeff) - (self.coeff < other.coeff)
            # sign(a*sqrt(m) - b*sqrt(n)): compare squares once signs agree
            a, m = self.coeff, self.radicand
            b, n = other.coeff, other.radicand
            sa = (a > 0) - (a < 0)
            sb = (b > 0) - (b < 0)
            if sa != sb:
                return (sa > sb) - (sa < sb)
            lhs, rhs = a * a * m, b * b * n
            s = (lhs > rhs) - (lhs < rhs)
            return s if sa >= 0 else -s
        q = Fraction(other.as_rational() if isinstance(other, SqrtVal) else other)
        a, m = self.coeff, self.radicand
        if m == 1:
            return (a > q) - (a < q)
        sa = (a > 0) - (a < 0)
        sq = (q > 0) - (q < 0)
        if sa != sq:
            return (sa > sq) - (sa < sq)
        lhs, rhs = a * a * m, q * q
        s = (lhs > rhs) - (lhs < rhs)
        return s if sa >= 0 else -s

    def __lt__(self, other):
        return self._cmp_key(other) < 0

    def __le__(self, other):
        return self._cmp_key(other) <= 0

    def __gt__(self, other):
        return self._cmp_key(other) > 0

    def __ge__(self, other):
        return self._cmp_key(other) >= 0

    def __repr__(self):
        if self.radicand == 1:
            return f"SqrtVal({self.coeff})"
        return f"SqrtVal({self.coeff}*sqrt({self.radicand}))"


def pow_half_integer_down(base: Rat, twice_exp: int) -> Rat:
    """Lower bound on base**(twice_exp/2) for base > 0: exact q*sqrt(n) form
    rounded down.  ``twice_exp`` is 2*exponent, so half-integer exponents
    stay exact until the final directed rounding."""
    return _pow_half(base, twice_exp).round_down()


def pow_half_integer_up(base: Rat, twice_exp: int) -> Rat:
    """Upper bound on base**(twice_exp/2); see :func:`pow_half_integer_down`."""
    return _pow_half(base, twice_exp).round_up()


def _pow_half(base: Rat, twice_exp: int) -> SqrtVal:
    base = Fraction(base)
    if base <= 0:
        raise ValueError("base must be positive")
    k, rem = divmod(twice_exp, 2)
    val = base ** k
    if rem == 0:
        return SqrtVal(val, 1)
    # base**(k + 1/2) = base**k * sqrt(base); sqrt(p/q) = sqrt(p*q)/q
    p, q = base.numerator, base.denominator
    return SqrtVal(Fraction(val, q), p * q)


class RatInterval:
    """Closed interval [lo, hi] with rational endpoints; certified to contain
    the real value it tracks.  Arithmetic is outward-rounded (here: exact,
    since endpoints are rationals)."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    # -- constructors ------------------------------------------------------
    @staticmethod
    def point(x) -> "RatInterval":
        return RatInterval(Fraction(x))

    # -- structure ---------------------------------------------------------
    @property
    def width(self) -> Rat:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RatInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def mid(self) -> Rat:
        return (self.lo + self.hi) / 2

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = _as_interval(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        cands = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(cands), max(cands))

    __rmul__ = __mul__

    def inverse(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _as_interval(other).inverse()

    def __rtruediv__(self, other):
        return _as_interval(other) / self

    def abs(self) -> "RatInterval":
        if self.lo >= 0:
            return RatInterval(self.lo, self.hi)
        if self.hi <= 0:
            return -self
        return RatInterval(0, max(-self.lo, self.hi))

    def pow_int(self, k: int) -> "RatInterval":
        if k < 0:
            return self.pow_int(-k).inverse()
        out = RatInterval(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def sqrt(self) -> "RatInterval":
        if self.lo < 0:
            raise ValueError("sqrt of interval with negative part")
        return RatInterval(sqrt_down(self.lo), sqrt_up(self.hi))

    def max_with(self, x) -> "RatInterval":
        x = Fraction(x)
        return RatInterval(max(self.lo, x), max(self.hi, x))

    # -- certified comparisons ---------------------------------------------
    def certainly_lt(self, other) -> bool:
        other = _as_interval(other)
        return self.hi < other.lo

    def certainly_gt(self, other) -> bool:
        other = _as_interval(other)
        return self.lo > other.hi

    def certainly_ne_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def __repr__(self):
        return f"RatInterval({self.lo}, {self.hi})"

    def __float__(self):
        return float(self.mid())


def _as_interval(x) -> RatInterval:
    if isinstance(x, RatInterval):
        return x
    return RatInterval(Fraction(x))


# -- certified transcendental enclosures -------------------------------------
#
# mpmath's interval context rounds outward, and its endpoints are exact
# dyadic numbers, so converting them to Fractions preserves the certificate.

def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    if man == 0:
        return Fraction(0)
    val = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -val if sign else val


def _iv_to_interval(x) -> RatInterval:
    # raw endpoint tuples: no re-rounding at the ambient working precision
    a, b = x._mpi_
    return RatInterval(_mpf_tuple_to_fraction(a), _mpf_tuple_to_fraction(b))


def _fraction_to_iv(q: Fraction):
    # iv.mpf(int) rounds outward, so the quotient encloses q
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def log_interval(x, prec: int = 160) -> RatInterval:
    """Certified enclosure of log(x) for x a positive Fraction or RatInterval."""
    x = _as_interval(x)
    if x.lo <= 0:
        raise ValueError("log of nonpositive value")
    old = iv.prec
    try:
        iv.prec = prec
        lo = iv.log(_fraction_to_iv(x.lo))
        hi = iv.log(_fraction_to_iv(x.hi))
        return RatInterval(_iv_to_interval(lo).lo, _iv_to_interval(hi).hi)
    finally:
        iv.prec = old


def exp_interval(x, prec: int = 160) -> RatInterval:
    """Certified enclosure of exp(x) for x a Fraction or RatInterval."""
    x = _as_interval(x)
    old = iv.prec
    try:
        iv.prec = prec
        lo = iv.exp(_fraction_to_iv(x.lo))
        hi = iv.exp(_fraction_to_iv(x.hi))
        return RatInterval(_iv_to_interval(lo).lo, _iv_to_interval(hi).hi)
    finally:
        iv.prec = old


def sqrt_interval(x, prec: int = 160) -> RatInterval:
    x = _as_interval(x)
    return x.sqrt()


def simplest_rational_in(lo: Rat, hi: Rat) -> Rat:
    """The rational with smallest denominator in [lo, hi] (Stern-Brocot).
    When the interval is tight around a rational p/q (width < 1/q**2), that
    rational is the unique denominator-<=q element, hence the result."""
    import math

    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_in(-hi, -lo)

    def rec(a: Fraction, b: Fraction) -> Fraction:
        fa = math.floor(a)
        if Fraction(fa) == a:
            return a
        if fa + 1 <= b:
            return Fraction(fa + 1)
        return fa + 1 / rec(1 / (b - fa), 1 / (a - fa))

    return rec(lo, hi)


def _dec_exponent(x: Rat) -> int:
    """Rough floor(log10 |x|); only steers the tidying scale."""
    num, den = abs(x.numerator), x.denominator
    return (num.bit_length() - den.bit_length()) * 301 // 1000


def tidy_up(x: Rat, digits: int = 18) -> Rat:
    """Upper bound on x keeping about ``digits`` significant digits; keeps
    reported constants and their downstream powers small."""
    import math

    x = Fraction(x)
    if x == 0:
        return x
    scale = 10 ** max(0, digits - _dec_exponent(x))
    out = Fraction(math.ceil(x * scale), scale)
    return out if out != 0 else x


def tidy_down(x: Rat, digits: int = 18) -> Rat:
    """Lower bound on x keeping about ``digits`` significant digits; never
    loses the sign of a positive value."""
    import math

    x = Fraction(x)
    if x == 0:
        return x
    scale = 10 ** max(0, digits - _dec_exponent(x))
    out = Fraction(math.floor(x * scale), scale)
    return out if out != 0 else x


def compact_str(x) -> str:
    """Exact p/q for small fractions, mantissa*10^e approximation for the
    astronomically large constants (no big-integer arithmetic at all)."""
    import math

    x = Fraction(x)
    num, den = x.numerator, x.denominator
    if abs(num) < 10 ** 40 and den < 10 ** 40:
        return str(x)
    sign = "-" if num < 0 else ""
    num = abs(num)
    # log10|x| from the top bits; exactness is irrelevant for display
    sn, sd = max(0, num.bit_length() - 64), max(0, den.bit_length() - 64)
    l10 = (sn - sd) * math.log10(2) + math.log10((num >> sn) / (den >> sd))
    e = math.floor(l10)
    mant = 10 ** (l10 - e)
    return f"{sign}{mant:.6g}*10^{e}"


def certified_floor(x: RatInterval) -> int:
    """Floor of the real enclosed by x, provided the enclosure does not
    straddle an integer.  Raises ValueError otherwise (caller refines)."""
    import math

    flo = math.floor(x.lo)
    fhi = math.floor(x.hi)
    if flo != fhi:
        raise ValueError(f"enclosure {x} straddles an integer boundary")
    return flo


def pow_interval(base: RatInterval, exp: RatInterval, prec: int = 160) -> RatInterval:
    """Certified enclosure of base**exp for base > 0 via exp(exp*log(base))."""
    return exp_interval(exp * log_interval(base, prec), prec)
