"""Exact univariate integer and rational polynomial arithmetic.

Coefficients are stored low-to-high, so ``coeffs[k]`` is the coefficient of
``x**k``.  The zero polynomial is the empty tuple with degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .rounding import RatInterval


def _trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = _trim([int(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- constructors --------------------------------------------------------
    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly(())

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly((1,))

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def from_high_to_low(coeffs: Sequence[int]) -> "IntPoly":
        return IntPoly(tuple(reversed(list(coeffs))))

    # -- structure -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def height(self) -> int:
        """Max absolute value of the coefficients; 0 for the zero polynomial."""
        return max((abs(c) for c in self.coeffs), default=0)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(c // g for c in self.coeffs)

    # -- arithmetic ------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly((self.coeff(i) + other.coeff(i)) for i in range(n))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift_degree(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def divided_derivative(self, i: int) -> "IntPoly":
        """The i-th divided derivative (1/i!) d^i/dx^i; integer coefficients."""
        return IntPoly(comb(k, i) * self.coeff(k)
                       for k in range(i, len(self.coeffs)))

    # -- evaluation --------------------------------------------------------------
    def eval_at(self, x):
        """Horner evaluation; exact for int/Fraction, outward for RatInterval."""
        acc = Fraction(0) if not isinstance(x, RatInterval) else RatInterval(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_pair(self, a: int, b: int, r: int | None = None) -> int:
        """Homogenized value b**r * P(a/b); r defaults to deg P."""
        if self.is_zero:
            return 0
        if r is None:
            r = self.degree
        if r < self.degree:
            raise ValueError("homogenization degree below deg P")
        acc = 0
        for k, c in enumerate(self.coeffs):
            acc += c * a ** k * b ** (r - k)
        return acc

    # -- transforms -----------------------------------------------------------
    def reciprocal(self) -> "IntPoly":
        """x**deg(P) * P(1/x): coefficient sequence reversed."""
        if self.is_zero:
            return self
        return IntPoly(tuple(reversed(self.coeffs)))

    def compose_linear_int(self, a: int, b: int) -> "IntPoly":
        """P(a*x + b), exact integer expansion."""
        out = IntPoly((self.coeffs[-1],)) if not self.is_zero else IntPoly.zero()
        lin = IntPoly((b, a))
        for c in reversed(self.coeffs[:-1]):
            out = out * lin + IntPoly((c,))
        return out

    def scale_root(self, c: int) -> "IntPoly":
        """Monic-making transform: c**(d-1) * P(x/c); roots scale by c."""
        d = self.degree
        return IntPoly(coef * c ** (d - 1 - k) if k < d else coef
                       for k, coef in enumerate(self.coeffs))

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_poly(p: IntPoly, var: str = "x") -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            term = str(mag)
        elif k == 1:
            term = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            term = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
        parts.append((sign, term))
    first_sign, first_term = parts[0]
    out = ("-" if first_sign == "-" else "") + first_term
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


# -- rational-coefficient helpers (reduction mod f, gcd over Q) ----------------

class RatPoly:
    """Polynomial over Q, used for exact reductions in Q[x]/(f)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = _trim([Fraction(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("RatPoly is immutable")

    @staticmethod
    def from_intpoly(p: IntPoly) -> "RatPoly":
        return RatPoly(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly((self.coeff(i) + other.coeff(i)) for i in range(n))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        db, lb = other.degree, other.lead
        while len(rem) - 1 >= db and rem:
            k = len(rem) - 1 - db
            f = rem[-1] / lb
            q[k] = f
            for j, c in enumerate(other.coeffs):
                rem[k + j] -= f * c
            while rem and rem[-1] == 0:
                rem.pop()
        return RatPoly(q), RatPoly(rem)

    def mod(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def monic(self) -> "RatPoly":
        if self.is_zero:
            return self
        inv = 1 / self.lead
        return RatPoly(c * inv for c in self.coeffs)

    def eval_at(self, x):
        acc = Fraction(0) if not isinstance(x, RatInterval) else RatInterval(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def clear_denominators(self) -> tuple[IntPoly, int]:
        """Smallest positive D with D*self integral; returns (D*self, D)."""
        D = 1
        for c in self.coeffs:
            D = D * c.denominator // gcd(D, c.denominator)
        return IntPoly(int(c * D) for c in self.coeffs), D

    def __repr__(self):
        return f"RatPoly({list(self.coeffs)})"


def poly_gcd_q(p: IntPoly, q: IntPoly) -> IntPoly:
    """gcd over Q, returned as a primitive integer polynomial (positive lead).
    gcd(0, 0) = 0."""
    a, b = RatPoly.from_intpoly(p), RatPoly.from_intpoly(q)
    while not b.is_zero:
        a, b = b, a.mod(b)
    if a.is_zero:
        return IntPoly.zero()
    g, _ = a.monic().clear_denominators()
    g = g.primitive()
    return g if g.lead > 0 else -g


def is_squarefree(p: IntPoly) -> bool:
    if p.is_zero:
        return False
    if p.degree == 0:
        return True
    return poly_gcd_q(p, p.derivative()).degree == 0


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p') over Q, as a primitive integer polynomial."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    g = poly_gcd_q(p, p.derivative())
    if g.degree == 0:
        return p.primitive() if p.lead > 0 else (-p).primitive()
    q, r = RatPoly.from_intpoly(p).divmod(RatPoly.from_intpoly(g))
    assert r.is_zero
    out, _ = q.clear_denominators()
    out = out.primitive()
    return out if out.lead > 0 else -out


# -- resultants and discriminants ----------------------------------------------

def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant as the determinant of the Sylvester block matrix with the
    Q-rows on top, so resultant(P, Q) = lc(Q)**deg(P) * prod P(nu) over the
    roots nu of Q.  This differs from the P-rows-first layout by the factor
    (-1)**(deg P * deg Q); every use in this package takes absolute values
    or even powers, and the sign convention is pinned by the test suite."""
    if p.is_zero or q.is_zero:
        raise ValueError("resultant of zero polynomial")
    r, s = p.degree, q.degree
    if r == 0 and s == 0:
        return 1
    if r == 0:
        return p.coeffs[0] ** s
    if s == 0:
        return q.coeffs[0] ** r
    n = r + s
    rows = []
    qc = list(reversed(q.coeffs))  # high-to-low
    pc = list(reversed(p.coeffs))
    for i in range(r):
        rows.append([0] * i + qc + [0] * (n - s - 1 - i))
    for i in range(s):
        rows.append([0] * i + pc + [0] * (n - r - 1 - i))
    return _bareiss_det(rows)


def discriminant_poly(p: IntPoly) -> int:
    """Discriminant of p via (-1)**(d(d-1)/2) * Res(p, p') / lc(p)."""
    d = p.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = resultant(p, p.derivative())
    num = (-1) ** (d * (d - 1) // 2) * res
    assert num % p.lead == 0
    return num // p.lead
