"""Thue-inequality enumeration, root assignment, and the large-solution census.

The enumeration is exhaustive over the height box: for each y the candidate
x values are confined to certified windows around y * Re(root), since a
solution of 0 < |F(x, y)| <= m must lie within (m/|c_d|)**(1/d) of some root
ray.  The census groups solutions into orbits of the unimodular part of the
enhanced automorphism group, computes the height threshold and the counting
bound, and checks that the bound is respected by everything the box search
found.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .algnum import AlgNum, NotInFieldError, normalize_minimal_poly, power_rep, theta_upper_bound
from .autgroup import EnhancedAut, aut_prime, root_orbit_partition
from .binforms import BinForm, discriminant
from .gap import (ApproxPair, GapConstants, HypothesisError, c16,
                  compare_to_power, count_bound)
from .intpoly import IntPoly
from .isolation import isolate_roots, mahler_measure
from .minpair import c12_closed_form, c13_formula
from .rounding import (RatInterval, compact_str, pow_up, root_up,
                       sqrt_down, tidy_up)


class ThueError(ValueError):
    pass


@dataclass(frozen=True)
class ThueProblem:
    """0 < |F(x, y)| <= m over primitive (x, y) with height <= bound."""

    form: BinForm
    m: int
    bound: int

    def __post_init__(self):
        from .algnum import is_irreducible

        if self.m < 1:
            raise ThueError("m must be >= 1 (the inequality is strict at 0)")
        if self.bound < 1:
            raise ThueError("height bound must be >= 1")
        f = self.form
        if f.degree < 3:
            raise ThueError("degree must be >= 3")
        if f.lead_x == 0 or not is_irreducible(f.dehomogenize()):
            raise ThueError(f"form is not irreducible over Q: {f}")

    @property
    def degree(self) -> int:
        return self.form.degree


@dataclass(frozen=True)
class Solution:
    """Primitive solution, sign-normalized: first nonzero coordinate > 0."""

    x: int
    y: int
    value: int  # F(x, y)

    @property
    def height(self) -> int:
        return max(abs(self.x), abs(self.y))

    @staticmethod
    def normalized(x: int, y: int, value: int, d: int) -> "Solution":
        lead = x if x != 0 else y
        if lead < 0:
            x, y = -x, -y
            if d % 2:
                value = -value
        return Solution(x, y, value)


_ENUM_BUDGET = 2_000_000


def enumerate_primitive(problem: ThueProblem) -> list[Solution]:
    """Complete list of sign-normalized primitive solutions with
    H(x, y) <= bound, via certified per-y windows around the root rays."""
    f = problem.form
    d, m, bound = problem.degree, problem.m, problem.bound
    # window radius: |F(x,y)| > |c_d| * delta**d outside distance delta of
    # every root ray, so delta0 = (m/|c_d|)**(1/d) rounded up
    delta0 = root_up(Fraction(m, abs(f.lead_x)), d)
    roots = isolate_roots(normalize_minimal_poly(f.dehomogenize()),
                          Fraction(1, 10 ** 12))
    re_bounds = [e.re_interval() for e in roots]
    out: dict[tuple[int, int], Solution] = {}

    def consider(x: int, y: int):
        if gcd(abs(x), abs(y)) != 1:
            return
        v = f.value(x, y)
        if 0 < abs(v) <= m:
            sol = Solution.normalized(x, y, v, d)
            out[(sol.x, sol.y)] = sol

    if 0 < abs(f.lead_x) <= m:
        consider(1, 0)
    steps = 0
    for y in range(1, bound + 1):
        windows = []
        for iv in re_bounds:
            lo = floor(iv.lo * y - delta0)
            hi = ceil(iv.hi * y + delta0)
            windows.append((lo, hi))
        windows.sort()
        merged: list[list[int]] = []
        for lo, hi in windows:
            if merged and lo <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        for lo, hi in merged:
            lo, hi = max(lo, -bound), min(hi, bound)
            for x in range(lo, hi + 1):
                steps += 1
                if steps > _ENUM_BUDGET:
                    raise ThueError("enumeration budget exceeded")
                consider(x, y)
    return sorted(out.values(), key=lambda s: (s.height, s.x, s.y))


def lewis_mahler_c10(f: BinForm,
                     precision: Fraction = Fraction(1, 10 ** 20)) -> Fraction:
    """Rounded-up 2**(d-1) d**((d-1)/2) M(F)**(d-2) / |D(F)|**(1/2)."""
    d = f.degree
    if f.lead_x == 0 or f.lead_y == 0:
        raise ThueError("Lewis-Mahler needs c_0 * c_d != 0")
    disc = discriminant(f)
    if disc == 0:
        raise ThueError("zero discriminant")
    m_up = mahler_measure(f, precision).hi
    from .rounding import pow_half_integer_up

    num = Fraction(2) ** (d - 1) * pow_half_integer_up(Fraction(d), d - 1) \
        * m_up ** (d - 2)
    return tidy_up(num / sqrt_down(Fraction(abs(disc))))


def assign_root(f: BinForm, sol: Solution,
                precision: Fraction = Fraction(1, 10 ** 12),
                budget: int = 5) -> tuple[int, str, bool]:
    """(root index, side, tie) minimizing
    min(|alpha_i - x/y|, |alpha_i^{-1} - y/x|); the side is "alpha" or
    "alpha_inv".  Complex-conjugate candidates tie exactly against rational
    targets; such ties resolve to the smaller root index with tie=True.
    Other ties within precision refine, and a surviving tie is reported."""
    poly = normalize_minimal_poly(f.dehomogenize())
    width = Fraction(precision)
    for _ in range(budget):
        encl = isolate_roots(poly, width)
        cands: list[tuple[RatInterval, int, str]] = []
        for e in encl:
            if sol.y != 0:
                cands.append((e.distance_interval(Fraction(sol.x, sol.y)),
                              e.index, "alpha"))
            if sol.x != 0:
                target = Fraction(sol.y, sol.x)
                if e.is_real:
                    inv = e.interval.inverse() if e.interval.lo * e.interval.hi > 0 else None
                else:
                    inv = None
                if inv is not None:
                    cands.append(((inv - RatInterval(target)).abs(), e.index, "alpha_inv"))
                else:
                    disk = e.as_disk()
                    try:
                        dist = (disk.inverse() - _point_disk(target)).abs_interval()
                        cands.append((dist, e.index, "alpha_inv"))
                    except ZeroDivisionError:
                        pass
        best = min(cands, key=lambda c: c[0].hi)
        rivals = [c for c in cands if c is not best and c[0].lo < best[0].hi]
        exact_ties = [c for c in rivals
                      if _conjugate_tie(encl, best, c)]
        undecided = [c for c in rivals if c not in exact_ties]
        if not undecided:
            if exact_ties:
                idx, side = _tie_pick(encl, [best] + exact_ties)
                return idx, side, True
            return best[1], best[2], False
        width /= 10 ** 8
    # unresolved within budget: genuine tie reported, deterministic pick
    idx, side = _tie_pick(encl, [best] + rivals)
    return idx, side, True


def _tie_pick(encl, cands) -> tuple[int, str]:
    """Deterministic representative among tied candidates: prefer real root
    enclosures, then the smaller root index, then the alpha side."""
    def key(c):
        e = next(e for e in encl if e.index == c[1])
        return (0 if e.is_real else 1, c[1], 0 if c[2] == "alpha" else 1)

    chosen = min(cands, key=key)
    return chosen[1], chosen[2]


def _point_disk(q: Fraction):
    from .isolation import ComplexDisk, CRat

    return ComplexDisk.point(CRat.of(q))


def _conjugate_tie(encl, a, b) -> bool:
    """True when candidates a, b are mirror conjugate enclosures with the
    same side (their distances to a real rational agree exactly)."""
    ea = next(e for e in encl if e.index == a[1])
    eb = next(e for e in encl if e.index == b[1])
    if ea.is_real or eb.is_real or a[2] != b[2]:
        return False
    ca, cb = ea.disk.center, eb.disk.center
    return ca.re == cb.re and ca.im == -cb.im


def lewis_mahler_check(f: BinForm, sol: Solution, c10: Fraction,
                       budget: int = 5) -> bool:
    """Certified check of the root-assignment inequality
    min(...) <= C10 |F(x, y)| / H**d for one solution."""
    poly = normalize_minimal_poly(f.dehomogenize())
    rhs = c10 * abs(sol.value) / Fraction(sol.height) ** f.degree
    width = Fraction(1, 10 ** 12)
    for _ in range(budget):
        best_hi = None
        for e in isolate_roots(poly, width):
            if sol.y != 0:
                di = e.distance_interval(Fraction(sol.x, sol.y))
                best_hi = di.hi if best_hi is None else min(best_hi, di.hi)
            if sol.x != 0:
                try:
                    disk = e.as_disk().inverse()
                    di = (disk - _point_disk(Fraction(sol.y, sol.x))).abs_interval()
                    best_hi = di.hi if best_hi is None else min(best_hi, di.hi)
                except ZeroDivisionError:
                    pass
        if best_hi is not None and best_hi <= rhs:
            return True
        width /= 10 ** 8
    return False


# -- the Theorem-1.3 style census -------------------------------------------------

def galois_status(f: BinForm, aut: EnhancedAut) -> tuple[str, str]:
    """("yes" | "no" | "unknown", reason).  Certified "yes" when the orbit
    of one root under Aut'|F| covers all roots (then every root is an
    integer-Moebius image of the first, so Q(alpha)/Q is Galois of degree d);
    certified both ways for cubics via the square-discriminant criterion."""
    d = f.degree
    part = root_orbit_partition(None, aut)
    if part.gamma == d:
        return "yes", "orbit of one root covers all roots"
    if d == 3:
        from math import isqrt

        disc = discriminant(f)
        root = isqrt(abs(disc))
        if disc > 0 and root * root == disc:
            return "yes", "cubic with square discriminant"
        return "no", "cubic discriminant is not a positive square"
    poly = normalize_minimal_poly(f.dehomogenize())
    encl = isolate_roots(poly)
    if all(e.is_real for e in encl):
        alpha1 = AlgNum(poly, 0)
        try:
            for idx in range(1, d):
                power_rep(alpha1, AlgNum(poly, idx))
            return "yes", "every conjugate has a verified power-basis representation"
        except NotInFieldError:
            return "no", "a conjugate admits no representation over the first root"
    return "unknown", "complex conjugates outside the orbit route"


def c5(f: BinForm, m: int, mu: Fraction,
       aut: EnhancedAut | None = None) -> tuple[Fraction, dict]:
    """Height threshold of the large-solution count: big enough that the
    Lewis-Mahler step forces quality mu, and at least both C16 thresholds
    (with C0 = 1) for the roots and the inverse roots."""
    d = f.degree
    mu = Fraction(mu)
    if not (Fraction(d, 2) + 1 < mu < d):
        raise HypothesisError(f"mu = {mu} outside ((d/2)+1, d)")
    c10 = lewis_mahler_c10(f)
    first = pow_up(c10 * m, 1 / (d - mu))
    while not compare_to_power(first, c10 * Fraction(m), Fraction(1, 1) / (d - mu)) > 0:
        first += Fraction(1, 10 ** 6)
    poly = normalize_minimal_poly(f.dehomogenize())
    alphas = [AlgNum(poly, i) for i in range(d)]
    recip = normalize_minimal_poly(poly.reciprocal())
    inv_alphas = [AlgNum(recip, i) for i in range(recip.degree)]
    gc_a = _pairwise_closed_constants(alphas, mu, Fraction(1))
    gc_b = _pairwise_closed_constants(inv_alphas, mu, Fraction(1))
    c16_a, prov_a = c16(alphas, mu, Fraction(1), gc_a)
    c16_b, prov_b = c16(inv_alphas, mu, Fraction(1), gc_b)
    value = tidy_up(max(first, c16_a, c16_b))
    prov = {"lewis-mahler": compact_str(first),
            "C16(alpha)": compact_str(c16_a), "C16(alpha_inv)": compact_str(c16_b),
            "branches(alpha)": prov_a, "branches(alpha_inv)": prov_b}
    return value, prov


def _pairwise_closed_constants(alphas: list[AlgNum], mu: Fraction,
                               c0: Fraction) -> list[GapConstants]:
    """Closed-form Archimedean gap constants for every ordered pair of
    distinct conjugates, using the index bound in place of the exact
    denominator scalar (no pair computation; all roundings upward).

    All conjugates share a minimal polynomial, so the heavy shared factors
    (C12, the large C12 power, the Mahler data) are computed once."""
    from .algnum import liouville_c6
    from .rounding import pow_half_integer_up

    d = alphas[0].degree
    # shared quantities across the conjugate family
    a0, b0 = alphas[0], alphas[1]
    c12v = c12_closed_form(a0, b0, theta_upper_bound(a0) * b0.lead)
    pow_c12_closing = pow_up(c12v, Fraction(d * d + 3 * d, 2) * mu + 2)
    shared_closing = pow_up(Fraction(2), Fraction(d * d, 4) * mu) \
        * pow_up(Fraction(d + 2, 2), Fraction(3 * d * d + 4 * d, 8) * mu) \
        * c0 * pow_c12_closing
    out = []
    for a in alphas:
        c13v = c13_formula(a, c12v)
        c6v = liouville_c6(a)
        max1_up = max(Fraction(1), a.abs_interval().hi)
        b2 = pow_half_integer_up(Fraction(2), d + 6) * Fraction(d + 2, 2) \
            * c0 * c12v ** 2 / c13v * max1_up ** d
        branches_a = [pow_up(c0, 1 / mu), pow_up(b2, 1 / mu),
                      pow_up(shared_closing / (c6v * c13v) * max1_up ** d,
                             1 / (2 * mu - d))]
        c_small = tidy_up(max(branches_a))
        c2_base = tidy_up(c0 * pow_half_integer_up(Fraction(2), d + 2)
                          * c12v * pow_half_integer_up(max1_up, d))
        for b in alphas:
            if a.index == b.index and a.minpoly == b.minpoly:
                continue
            c2 = tidy_up(c2_base * (2 + b.abs_interval().hi))
            out.append(GapConstants(
                "archimedean", c_small, c2, mu, c0, d,
                provenance=(("closed-form", "index-bound route"),)))
    return out


@dataclass(frozen=True)
class Census:
    problem: ThueProblem
    solutions: tuple[Solution, ...]
    assignments: tuple[tuple[int, str, bool], ...]
    orbits: tuple[tuple[int, ...], ...]   # indices into solutions
    gamma: int
    aut_order: int
    c5_value: Fraction
    mu: Fraction
    theorem_bound: int
    large_count: int
    galois: tuple[str, str]
    provenance: dict

    def report(self) -> dict:
        return {
            "form": str(self.problem.form),
            "m": self.problem.m,
            "box": self.problem.bound,
            "mu": compact_str(self.mu),
            "solutions": [(s.x, s.y, s.value) for s in self.solutions],
            "orbits": [list(o) for o in self.orbits],
            "gamma": self.gamma,
            "autOrder": self.aut_order,
            "C5": {"value": compact_str(self.c5_value), "rounding": "up"},
            "theoremBound": self.theorem_bound,
            "largeSolutions": self.large_count,
            "boundRespected": self.large_count <= self.theorem_bound,
            "galois": {"status": self.galois[0], "reason": self.galois[1]},
            "gyoryBound": 25 * self.problem.degree,
            "provenance": self.provenance,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["x", "y", "F", "H", "rootIndex", "side", "orbitId"])
        orbit_of = {}
        for oid, block in enumerate(self.orbits):
            for i in block:
                orbit_of[i] = oid
        for i, (s, a) in enumerate(zip(self.solutions, self.assignments)):
            w.writerow([s.x, s.y, s.value, s.height, a[0], a[1], orbit_of[i]])
        return buf.getvalue()


def census(problem: ThueProblem, mu: Fraction) -> Census:
    """Box enumeration + orbit grouping + the counting-theorem checks."""
    f = problem.form
    d = problem.degree
    mu = Fraction(mu)
    sols = enumerate_primitive(problem)
    aut = aut_prime(f)
    part = root_orbit_partition(None, aut)
    gamma = part.gamma
    if not 2 * gamma <= aut.order:
        raise AssertionError("gamma exceeds #Aut'/2")
    gal = galois_status(f, aut)
    c5v, prov = c5(f, problem.m, mu, aut)
    inner = count_bound(d, mu, 1)
    bound = aut.order * inner
    large = [s for s in sols if Fraction(s.height) >= c5v]
    if len(large) > bound:
        raise AssertionError("counting bound violated: defect or non-Galois input")
    orbits = _solution_orbits(f, aut, sols)
    assignments = tuple(assign_root(f, s) for s in sols)
    prov.update({"countBoundInner": inner})
    return Census(problem, tuple(sols), assignments, orbits, gamma, aut.order,
                  c5v, mu, bound, len(large), gal, prov)


def _solution_orbits(f: BinForm, aut: EnhancedAut,
                     sols: list[Solution]) -> tuple[tuple[int, ...], ...]:
    d = f.degree
    index_of = {(s.x, s.y): i for i, s in enumerate(sols)}
    parent = list(range(len(sols)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, s in enumerate(sols):
        for el in aut.unimodular():
            xp, yp = el.matrix.apply(s.x, s.y)
            img = Solution.normalized(xp, yp, f.value(xp, yp), d)
            if abs(img.value) != abs(s.value):
                raise AssertionError("unimodular image changed |F|: identity broken")
            j = index_of.get((img.x, img.y))
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    blocks: dict[int, list[int]] = {}
    for i in range(len(sols)):
        blocks.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(b)) for b in
                 sorted(blocks.values(), key=lambda b: b[0]))


# -- continued fractions --------------------------------------------------------

def convergents(alpha: AlgNum, count: int) -> list[ApproxPair]:
    """First ``count`` continued-fraction convergents of a real irrational,
    computed from certified enclosures (terms are certain: the floor is
    taken only when both endpoints agree)."""
    enc = alpha.enclosure()
    if not enc.is_real:
        raise ValueError("convergents need a real number")
    width = Fraction(1, 10 ** 40)
    for _ in range(12):
        terms = _cf_terms(alpha, count, width)
        if terms is not None:
            break
        width /= 10 ** 40
    else:
        raise ValueError("continued fraction did not stabilize")
    out = []
    h0, h1 = 1, terms[0]
    k0, k1 = 0, 1
    out.append(ApproxPair.reduced(h1, k1))
    for a in terms[1:]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        out.append(ApproxPair.reduced(h1, k1))
    return out[:count]


def _cf_terms(alpha: AlgNum, count: int, width: Fraction) -> list[int] | None:
    iv = alpha.enclosure(width).interval
    lo, hi = iv.lo, iv.hi
    terms = []
    for _ in range(count):
        flo, fhi = floor(lo), floor(hi)
        if flo != fhi:
            return None
        terms.append(flo)
        lo, hi = lo - flo, hi - flo
        if lo <= 0:
            return None
        lo, hi = 1 / hi, 1 / lo
    return terms
