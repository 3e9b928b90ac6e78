import random
from fractions import Fraction

import pytest

from gapkit.intpoly import IntPoly, poly_gcd_q
from gapkit.isolation import (IsolationError, house, isolate_roots,
                              mahler_measure, root_separation_lower_bound,
                              sturm_chain, count_real_roots)
from gapkit.rounding import sqrt_down, sqrt_up


def bisection_oracle(p: IntPoly, lo: Fraction, hi: Fraction, steps=80):
    """Plain sign-bisection, independent of the Sturm machinery."""
    flo = p.eval_at(lo)
    for _ in range(steps):
        mid = (lo + hi) / 2
        fm = p.eval_at(mid)
        if fm == 0:
            return mid
        if (flo > 0) != (fm > 0):
            hi = mid
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2


def test_sqrt2_isolation():
    p = IntPoly((-2, 0, 1))
    encl = isolate_roots(p, Fraction(1, 10 ** 20))
    assert len(encl) == 2 and all(e.is_real for e in encl)
    oracle = bisection_oracle(p, Fraction(1), Fraction(2))
    assert oracle in encl[1].interval
    assert -oracle in encl[0].interval


def test_cubic_three_real_roots():
    p = IntPoly((-1, -3, 0, 1))
    encl = isolate_roots(p, Fraction(1, 10 ** 12))
    assert [e.is_real for e in encl] == [True, True, True]
    # sign-bisection oracle values, accurate to ~2^-80; the enclosures may be
    # (much) tighter when other tests already refined the shared cache
    targets = [bisection_oracle(p, Fraction(-2), Fraction(-1)),
               bisection_oracle(p, Fraction(-1), Fraction(0)),
               bisection_oracle(p, Fraction(1), Fraction(2))]
    for e, t in zip(encl, targets):
        assert abs(t - e.interval.mid()) < Fraction(1, 2 ** 70)
    approx = [round(float(e.interval.mid()), 3) for e in encl]
    assert approx == [-1.532, -0.347, 1.879]


def test_complex_pair():
    encl = isolate_roots(IntPoly((1, 0, 1)))
    assert all(not e.is_real for e in encl)
    assert encl[0].disk.center.im < 0 < encl[1].disk.center.im
    one = encl[1].abs_interval()
    assert one.lo <= 1 <= one.hi


def test_non_squarefree_reported():
    p = IntPoly((-2, 0, 1))
    with pytest.raises(IsolationError):
        isolate_roots(p * p)


def test_refinement_never_loses_root():
    p = IntPoly((-2, 0, 0, 1))
    coarse = isolate_roots(p, Fraction(1, 100))
    fine = [e.refine(Fraction(1, 10 ** 40)) for e in coarse]
    for c, f in zip(coarse, fine):
        assert f.width() <= Fraction(1, 10 ** 40)
        if c.is_real:
            assert c.interval.intersects(f.interval)
        else:
            assert not f.disk.disjoint_from(c.disk)


def test_sturm_counts():
    p = IntPoly((-1, -3, 0, 1))
    chain = sturm_chain(p)
    assert count_real_roots(p, Fraction(-10), Fraction(10), chain) == 3
    assert count_real_roots(p, Fraction(0), Fraction(10), chain) == 1


def test_mahler_measure_examples():
    m = mahler_measure(IntPoly((-2, 0, 1)), Fraction(1, 10 ** 20))
    assert m.lo <= 2 <= m.hi and m.width <= Fraction(1, 10 ** 20)
    m3 = mahler_measure(IntPoly((-2, 0, 0, 1)))
    assert m3.lo <= 2 <= m3.hi
    m5 = mahler_measure(IntPoly((5,)))
    assert m5.lo == m5.hi == 5
    with pytest.raises(ValueError):
        mahler_measure(IntPoly(()))


def test_mahler_contains_refined_product_and_landau():
    rng = random.Random(31)
    for _ in range(25):
        p = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 5))])
        if p.is_zero or p.degree < 1:
            continue
        m = mahler_measure(p, Fraction(1, 10 ** 10))
        assert m.lo >= 1  # Landau for nonzero integer polynomials
        # refined-root oracle: recompute the product from finer enclosures
        from gapkit.intpoly import is_squarefree, squarefree_part
        from gapkit.rounding import RatInterval

        q = p if is_squarefree(p) else None
        if q is None:
            continue
        prod = RatInterval(abs(p.lead))
        for e in isolate_roots(q, Fraction(1, 10 ** 30)):
            prod = prod * e.abs_interval().max_with(1)
        assert m.lo <= prod.hi and prod.lo <= m.hi


def test_house_examples():
    h = house(IntPoly((-2, 0, 1)))
    assert h.lo <= sqrt_up(Fraction(2)) and sqrt_down(Fraction(2)) <= h.hi
    h3 = house(IntPoly((-2, 0, 0, 1)))
    target = Fraction(2) ** Fraction(1)  # 2^(1/3): compare via cubes
    assert h3.lo ** 3 <= 2 <= h3.hi ** 3
    h1 = house(IntPoly((-5, 1)))
    assert 5 in __import__("gapkit.rounding", fromlist=["RatInterval"]).RatInterval(h1.lo, h1.hi)
    with pytest.raises(ValueError):
        house(IntPoly((7,)))


def test_separation_bound_examples():
    b = root_separation_lower_bound(IntPoly((-2, 0, 1)), IntPoly((0, 1)))
    # formula: 2^-1 * 3^(-5/2) * 2^-4, rounded down; also below sqrt(2)
    assert 0 < b
    assert b ** 2 <= Fraction(1, 4) * Fraction(1, 3 ** 5) * Fraction(1, 2 ** 8)
    assert b <= sqrt_up(Fraction(2))
    b2 = root_separation_lower_bound(IntPoly((0, 1)), IntPoly((1, 1)))
    assert b2 == Fraction(1, 2) <= 1  # separation of 0 and -1 is 1


def test_separation_bound_below_true_separation():
    rng = random.Random(37)
    done = 0
    while done < 100:
        p = IntPoly([rng.randint(-4, 4) for _ in range(rng.randint(2, 4))])
        q = IntPoly([rng.randint(-4, 4) for _ in range(rng.randint(2, p.degree + 1 if p.degree >= 1 else 2))])
        if p.degree < 1 or q.degree < 0 or q.is_zero or p.degree < q.degree:
            continue
        if poly_gcd_q(p, q).degree != 0:
            continue
        from gapkit.intpoly import is_squarefree, squarefree_part

        bound = root_separation_lower_bound(p, q)
        ps = p if is_squarefree(p) else squarefree_part(p)
        qs = q if is_squarefree(q) else squarefree_part(q)
        if qs.degree < 1:
            continue
        ep = isolate_roots(ps, Fraction(1, 10 ** 15))
        eq = isolate_roots(qs, Fraction(1, 10 ** 15))
        min_hi = min(a.distance_interval(b).hi for a in ep for b in eq)
        assert bound <= min_hi, (p, q)
        done += 1
