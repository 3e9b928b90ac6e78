from fractions import Fraction
from math import gcd

import pytest

from gapkit.binforms import BinForm
from gapkit.gap import arch_quality, interval_vs_power
from gapkit.intpoly import IntPoly
from gapkit.thue import (Solution, ThueError, ThueProblem, assign_root,
                         census, convergents, enumerate_primitive,
                         galois_status, lewis_mahler_c10, lewis_mahler_check)
from gapkit.rounding import sqrt_up

CUBE_FORM = BinForm((1, 0, 0, -2))   # x^3 - 2y^3


def naive_enumeration(f: BinForm, m: int, bound: int):
    out = set()
    d = f.degree
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if (x, y) == (0, 0) or gcd(abs(x), abs(y)) != 1:
                continue
            v = f.value(x, y)
            if 0 < abs(v) <= m:
                s = Solution.normalized(x, y, v, d)
                out.add((s.x, s.y))
    return out


def test_enumerate_examples():
    sols = enumerate_primitive(ThueProblem(CUBE_FORM, 1, 100))
    assert [(s.x, s.y) for s in sols] == [(1, 0), (1, 1)]
    with pytest.raises(ThueError):
        ThueProblem(CUBE_FORM, 0, 100)             # m = 0: strict inequality
    with pytest.raises(ThueError):
        ThueProblem(BinForm((1, 0, 0, 1)), 1, 10)  # x^3 + y^3 reducible


def test_enumeration_complete_vs_naive(cubic_form):
    for f, m, bound in ((CUBE_FORM, 1, 60), (cubic_form, 1, 60),
                        (cubic_form, 5, 40), (CUBE_FORM, 6, 50)):
        sols = enumerate_primitive(ThueProblem(f, m, bound))
        assert {(s.x, s.y) for s in sols} == naive_enumeration(f, m, bound)


def test_enumeration_complete_box500(cubic_form):
    sols = enumerate_primitive(ThueProblem(cubic_form, 1, 500))
    assert {(s.x, s.y) for s in sols} == naive_enumeration(cubic_form, 1, 500)


def test_sign_normalization_idempotent():
    s = Solution.normalized(-2, 1, CUBE_FORM.value(-2, 1), 3)
    assert (s.x, s.y) == (2, -1)
    s2 = Solution.normalized(s.x, s.y, s.value, 3)
    assert (s2.x, s2.y, s2.value) == (s.x, s.y, s.value)
    s3 = Solution.normalized(0, -1, CUBE_FORM.value(0, -1), 3)
    assert (s3.x, s3.y) == (0, 1)


def test_lewis_mahler_c10():
    c10 = lewis_mahler_c10(CUBE_FORM)
    # 4 sqrt(3) * M / |D|^(1/2) = 4/sqrt(3) ~ 2.3094, rounded up
    target = 4 / sqrt_up(Fraction(3))
    assert c10 >= target
    assert c10 <= Fraction(231, 100)
    with pytest.raises(ThueError):
        lewis_mahler_c10(BinForm((1, 2, 0)))   # c_0 = 0


def test_lewis_mahler_inequality_on_solutions(cubic_form):
    for f in (CUBE_FORM, cubic_form):
        c10 = lewis_mahler_c10(f)
        for s in enumerate_primitive(ThueProblem(f, 2, 50)):
            assert lewis_mahler_check(f, s, c10), (f, s)


def test_assign_root_examples():
    sols = enumerate_primitive(ThueProblem(CUBE_FORM, 1, 100))
    by_pair = {(s.x, s.y): s for s in sols}
    # (1, 1): |alpha^{-1} - 1| = 0.2063 < |alpha - 1| = 0.2599: inverse side
    idx, side, tie = assign_root(CUBE_FORM, by_pair[(1, 1)])
    assert (idx, side, tie) == (2, "alpha_inv", False)
    # (1, 0): all inverse roots tie at modulus 2^(-1/3); real root reported
    idx, side, tie = assign_root(CUBE_FORM, by_pair[(1, 0)])
    assert side == "alpha_inv" and tie and idx == 2


def test_galois_status(cubic_form, d12_form, cubic_aut, d12_aut):
    assert galois_status(cubic_form, cubic_aut)[0] == "yes"
    assert galois_status(d12_form, d12_aut)[0] == "yes"
    from gapkit.autgroup import aut_prime

    f = CUBE_FORM
    assert galois_status(f, aut_prime(f))[0] == "no"


def test_census_cubic(cubic_form):
    result = census(ThueProblem(cubic_form, 1, 100), Fraction(11, 4))
    rpt = result.report()
    assert rpt["gamma"] == 3 and rpt["autOrder"] == 6
    assert rpt["galois"]["status"] == "yes"
    assert rpt["theoremBound"] == 6 * 64
    assert rpt["largeSolutions"] == 0 and rpt["boundRespected"]
    assert rpt["gyoryBound"] == 75
    # two orbits of three solutions each fill the solution list
    assert sorted(map(len, rpt["orbits"])) == [3, 3]
    csv_text = result.to_csv()
    assert csv_text.splitlines()[0] == "x,y,F,H,rootIndex,side,orbitId"
    assert len(csv_text.splitlines()) == 7


def test_census_orbit_closure(cubic_form, cubic_aut):
    sols = enumerate_primitive(ThueProblem(cubic_form, 1, 100))
    d = cubic_form.degree
    for s in sols:
        for el in cubic_aut.unimodular():
            xp, yp = el.matrix.apply(s.x, s.y)
            img = Solution.normalized(xp, yp, cubic_form.value(xp, yp), d)
            assert abs(img.value) == abs(s.value)
    # det-3-style scaling check is covered by verify_729 on the D12 family


def test_census_d12(d12_form):
    result = census(ThueProblem(d12_form, 3, 40), Fraction(38, 4))
    rpt = result.report()
    assert rpt["gamma"] == 12 and rpt["autOrder"] == 24
    assert rpt["boundRespected"] and rpt["largeSolutions"] == 0
    assert rpt["galois"]["status"] == "yes"
    # the box solutions form one orbit: images of (1, 0)
    assert len(rpt["orbits"]) == 1
    assert {(s.x, s.y) for s in result.solutions} == {(1, 0), (0, 1), (1, 1)}


def test_convergents_cbrt2(cbrt2):
    cv = convergents(cbrt2, 8)
    assert [(p.x, p.y) for p in cv[:4]] == [(1, 1), (4, 3), (5, 4), (29, 23)]
    for p in cv:
        q = arch_quality(cbrt2, p)
        assert interval_vs_power(q, Fraction(p.y), Fraction(-2)) == -1


def test_convergents_need_real():
    from gapkit.algnum import AlgNum

    complex_alg = AlgNum.make(IntPoly((1, 0, 1)), 0)
    with pytest.raises(ValueError):
        convergents(complex_alg, 5)
