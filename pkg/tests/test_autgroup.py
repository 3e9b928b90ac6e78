from itertools import product

import pytest

from gapkit.autgroup import (AutError, D12_DET3, D12_UNIMODULAR, aut_prime,
                             aut_rational_class, d12_family, element_order,
                             membership_scale, root_orbit_partition,
                             verify_729)
from gapkit.binforms import BinForm, IntMat2


def brute_force_aut(f: BinForm, entry_bound: int):
    """Oracle: all primitive integer matrices with entries in the box that
    satisfy the exact membership identity, paired with their sign data."""
    out = {}
    rng = range(-entry_bound, entry_bound + 1)
    for s, u, t, v in product(rng, rng, rng, rng):
        m = IntMat2(s, u, t, v)
        if m.det == 0 or m.content() != 1:
            continue
        ok = membership_scale(f, m)
        if ok is not None:
            out[m.entries()] = ok
    return out


def test_d12_family_coefficients():
    f = d12_family(3, 1)
    assert f.coeffs == (3, -18, 139, -530, 745, 2, -679, 2, 745, -530, 139, -18, 3)
    # (231*3+2)/5 = 139, (495*3+5)/2 = 745, (1122*3+29)/5 = 679
    f13 = d12_family(13, 1)
    assert f13.coeff_x(12) == 13
    with pytest.raises(ValueError):
        d12_family(1, 1)          # 1 != 3 mod 10
    with pytest.raises(ValueError):
        d12_family(6, 2)          # not coprime


def test_verify_729_identities(d12_form):
    rpt = verify_729(d12_form)
    assert rpt["ok"]
    assert len(rpt["unimodular"]) == 12 and len(rpt["det3"]) == 12
    assert all(abs(IntMat2(*e["matrix"]).det) == 1 for e in rpt["unimodular"])
    assert all(abs(e["det"]) == 3 for e in rpt["det3"])
    # second instance: 13 = 3*11 mod 10
    assert verify_729(d12_family(13, 11))["ok"]


def test_membership_scale_examples(d12_form):
    assert membership_scale(d12_form, IntMat2(1, 1, -1, 2)) == (729, 1)
    assert membership_scale(d12_form, IntMat2(0, 1, 1, 0)) == (1, 1)
    assert membership_scale(d12_form, IntMat2(5, 0, 0, 1)) is None


def test_aut_prime_cubic_matches_oracle():
    f = BinForm((1, 0, 0, -2))        # x^3 - 2y^3
    aut = aut_prime(f)
    assert aut.order == 2
    assert {e.matrix.entries() for e in aut.elements} == \
        {(1, 0, 0, 1), (-1, 0, 0, -1)}
    oracle = brute_force_aut(f, 10)
    assert set(oracle) == {e.matrix.entries() for e in aut.elements}
    assert aut.structure == "C_2" and aut.table1_class == "C2"


def test_aut_prime_galois_cubic_matches_oracle(cubic_form, cubic_aut):
    oracle = brute_force_aut(cubic_form, 6)
    assert set(oracle) == {e.matrix.entries() for e in cubic_aut.elements}
    assert cubic_aut.order == 6
    assert cubic_aut.structure == "C_6"
    assert aut_rational_class(cubic_aut) == "C6"


def test_aut_prime_d12(d12_aut):
    assert d12_aut.order == 24
    assert d12_aut.structure == "D_12"
    have = {e.matrix.entries() for e in d12_aut.elements}
    assert (0, 1, 1, 0) in have and (1, 1, -1, 2) in have
    assert sorted(set(abs(e.det) for e in d12_aut.elements)) == [1, 3]
    # the 24 listed solution maps are exactly the group elements
    listed = {m.entries() for m in D12_UNIMODULAR} | {m.entries() for m in D12_DET3}
    assert listed == have


def test_group_axioms(d12_aut, d12_form):
    elems = {e.matrix.entries() for e in d12_aut.elements}
    for a in d12_aut.elements:
        inv = a.matrix.adjugate().primitive()
        assert inv.entries() in elems or (-inv).entries() in elems
        for b in d12_aut.elements:
            prod = (a.matrix @ b.matrix).primitive()
            assert prod.entries() in elems
            assert membership_scale(d12_form, prod) is not None


def test_element_orders_and_bound(d12_aut):
    orders = {element_order(e.matrix) for e in d12_aut.elements}
    assert orders <= {1, 2, 3, 4, 6, 8, 12}
    assert max(orders) == 12
    assert d12_aut.order <= 24
    assert element_order(IntMat2(1, 1, -1, 2)) == 12


def test_determinant_law(d12_aut, d12_form):
    # |det M0|^d * c_d^2 == F(s, t)^2 for every element
    d = d12_form.degree
    cd = d12_form.lead_x
    for e in d12_aut.elements:
        m = e.matrix
        assert abs(m.det) ** d * cd ** 2 == d12_form.value(m.s, m.t) ** 2


def test_identity_and_negation_always_present():
    for coeffs in ((1, 0, 1, -1), (2, 1, -1, 0, 3)):
        f = BinForm(coeffs)
        from gapkit.algnum import is_irreducible

        if not is_irreducible(f.dehomogenize()) or f.degree < 3:
            continue
        aut = aut_prime(f)
        have = {e.matrix.entries() for e in aut.elements}
        assert (1, 0, 0, 1) in have and (-1, 0, 0, -1) in have


def test_orbit_partition_examples(d12_aut, cubic_aut):
    part = root_orbit_partition(None, d12_aut)
    assert part.blocks == (tuple(range(12)),)
    assert part.gamma == 12
    part3 = root_orbit_partition(None, cubic_aut)
    assert part3.gamma == 3
    # x^3 - 2y^3: only +-I, which act trivially as Moebius maps
    aut2 = aut_prime(BinForm((1, 0, 0, -2)))
    part2 = root_orbit_partition(None, aut2)
    assert part2.blocks == ((0,), (1,), (2,))
    assert part2.gamma == 1


def test_orbit_partition_is_equivalence(d12_aut):
    part = root_orbit_partition(None, d12_aut)
    seen = sorted(i for block in part.blocks for i in block)
    assert seen == list(range(12))          # partition covers every root once
    for block in part.blocks:
        for i in block:
            assert part.gamma_per_root[i] == len(block)


def test_gamma_at_most_half_order(d12_aut, cubic_aut):
    for aut in (d12_aut, cubic_aut):
        part = root_orbit_partition(None, aut)
        assert 2 * part.gamma <= aut.order


def test_aut_rejects_reducible():
    with pytest.raises(AutError):
        aut_prime(BinForm((1, 0, 0, 0)))       # x^3: reducible
    with pytest.raises(AutError):
        aut_prime(BinForm((1, 3, 3, 1)))       # (x + y)^3
