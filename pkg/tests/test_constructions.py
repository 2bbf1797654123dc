"""Geometric inputs, dual arcs, prime-power families, regularity, wedges."""

from __future__ import annotations

import itertools
import math

import pytest

from verolab import (
    OddQForHyperoval,
    SubspaceFamily,
    WedgeSpace,
    conic,
    derived_family,
    desarguesian_spread,
    dual_arc_ad,
    dual_arc_ik,
    dual_family,
    elliptic_ovoid,
    enumerate_ik,
    gda_profile,
    hyperoval,
    is_r_independent,
    is_regular,
    is_strongly_regular,
    parse_field,
    parse_poly,
    rational_normal_curve,
    span,
    subspace_intersect,
    subspace_le,
    subspace_sum,
)
from verolab.constructions import homog_divides, partial_spread_products
from verolab.linalg import enumerate_vectors
from verolab.monomials import num_monomials
from verolab.polyalgebra import HomogPoly, component_space, product_space

F2 = parse_field("F2")
F3 = parse_field("F3")
F4 = parse_field("F4")


def no_three_collinear(points, ambient, f):
    for trio in itertools.combinations(points, 3):
        rows = [p.basis.row(0) for p in trio]
        if span(rows, ambient, f).dim != 3:
            return False
    return True


def test_spread_q2_k2_covers_and_is_disjoint():
    fam = desarguesian_spread(F2, 2)
    assert len(fam) == 5 and all(m.dim == 2 for m in fam)
    assert is_r_independent(fam, 2)[0]
    seen = set()
    for m in fam:
        seen.update(tuple(s.v for s in v) for v in enumerate_vectors(m))
    assert len(seen) == 16  # all of K^4, zero included once


def test_spread_q3_k1_is_projective_line():
    fam = desarguesian_spread(F3, 1)
    assert len(fam) == 4 and all(m.dim == 1 for m in fam)
    assert is_r_independent(fam, 2)[0]


def test_spread_q4_uses_extension_tower():
    fam = desarguesian_spread(F4, 2)
    assert len(fam) == 17 and all(m.dim == 2 for m in fam)
    assert is_r_independent(fam, 2)[0]
    seen = set()
    for m in fam:
        seen.update(tuple(s.v for s in v) for v in enumerate_vectors(m))
    assert len(seen) == 4 ** 4


def test_conic_q3():
    pts = conic(F3)
    assert len(pts) == 4
    assert no_three_collinear(pts, 3, F3)


def test_hyperoval_q4_and_parity_guard():
    pts = hyperoval(F4)
    assert len(pts) == 6
    assert no_three_collinear(pts, 3, F4)
    with pytest.raises(OddQForHyperoval):
        hyperoval(F3)


@pytest.mark.parametrize("q", [2, 3])
def test_elliptic_ovoid(q):
    f = parse_field(f"F{q}")
    pts = elliptic_ovoid(f)
    assert len(pts) == q * q + 1
    assert no_three_collinear(pts, 4, f)


@pytest.mark.parametrize("q,d", [(2, 2), (3, 2), (3, 3), (5, 3)])
def test_rnc_spans_when_q_at_least_d(q, d):
    f = parse_field(f"F{q}")
    pts = rational_normal_curve(f, d)
    assert len(pts) == q + 1
    total = pts[0]
    for p in pts[1:]:
        total = subspace_sum(total, p)
    assert total.dim == d + 1


def test_dual_arc_ad_profile_322():
    fam = dual_arc_ad(3, 2, F2)
    assert len(fam) == 7 and all(m.dim == 3 for m in fam)
    rep = gda_profile(fam, 3, expected=(6, 3, 1, 0))
    assert rep.is_gda
    assert rep.level(2) == {1: 21} and rep.level(3) == {0: 35}


def test_gda_profile_census_totals():
    fam = dual_arc_ad(3, 2, F2)
    rep = gda_profile(fam, 4)
    for j in range(1, 5):
        assert sum(rep.level(j).values()) == math.comb(7, j)


def test_dual_arc_ad_dims_332():
    fam = dual_arc_ad(3, 3, F2)
    rep = gda_profile(fam, 4)
    assert rep.constant_profile() == [6, 3, 1, 0]
    assert fam.ambient_dim == 10


def test_dual_arc_intersections_are_product_spaces():
    from verolab.linalg import projective_points
    from verolab.polyalgebra import poly_mul

    fam = dual_arc_ad(3, 2, F3)
    pts = projective_points(F3, 3)
    for i, j in itertools.combinations(range(5), 2):
        inter = subspace_intersect(fam[i], fam[j])
        prod = poly_mul(HomogPoly.linear_form(pts[i]), HomogPoly.linear_form(pts[j]))
        assert inter == span([prod.coeffs], num_monomials(3, 2), F3)


def test_ik_degree_one_is_all_points():
    for q in (2, 3):
        f = parse_field(f"F{q}")
        assert len(enumerate_ik(2, 1, f)) == q + 1


def test_ik_n2_k2_q2_explicit():
    got = {frozenset((i, c.v) for i, c in enumerate(g.coeffs)) for g in enumerate_ik(2, 2, F2)}
    expected_polys = ["1*x1^2", "1*x2^2", "1*x1^2 + 1*x2^2", "1*x1^2 + 1*x1^1*x2^1 + 1*x2^2"]
    want = {
        frozenset((i, c.v) for i, c in enumerate(parse_poly(t, F2, 2, 2).coeffs))
        for t in expected_polys
    }
    assert got == want


def test_ik_against_brute_force_factorization():
    # oracle: a binary quadratic is a prime power iff it has at most one
    # distinct linear divisor (irreducible, or the square of one form)
    from verolab.linalg import projective_points

    f = F3
    n, k = 2, 2
    lin = [HomogPoly(f, n, 1, p) for p in projective_points(f, 2)]
    got = {g for g in enumerate_ik(n, k, f)}
    for cand in [HomogPoly(f, n, 2, p) for p in projective_points(f, 3)]:
        divisors = {tuple(x.v for x in h.coeffs) for h in lin if homog_divides(cand, h)}
        if not divisors:
            in_ik = True  # irreducible
        else:
            in_ik = len(divisors) == 1  # a square of one linear form
        assert (cand in got) == in_ik


def test_dual_arc_ik_2422():
    fam = dual_arc_ik(2, 4, 2, F2)
    assert len(fam) == 4
    rep = gda_profile(fam, 3)
    assert rep.constant_profile() == [3, 1, 0]
    assert rep.is_gda


def test_gda_profile_single_member():
    fam = SubspaceFamily([dual_arc_ad(3, 2, F2)[0]])
    rep = gda_profile(fam, 1)
    assert rep.is_gda and rep.constant_profile() == [3]


def test_wedge_family_m5():
    from verolab import wedge_family

    fam = wedge_family(F2, 5)
    assert len(fam) == 31
    assert fam.ambient_dim == 10
    assert all(m.dim == 4 for m in fam)
    for i, j in itertools.combinations(range(6), 2):
        assert subspace_intersect(fam[i], fam[j]).dim == 1


def test_wedge_pair_point_lies_in_q_plus_1_members():
    from verolab import wedge_family

    fam = wedge_family(F2, 5)
    inter = subspace_intersect(fam[0], fam[1])
    holders = sum(1 for m in fam if subspace_le(inter, m))
    assert holders == 3


def test_wedge_space_alternation():
    w = WedgeSpace(4)
    u = tuple(F3.one() if i == 1 else F3.zero() for i in range(4))
    v = tuple(F3.one() if i == 2 else F3.zero() for i in range(4))
    uv = w.wedge(u, v)
    vu = w.wedge(v, u)
    assert [s.v for s in uv] == [(-x).v for x in vu]
    assert all(s.v == 0 for s in w.wedge(u, u))


@pytest.mark.parametrize(
    "n,d,expect",
    [(3, 2, True), (3, 3, True), (3, 4, False), (2, 2, False), (2, 3, False)],
)
def test_regularity_boundary_q2(n, d, expect):
    fam = dual_arc_ad(n, d, F2)
    ok, wit = is_regular(fam)
    assert ok is expect
    if not expect:
        assert wit is not None


def test_regularity_q3_small_d():
    assert is_regular(dual_arc_ad(3, 2, F3))[0]


def test_strong_regularity_fails_with_known_witness():
    fam = dual_arc_ad(3, 2, F2)
    ok, wit, mode = is_strongly_regular(fam)
    assert not ok and mode == "exhaustive" and wit is not None
    # the documented counterexample, checked directly: U = A_1(x1+x2)
    # inside <A_1 x1, A_1 x2> but spanned meets have dimension 2 < 3
    a1 = component_space(F2, 3, 1)
    x1 = span([parse_poly("1*x1", F2, 3, 1).coeffs], 3, F2)
    x2 = span([parse_poly("1*x2", F2, 3, 1).coeffs], 3, F2)
    x12 = span([parse_poly("1*x1 + 1*x2", F2, 3, 1).coeffs], 3, F2)
    d1 = product_space(a1, 1, x1, 1, 3)
    d2 = product_space(a1, 1, x2, 1, 3)
    u = product_space(a1, 1, x12, 1, 3)
    lhs = subspace_intersect(u, subspace_sum(d1, d2))
    rhs = subspace_sum(subspace_intersect(u, d1), subspace_intersect(u, d2))
    assert lhs.dim == 3 and rhs.dim == 2 and lhs != rhs


def test_strong_regularity_sampled_mode_finds_counterexample():
    fam = dual_arc_ad(3, 2, F3)
    ok, wit, mode = is_strongly_regular(fam, sample_budget=4000, seed=3)
    assert not ok and mode.startswith("sampled(")


def test_partial_spread_products_dims():
    for q in (2, 3):
        f = parse_field(f"F{q}")
        fam = partial_spread_products(f, 2)
        rep = gda_profile(fam, 3)
        assert rep.constant_profile() == [7, 4, 1]


def test_dual_family_involution_and_spread_duals():
    fam = partial_spread_products(F2, 2)
    duals = dual_family(fam)
    assert all(m.dim == 3 for m in duals)  # 10 - 7 = C(2+1, 2)
    back = dual_family(duals)
    assert list(back) == list(fam)
    ok, _ = is_r_independent(duals, 3)
    assert ok


def test_derived_family_profile():
    fam = dual_arc_ad(3, 3, F2)
    der = derived_family(fam, 0)
    assert len(der) == 6
    rep = gda_profile(der, 3, expected=(3, 1))
    assert rep.is_gda
    assert rep.constant_profile() == [3, 1, 0]
