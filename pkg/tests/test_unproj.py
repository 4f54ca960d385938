"""Hom modules, phi selection, and the unprojection ideal."""
from __future__ import annotations

import pytest

from kustinmiller import FreeModuleMap, Ideal, ideal_equal, make_ring, syzygies
from kustinmiller.unproj import (HypothesisFailed, hom_module, select_phi,
                                 transport_lifts, unprojection_data_from_lifts,
                                 unprojection_ideal)

PHI_IMAGES = ["x_1*x_3", "x_1*x_4", "x_2*x_3", "x_2*x_4"]


def _hom_pairing_is_zero(I, J, v):
    """Oracle: v pairs to zero mod I with every syzygy of J's gens over R/I."""
    ring = I.ring
    row = FreeModuleMap.from_rows(ring, [list(J.gens) + list(I.gens)], [0])
    Z = syzygies(row)
    t = len(J.gens)
    for c in range(Z.cols):
        acc = ring.zero
        for j in range(t):
            acc = acc + Z.entries[j][c] * v[j]
        if not I.contains(acc):
            return False
    return True


def test_hom_module_inclusion_first(ideal_i, ideal_j):
    homs = hom_module(ideal_j, ideal_i)
    assert homs[0] == tuple(ideal_j.gens)


def test_hom_module_segre_phi(ideal_i, ideal_j):
    homs = hom_module(ideal_j, ideal_i)
    images = [[str(e) for e in v] for v in homs]
    assert PHI_IMAGES in images


def test_hom_module_vectors_satisfy_syzygy_pairing(ideal_i, ideal_j):
    for v in hom_module(ideal_j, ideal_i):
        assert _hom_pairing_is_zero(ideal_i, ideal_j, v)


def test_hom_module_principal_free_case():
    # J = (x), I = 0: J mod I is free, and Hom is generated by the unit image
    R = make_ring(["x", "y"], [1, 1])
    I = Ideal(R, [])
    J = Ideal(R, [R.var("x")])
    homs = hom_module(J, I)
    assert homs[0] == (R.var("x"),)
    assert (R.one,) in homs


def test_hom_module_j_equals_i(ideal_i):
    # Hom of the pair (I, I) degenerates: everything is an R/I-multiple of
    # the inclusion, which is itself zero mod I
    homs = hom_module(ideal_i, ideal_i)
    assert homs[0] == tuple(ideal_i.gens)
    for v in homs[1:]:
        assert all(ideal_i.contains(e) for e in v)


def test_hom_module_octahedron_link(octahedron):
    R = make_ring(["z"] + [f"x_{i}" for i in range(1, 7)], [1] * 7)
    P = R.parse
    I = Ideal(R, [P("x_1*x_2"), P("x_3*x_4"), P("x_5*x_6")])
    J = Ideal(R, [R.var("z"), R.var("x_2"), R.var("x_4"), R.var("x_6")])
    homs = hom_module(J, I)
    for v in homs:
        assert _hom_pairing_is_zero(I, J, v)
    # a hom of degree 2 exists whose image on z is the complementary facet
    data = select_phi(homs, I, J, 2, t_name="x_7")
    assert not data.lifts[0].is_zero()
    assert str(data.lifts[0]) == "x_1*x_3*x_5"


def test_select_phi_segre(segre_data):
    assert [str(l) for l in segre_data.lifts] == PHI_IMAGES
    assert segre_data.deg_t == 1


def test_select_phi_wrong_degree(ideal_i, ideal_j):
    homs = hom_module(ideal_j, ideal_i)
    with pytest.raises(HypothesisFailed):
        select_phi(homs, ideal_i, ideal_j, 5)


def test_select_phi_rejects_nonpositive_degree(ideal_i, ideal_j):
    homs = hom_module(ideal_j, ideal_i)
    with pytest.raises(HypothesisFailed):
        select_phi(homs, ideal_i, ideal_j, 0)


def test_unprojection_ideal_golden(segre_data):
    U = unprojection_ideal(segre_data)
    tails = [str(g) for g in U.gens[-4:]]
    assert tails == ["-x_1*x_3 + z_1*T", "-x_1*x_4 + z_2*T",
                     "-x_2*x_3 + z_3*T", "-x_2*x_4 + z_4*T"]


def test_unprojection_relations_homogeneous(segre_data):
    U = unprojection_ideal(segre_data)
    for g in U.gens:
        assert g.is_homogeneous()
    for u, l in zip(segre_data.gens, segre_data.lifts):
        if not l.is_zero():
            assert l.homogeneous_degree() == u.homogeneous_degree() + segre_data.deg_t


def test_unprojection_ideal_is_segre_minor_ideal(segre_data, segre_ring):
    """The unprojection ideal equals the 2x2 minors of a generic 3x3 matrix;
    the minors are expanded by hand right here."""
    U = unprojection_ideal(segre_data)
    big = U.ring
    P = big.parse
    grid = [["T", "x_1", "x_2"],
            ["x_3", "z_1", "z_3"],
            ["x_4", "z_2", "z_4"]]
    minors = []
    for r1, r2 in ((0, 1), (0, 2), (1, 2)):
        for c1, c2 in ((0, 1), (0, 2), (1, 2)):
            minors.append(P(grid[r1][c1]) * P(grid[r2][c2])
                          - P(grid[r1][c2]) * P(grid[r2][c1]))
    assert ideal_equal(U, Ideal(big, minors))


def test_user_supplied_lifts_roundtrip(ideal_i, ideal_j, segre_data):
    data = unprojection_data_from_lifts(ideal_i, ideal_j, segre_data.lifts, 1)
    assert data.lifts == segre_data.lifts


def test_user_supplied_lifts_validated(ideal_i, ideal_j, segre_ring):
    bogus = [segre_ring.parse(s) for s in
             ("x_1*x_3", "x_1*x_4", "x_2*x_3", "x_1*x_2")]
    with pytest.raises(HypothesisFailed):
        unprojection_data_from_lifts(ideal_i, ideal_j, bogus, 1)


def test_transport_lifts_reorders(ideal_i, ideal_j, segre_data, segre_ring):
    perm = [2, 0, 3, 1]
    J_perm = Ideal(segre_ring, [ideal_j.gens[k] for k in perm])
    lifts_perm = [segre_data.lifts[k] for k in perm]
    back = transport_lifts(ideal_i, J_perm, lifts_perm, ideal_j.gens)
    assert back == segre_data.lifts


def test_containment_checked(segre_ring):
    # I = (x_1^2) is not contained in J = (z_1)
    I = Ideal(segre_ring, [segre_ring.parse("x_1^2")])
    J = Ideal(segre_ring, [segre_ring.parse("z_1")])
    with pytest.raises(HypothesisFailed):
        hom_module(J, I)
