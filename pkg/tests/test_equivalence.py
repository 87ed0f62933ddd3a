from fractions import Fraction
from itertools import product

import pytest

from enrichcat import equivalence as eq
from enrichcat.enriched import identity_functor, identity_transform, validate_vmon_functor, validate_vtransform
from enrichcat.fixtures import (_pointed_functor, fixture_set, inclusion, projection, pt2, sign_transform,
                                svec_cat, twisted_identity, unit_cat)
from enrichcat.modtens import identity_cell1, identity_cell2, validate_modtens_1cell, validate_modtens_2cell


@pytest.fixture(scope="module")
def fs():
    return fixture_set()


def test_P0_svec_half_braiding_is_beta():
    M = eq.P0(svec_cat())
    assert M.F_obj == (0, 1)
    for a, v in product(M.V.objects, repeat=2):
        assert M.e(a, v).coeffs == M.V.braid(a, v).coeffs


def test_P0_pt2():
    M = eq.P0(pt2())
    assert M.F(M.V.unit) == 0
    assert all(M.e(a, M.V.unit) == M.A.id(a) for a in M.A.objects)


def test_P1_keeps_the_laxitor(fs):
    for F in fs["vmonfunctor"]:
        c = eq.P1(F)
        for (a, b), m in c.rho.items():
            assert m.coeffs == F.laxitor[(a, b)]


def test_P1_inclusion_r_is_identity():
    P = pt2()
    c = eq.P1(inclusion(unit_cat(P.base), P))
    one = P.base.unit
    assert c.r[one] == c.target.A.id(0)


def test_unit_cells():
    P = pt2()
    I = identity_functor(P)
    assert eq.P1(I).same_data(identity_cell1(eq.P0(P)))
    assert eq.Q1(identity_cell1(eq.P0(P))).same_data(I)
    assert eq.Q2(identity_cell2(eq.P1(I))).same_data(identity_transform(I))


def test_outputs_validate(fs):
    for F in fs["vmonfunctor"]:
        assert validate_modtens_1cell(eq.P1(F)).ok, F.name
        assert validate_vmon_functor(eq.Q1(eq.P1(F))).ok, F.name
    for t in fs["vtransform"]:
        assert validate_modtens_2cell(eq.P2(t)).ok, t.name
        assert validate_vtransform(eq.Q2(eq.P2(t))).ok, t.name


def test_roundtrip_all_fixtures(fs):
    r = eq.check_roundtrip(fs["vmonfunctor"], fs["vtransform"])
    assert r.ok, str(r)
    assert r.checks["roundtrip.Q1P1"] == len(fs["vmonfunctor"])
    assert r.checks["roundtrip.Q2P2"] == len(fs["vtransform"])


def test_roundtrip_detects_a_changed_component():
    P = pt2()
    F = twisted_identity(P)
    c = eq.P1(F)
    c.rho[(1, 1)] = -1 * c.rho[(1, 1)]
    back = eq.Q1(c)
    assert not back.same_data(F)


def test_2functoriality(fs):
    r = eq.check_2functoriality(fs["vmonfunctor"], fs["vtransform"])
    assert r.ok, str(r)
    for k in ("unit_1cell", "unit_2cell", "compose_1cells", "vertical", "horizontal"):
        assert r.checks[f"2functor.{k}"] > 0, k


@pytest.mark.parametrize("strong", [True, False])
def test_strength_flag_survives(strong):
    P = pt2()
    F = _pointed_functor(P, P, (0, 1), strong=strong, name="f")
    c = eq.P1(F)
    assert c.strong is strong
    assert all(c.target.A.is_iso(m) for m in c.rho.values())
    assert validate_modtens_1cell(c).ok
    G = eq.Q1(c)
    assert G.strong is strong and validate_vmon_functor(G).ok


def test_reconstruction(fs):
    for C in fs["vmoncat"]:
        r = eq.check_reconstruction(C)
        assert r.ok, (C.name, str(r))
        assert r.checks["reconstruct.iso"] == C.n ** 2


def test_Q_needs_an_adjunction():
    P = pt2()
    c = eq.P1(projection(P, unit_cat(P.base)))
    M = c.source
    stripped = type(M)(M.V, M.A, M.F_obj, M.F_maps, M.mu, M.halfbraid, name="bare")
    c.source = stripped
    with pytest.raises(eq.MissingAdjunction):
        eq.Q1(c)


def test_Q0_recovers_the_hom_objects():
    C = svec_cat()
    Q = eq.Q0(eq.P0(C))
    for a, b in product(C.objects, repeat=2):
        assert Q.hom(a, b) == C.hom(a, b)


def test_sign_component_transported():
    P = pt2()
    t = eq.P2(sign_transform(identity_functor(P)))
    assert t.components[1].coeffs == (Fraction(-1),)
    assert eq.Q2(t).components[1] == (Fraction(-1),)
