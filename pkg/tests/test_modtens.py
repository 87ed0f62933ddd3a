from fractions import Fraction

import pytest

from enrichcat import equivalence as eq
from enrichcat.enriched import compose_functors, identity_functor, self_enrichment
from enrichcat.fixtures import (BASES, fixture_set, inclusion, k4, projection, pt2, sign_transform,
                                twisted_identity, unit_cat)
from enrichcat.modtens import (ModTensCat, ModTensCell1, ModTensCell2, compose_cells1, horizontal_compose_cells2,
                               identity_cell1, identity_cell2, validate_modtens_0cell, validate_modtens_1cell,
                               validate_modtens_2cell, vertical_compose_cells2)


@pytest.fixture(scope="module")
def fs():
    return fixture_set()


def test_every_fixture_category_gives_a_valid_0cell(fs):
    for C in fs["vmoncat"]:
        M = eq.P0(C)
        r = validate_modtens_0cell(M)
        assert r.ok, (C.name, str(r))
        assert M.provenance.startswith(f"P0({C.name})")


def test_braided_orientation_recorded(fs):
    notes = []
    for C in fs["vmoncat"]:
        notes += validate_modtens_0cell(eq.P0(C)).notes
    assert any("primary=yes" in n for n in notes)
    assert all("primary=yes" in n for n in notes)


def test_mirror_orientation_fails_on_k4():
    r = validate_modtens_0cell(eq.P0(self_enrichment(k4())))
    assert any("mirror=no" in n for n in r.notes)


def copy_0cell(M, **over):
    kw = dict(V=M.V, A=M.A, F_obj=M.F_obj, F_maps=M.F_maps, mu=dict(M.mu), halfbraid=dict(M.halfbraid))
    kw.update(over)
    return ModTensCat(**kw, name="bad")


def test_corrupted_oplaxitor_breaks_coassociativity():
    M = eq.P0(self_enrichment(k4()))
    mu = dict(M.mu)
    mu[(1, 2)] = 3 * mu[(1, 2)]
    r = validate_modtens_0cell(copy_0cell(M, mu=mu))
    assert "modtens0.mu.coassoc" in r.failed_checks()
    assert ("10", "10", "01") in [f.witness for f in r.failures]


def test_corrupted_half_braiding_unit():
    M = eq.P0(self_enrichment(BASES["svec"]()))
    hb = dict(M.halfbraid)
    hb[(0, 1)] = -1 * hb[(0, 1)]
    assert "modtens0.e.unit" in validate_modtens_0cell(copy_0cell(M, halfbraid=hb)).failed_checks()


def test_P1_of_inclusion_and_identity():
    P = pt2()
    U = unit_cat(P.base)
    for F in (inclusion(U, P), identity_functor(P)):
        c = eq.P1(F)
        r = validate_modtens_1cell(c)
        assert r.ok, str(r)
        assert r.checks["modtens1.halfbraiding_coherence"] > 0
        assert r.checks["modtens1.action_coherence"] > 0
        one = P.base.unit
        assert c.r[one] == c.target.A.id(c.target.F(one))


def test_scaled_r_breaks_action_coherence():
    P = pt2()
    c = eq.P1(inclusion(unit_cat(P.base), P))
    bad = ModTensCell1(c.source, c.target, c.R, c.rho, {v: 2 * m for v, m in c.r.items()})
    assert "modtens1.action_coherence" in validate_modtens_1cell(bad).failed_checks()


def test_P2_sign_and_scaled():
    P = pt2()
    t = eq.P2(sign_transform(identity_functor(P)))
    assert validate_modtens_2cell(t).ok
    assert t.components[1].coeffs == (Fraction(-1),)
    bad = ModTensCell2(t.source, t.target, {0: t.components[0], 1: 2 * t.components[1]})
    assert validate_modtens_2cell(bad).failed_checks() == ["modtens2.monoidal"]


def test_unit_cells_are_neutral():
    P = pt2()
    U = unit_cat(P.base)
    c = eq.P1(inclusion(U, P))
    assert compose_cells1(c, identity_cell1(c.target)).same_data(c)
    assert compose_cells1(identity_cell1(c.source), c).same_data(c)
    t = eq.P2(sign_transform(identity_functor(P)))
    assert vertical_compose_cells2(identity_cell2(t.source), t).same_data(t)
    assert vertical_compose_cells2(t, identity_cell2(t.target)).same_data(t)


def test_three_chain_composition_is_associative_and_valid():
    P = pt2()
    U = unit_cat(P.base)
    I, T, Pr = eq.P1(inclusion(U, P)), eq.P1(twisted_identity(P)), eq.P1(projection(P, U))
    left = compose_cells1(compose_cells1(I, T), Pr)
    right = compose_cells1(I, compose_cells1(T, Pr))
    assert left.same_data(right)
    for c in (left, compose_cells1(T, T), compose_cells1(Pr, I)):
        assert validate_modtens_1cell(c).ok


def test_horizontal_composite_of_signs():
    P = pt2()
    idP, tw = identity_functor(P), twisted_identity(P)
    s1, s2 = eq.P2(sign_transform(idP)), eq.P2(sign_transform(tw))
    h = horizontal_compose_cells2(s1, s2)
    assert validate_modtens_2cell(h).ok
    assert h.components[1].coeffs == (Fraction(1),)
    # composite functor of the endpoints is itself a valid 1-cell
    assert validate_modtens_1cell(eq.P1(compose_functors(idP, tw))).ok
