from fractions import Fraction
from itertools import product

import pytest

from enrichcat.enriched import (NotComposable, VTransform, braided_interchange_sides, compose_functors,
                                horizontal_compose, identity_functor, identity_transform, self_enrichment,
                                trace, underlying_functor, validate_ord_functor, validate_vcat,
                                validate_vmon_functor, validate_vmoncat, validate_vtransform,
                                vertical_compose)
from enrichcat.fixtures import (BASES, fixture_set, inclusion, parity_functor, parity_transform,
                                projection, pt2, sign_transform, svec_cat, twisted_identity,
                                unit_cat, vec)
from enrichcat.report import ValidationReport
from enrichcat.strict import Mor


def plus_one(V):
    T = V.tensor_table
    return lambda x, y: Mor(T[x][y], T[y][x], (Fraction(1),) * V.dim(T[x][y], T[y][x]))


@pytest.mark.parametrize("name", sorted(BASES))
def test_self_enrichment_validates(name):
    report = validate_vmoncat(self_enrichment(BASES[name]()))
    assert report.ok, str(report)
    assert report.checks["vmoncat.braided_interchange"] > 0


def test_svec_interchange_sign_sensitivity():
    C = svec_cat()
    V = C.base
    flips = []
    for objs in product(C.objects, repeat=6):
        lhs, rhs = braided_interchange_sides(C, *objs)
        assert lhs == rhs
        _, naive = braided_interchange_sides(C, *objs, crossing=plus_one(V)(C.hom(objs[3], objs[4]),
                                                                            C.hom(objs[1], objs[2])))
        if lhs != naive:
            assert lhs == -naive
            flips.append(objs)
    assert flips
    mutated = validate_vmoncat(C, crossing=plus_one(V))
    assert "vmoncat.braided_interchange" in mutated.failed_checks()


def test_vec_interchange_insensitive_to_crossing():
    # symmetric with trivial signs: replacing the braiding by +1 changes nothing
    assert validate_vmoncat(self_enrichment(vec()), crossing=plus_one(vec())).ok


def test_pointed_fixtures_validate():
    for C in (unit_cat(), pt2()):
        assert validate_vmoncat(C).ok


def test_corrupted_composition_located():
    C = pt2()
    C.comp[(1, 1, 1)] = (Fraction(2),)
    r = validate_vcat(C)
    assert not r.ok
    assert all("x" in f.witness for f in r.failures)


FIXTURES = fixture_set()


@pytest.mark.parametrize("F", FIXTURES["vmonfunctor"], ids=lambda F: F.name)
def test_shipped_functors_validate(F):
    assert validate_vmon_functor(F).ok


@pytest.mark.parametrize("t", FIXTURES["vtransform"], ids=lambda t: t.name)
def test_shipped_transforms_validate(t):
    assert validate_vtransform(t).ok


@pytest.mark.parametrize("C", FIXTURES["vmoncat"], ids=lambda C: C.name)
def test_shipped_categories_validate(C):
    assert validate_vmoncat(C).ok


def test_laxitor_on_unit_mutation_fails():
    P = pt2()
    F = twisted_identity(P, scale=1)
    F.laxitor[(0, 1)] = (Fraction(2),)
    failed = validate_vmon_functor(F).failed_checks()
    assert "functor.laxitor_assoc" in failed and "functor.laxitor_unital" in failed


def test_rescaled_xx_laxitor_is_a_cocycle():
    assert validate_vmon_functor(twisted_identity(pt2(), scale=2)).ok


def test_non_monoidal_transform_fails():
    F = identity_functor(pt2())
    t = sign_transform(F, value=2)
    r = validate_vtransform(t)
    assert r.failed_checks() == ["transform.monoidal"]
    assert validate_vtransform(t, monoidal=False).ok


def test_functor_composition():
    U, P = unit_cat(), pt2()
    I, Pr = inclusion(U, P), projection(P, U)
    IP = compose_functors(I, Pr)
    assert validate_vmon_functor(IP).ok
    # the unit object of pt2 has no other maps, so going there and back is the identity
    assert IP.same_data(identity_functor(U))
    with pytest.raises(NotComposable):
        compose_functors(I, I)
    assert validate_vmon_functor(compose_functors(Pr, I)).ok


def test_transform_compositions():
    P = pt2()
    idP, tw = identity_functor(P), twisted_identity(P)
    s = sign_transform(idP)
    v = vertical_compose(s, s)
    assert v.components == identity_transform(idP).components
    h = horizontal_compose(s, sign_transform(tw, name="s2"))
    assert validate_vtransform(h).ok
    assert h.components[1] == (Fraction(1),)


def test_parity_transform_is_natural_and_monoidal():
    S = svec_cat()
    t = parity_transform(identity_functor(S), parity_functor(S))
    assert validate_vtransform(t).ok
    assert validate_vtransform(vertical_compose(t, VTransform(t.target, t.source, t.components))).ok


def test_underlying_and_trace():
    S = svec_cat()
    A = S.underlying()
    report = ValidationReport()
    A.validate_category(report, "u")
    A.validate_monoidal(report, "u")
    assert report.ok
    assert [A.dim(a, b) for a in A.objects for b in A.objects] == [1, 0, 0, 1]
    Tr = trace(S)
    assert Tr.obj_map == (0, 1)
    assert validate_ord_functor(Tr).ok
    assert validate_ord_functor(underlying_functor(parity_functor(S))).ok


def test_underlying_of_self_enrichment_matches_base():
    for name in ("svec", "k4", "dual"):
        V = BASES[name]()
        A = self_enrichment(V).underlying()
        for a, b in product(V.objects, repeat=2):
            assert A.dim(a, b) == V.dim(a, b)
