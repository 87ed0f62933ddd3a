"""Small worked examples for each layer, on the shipped fixtures."""

from fractions import Fraction

from enrichcat import equivalence as eq
from enrichcat.base import compose_v, internal_hom, tensor_v, validate_base
from enrichcat.enriched import (compose_functors, horizontal_compose, identity_functor, identity_transform,
                                self_enrichment, trace, underlying_functor, validate_vcat, vertical_compose)
from enrichcat.fixtures import inclusion, pt2, sign_transform, svec, triv, unit_cat
from enrichcat.linalg import Matrix, is_invertible, solve
from enrichcat.mates import compute_adjoint, counit
from enrichcat.modtens import identity_cell1


def test_solve_examples():
    assert solve(Matrix.identity(2), [3, 5]) == (3, 5)
    assert solve(Matrix.zeros(1, 1), [1]) is None
    assert solve(Matrix.from_rows([[2, 0], [0, 4]]), [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    # free variables are set to zero
    assert solve(Matrix.from_rows([[1, 1]]), [2]) == (2, 0)


def test_invertibility_examples():
    assert is_invertible(Matrix.identity(3))
    assert not is_invertible(Matrix.zeros(2, 3))
    assert not is_invertible(Matrix.from_rows([[1, 2], [2, 4]]))


def test_svec_arithmetic():
    S = svec()
    two, three = 2 * S.id(0), 3 * S.id(0)
    assert compose_v(S, two, three) == 6 * S.id(0)
    assert tensor_v(S, 2 * S.id(1), S.id(1)) == 2 * S.id(0)
    assert tensor_v(S, S.id(0), S.id(1)) == S.id(1)
    assert internal_hom(S, 1, 1) == 0 and internal_hom(S, 0, 1) == 1
    assert all(internal_hom(S, S.unit, v) == v for v in S.objects)


def test_corrupted_unit_composition():
    S = svec()
    S.compose_sc[(0, 0, 0)] = ((0, 0, 0, Fraction(0)),)
    assert "base.compose.unit_left" in validate_base(S).failed_checks()


def test_negated_odd_composition_breaks_associativity():
    C = self_enrichment(svec())
    C.comp[(1, 0, 1)] = tuple(-c for c in C.comp[(1, 0, 1)])
    r = validate_vcat(C)
    assert r.failed_checks() == ["vcat.assoc"]
    assert ("0", "1", "0", "1") in [f.witness for f in r.failures]


def test_triv_self_enrichment():
    C = self_enrichment(triv())
    assert C.j == {0: (Fraction(1),)}
    adj = compute_adjoint(C)
    assert adj.F_obj == (0,) and adj.eta[0].coeffs == (Fraction(1),)
    assert counit(adj, 0, 0).coeffs == (Fraction(1),)


def test_tensor_of_odd_homs_picks_up_the_sign():
    C = self_enrichment(svec())
    # hom(0,1) hom(1,0) -> hom(0 1, 1 0): the crossing passes two odd strands
    assert C.tens_mor(0, 1, 1, 0).coeffs == (Fraction(-1),)
    assert C.tens_mor(1, 0, 0, 1).coeffs == (Fraction(1),)


def test_trace_examples():
    P = pt2()
    Tr = trace(P)
    assert P.base.is_zero_object(Tr(1))
    assert Tr.apply(P.underlying().id(0)) == P.base.id(Tr(0))
    S = self_enrichment(svec())
    assert trace(S).obj_map == tuple(S.objects)


def test_underlying_functor_of_identity():
    P = pt2()
    assert underlying_functor(identity_functor(P)).same_data(eq.P1(identity_functor(P)).R)


def test_composition_with_identities():
    P = pt2()
    U = unit_cat(P.base)
    F = inclusion(U, P)
    assert compose_functors(F, identity_functor(P)).laxitor == F.laxitor
    assert compose_functors(identity_functor(U), F).components == F.components


def test_transform_unit_laws_and_sign_squared():
    P = pt2()
    idP = identity_functor(P)
    s = sign_transform(idP)
    i = identity_transform(idP)
    assert vertical_compose(i, s).components == s.components
    assert horizontal_compose(i, i).components == i.components
    assert horizontal_compose(s, s).components[1] == (Fraction(1),)


def test_P_on_identities():
    P = pt2()
    assert eq.P1(identity_functor(P)).same_data(identity_cell1(eq.P0(P)))
    M = eq.P0(self_enrichment(triv()))
    assert M.F_obj == (0,) and all(m == M.A.id(0) for m in M.mu.values())


def test_hom_of_unit_in_self_enrichment():
    for V in (svec(), triv()):
        C = self_enrichment(V)
        assert all(C.hom(V.unit, v) == v for v in C.objects)
