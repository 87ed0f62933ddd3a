import pytest
from hypothesis import given
from hypothesis import strategies as st

from enrichcat import equivalence as eq
from enrichcat.enriched import identity_functor
from enrichcat.fixtures import inclusion, pt2, pt2_grading, svec_cat, twisted_identity, unit_cat
from enrichcat.grading import (FiniteGroup, GradingAssignment, cyclic, trivial_group, validate_graded_cell1,
                               validate_graded_functor, validate_graded_modtens, validate_graded_vmoncat,
                               validate_group)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cyclic_groups(n):
    assert validate_group(cyclic(n)).ok


def test_broken_associativity_located():
    G = cyclic(3)
    table = [list(r) for r in G.table]
    table[1][1] = 0
    bad = FiniteGroup(G.names, tuple(tuple(r) for r in table), 0, G.inverse)
    r = validate_group(bad)
    assert "group.assoc" in r.failed_checks()
    assert ("1", "1", "2") in [f.witness for f in r.failures if f.check == "group.assoc"]


def test_malformed_table():
    bad = FiniteGroup(("0", "1"), ((0, 1), (1, 5)), 0, (0, 1))
    assert validate_group(bad).malformed


def test_pt2_faithful_grading():
    P = pt2()
    g = pt2_grading()
    assert validate_graded_vmoncat(P, g).ok
    r = validate_graded_modtens(eq.P0(P), g)
    assert r.ok and r.checks["graded.F_neutral"] == 1


def test_misgraded_pt2_fails_faithfulness():
    r = validate_graded_vmoncat(pt2(), GradingAssignment(cyclic(2), {0: 0, 1: 0}))
    assert r.failed_checks() == ["graded.faithful"]
    (f,) = r.failures
    assert f.witness == ("1",) and "empty" in f.detail


def test_trivial_group_always_passes():
    for C in (unit_cat(), pt2()):
        g = GradingAssignment(trivial_group(), {a: 0 for a in C.objects})
        assert validate_graded_vmoncat(C, g).ok
        assert validate_graded_modtens(eq.P0(C), g).ok


def test_svec_is_not_graded_by_parity():
    S = svec_cat()
    g = GradingAssignment(cyclic(2), {0: 0, 1: 1})
    r = validate_graded_modtens(eq.P0(S), g)
    assert r.failed_checks() == ["graded.F_neutral"]
    assert [f.witness for f in r.failures] == [("1", "1")]


def test_graded_cells_and_functors():
    P, g = pt2(), pt2_grading()
    U = unit_cat(P.base)
    gU = GradingAssignment(cyclic(2), {0: 0})
    assert validate_graded_functor(inclusion(U, P), gU, g).ok
    c = eq.P1(twisted_identity(P))
    assert validate_graded_cell1(c, g, g).ok
    swapped = GradingAssignment(cyclic(2), {0: 1, 1: 0})
    assert not validate_graded_functor(identity_functor(P), g, swapped).ok


def test_from_names():
    g = GradingAssignment.from_names(cyclic(2), ["1", "x"], {"1": "0", "x": "1"})
    assert g.degree == {0: 0, 1: 1}


@given(st.integers(1, 6), st.data())
def test_cyclic_group_laws(n, data):
    G = cyclic(n)
    a, b, c = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inverse[a]) == G.identity
