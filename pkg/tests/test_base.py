from fractions import Fraction

import pytest

from enrichcat.base import PresentedBase, validate_base
from enrichcat.fixtures import BASES, k4, svec
from enrichcat.strict import CompositionError


def clone(B, **over):
    kw = dict(names=B.names, unit=B.unit, tensor_table=B.tensor_table, hom_dim=B.hom_dim,
              identities=B.identities, compose_sc=B.compose_sc, tensor_sc=B.tensor_sc,
              braiding=B.braiding, duality=B.duality, name=B.name, zero=B.zero)
    kw.update(over)
    duality = kw.pop("duality")
    return PresentedBase(**kw, duality=None if duality is None else
                         {i: (d, ev, co) for i, (d, ev, co) in duality.items()})


@pytest.mark.parametrize("name", sorted(BASES))
def test_shipped_bases_validate(name):
    report = validate_base(BASES[name]())
    assert report.ok, str(report)


def test_svec_counts():
    # two objects: 2**3 instances of each hexagon, 2**2 of naturality on the diagonal homs
    r = validate_base(svec())
    assert r.checks["base.braiding.hexagon_left"] == 8
    assert r.checks["base.braiding.hexagon_right"] == 8
    assert r.checks["base.braiding.natural"] == 4
    assert r.checks["base.duality.zigzag_left"] == r.checks["base.duality.zigzag_right"] == 2


def test_svec_koszul_sign():
    # sign rule (-1)^{|u||v|}
    S = svec()
    for u in S.objects:
        for v in S.objects:
            assert S.braid(u, v).coeffs == (Fraction((-1) ** (u * v)),)


def test_plus_one_braiding_is_also_valid():
    assert validate_base(svec(odd_braiding=1)).ok


def test_bad_braiding_breaks_hexagons():
    r = validate_base(svec(odd_braiding=2))
    assert {"base.braiding.hexagon_left", "base.braiding.hexagon_right"} <= set(r.failed_checks())
    wit = [f.witness for f in r.failures if f.check == "base.braiding.hexagon_left"]
    assert ("1", "1", "1") in wit


def test_corrupted_composition():
    S = svec()
    sc = dict(S.compose_sc)
    sc[(1, 1, 1)] = ((0, 0, 0, Fraction(2)),)
    r = validate_base(clone(S, compose_sc=sc))
    assert "base.compose.unit_left" in r.failed_checks()


def test_broken_zigzag():
    K = k4()
    dual = dict(K.duality)
    d, ev, coev = dual[1]
    dual[1] = (d, (Fraction(2),), coev)
    r = validate_base(clone(K, duality=dual))
    assert "base.duality.zigzag_left" in r.failed_checks()


def test_malformed_braiding_length():
    S = svec()
    br = dict(S.braiding)
    br[(0, 1)] = ()
    r = validate_base(clone(S, braiding=br))
    assert r.malformed and not r.ok


def test_wrong_coefficient_count():
    with pytest.raises(CompositionError):
        svec().mor(0, 0, [1, 2])


def test_internal_hom_curry_roundtrip():
    K = k4()
    for u in K.objects:
        for v in K.objects:
            h = K.internal_hom(u, v)
            for w in K.objects:
                if K.tensor_table[u][w] != v:
                    continue
                for f in K.basis(K.tensor_table[u][w], v):
                    assert K.uncurry(u, v, K.curry(u, w, f)) == f
            assert h == K.tensor_table[K.dual(u)][v]
