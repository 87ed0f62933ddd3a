"""The eleven acceptance criteria, one test each.

The outcome of each test becomes a ``CRITERION <n> PASS|FAIL <title>`` line,
printed at the end of the pytest run (hooks in ``conftest.py``), also when this
file is run directly.
"""

import json
from itertools import product

import pytest

from enrichcat import equivalence as eq
from enrichcat.base import validate_base
from enrichcat.cli import main
from enrichcat.enriched import (braided_interchange_sides, identity_functor, identity_transform,
                                self_enrichment, validate_vmoncat)
from enrichcat.fixtures import (collapse, fixture_set, inclusion, pt2, pt2_grading, sign_transform, svec,
                                twisted_identity, unit_cat, vec, write_fixture_dir)
from enrichcat.grading import GradingAssignment, cyclic, validate_graded_modtens, validate_graded_vmoncat
from enrichcat.mates import (check_centrality, compute_adjoint, half_braiding, mate_bwd, mate_fwd,
                             validate_center_lift, verify_mate_lemmas)
from enrichcat.modtens import validate_modtens_0cell, validate_modtens_1cell
from enrichcat.strict import Mor

RESULTS = {}
TITLES = {
    1: "fixture validation of svec",
    2: "self-enrichment and sign-sensitive braided interchange",
    3: "adjoint computation",
    4: "mate calculus",
    5: "center lift",
    6: "1-cell pipeline",
    7: "round trip",
    8: "2-functoriality on a three-object chain",
    9: "gradings",
    10: "strength propagation",
    11: "CLI determinism and corrupted fixtures",
}


def line(n) -> str:
    return f"CRITERION {n} {'PASS' if RESULTS.get(n) else 'FAIL'} {TITLES[n]}"


def test_01_svec_base():
    r = validate_base(svec())
    assert r.ok and not r.failures
    for check in ("base.braiding.hexagon_left", "base.braiding.hexagon_right",
                  "base.braiding.natural", "base.duality.zigzag_left", "base.duality.zigzag_right"):
        assert r.checks[check] > 0


def test_02_self_enrichment():
    C = self_enrichment(svec())
    V, T = C.base, C.base.tensor_table
    assert validate_vmoncat(C).ok

    def plus_one(x, y):
        return Mor(T[x][y], T[y][x], (1,) * V.dim(T[x][y], T[y][x]))

    sign_flips = 0
    for objs in product(C.objects, repeat=6):
        lhs, rhs = braided_interchange_sides(C, *objs)
        assert lhs == rhs
        x2, x3 = C.hom(objs[3], objs[4]), C.hom(objs[1], objs[2])
        _, naive = braided_interchange_sides(C, *objs, crossing=plus_one(x2, x3))
        if naive != lhs and naive == -lhs:
            sign_flips += 1
    assert sign_flips > 0
    mutated = validate_vmoncat(C, crossing=plus_one)
    assert "vmoncat.braided_interchange" in mutated.failed_checks()


def test_03_adjoint():
    S = self_enrichment(svec())
    adj = compute_adjoint(S)
    assert adj.F_obj == tuple(S.objects)
    assert adj.tensored_flag
    assert all(adj.A.is_iso(m) for m in adj.mu.values())
    P = pt2()
    adjP = compute_adjoint(P)
    assert adjP.F(P.base.unit) == P.unit


def test_04_mates():
    for C in (self_enrichment(svec()), pt2()):
        adj = compute_adjoint(C)
        V = adj.V
        for a, v, b in product(C.objects, adj.live_objects, C.objects):
            for f in V.basis(v, C.hom(a, b)):
                assert mate_bwd(adj, a, v, mate_fwd(adj, a, b, f)) == f
        r = verify_mate_lemmas(adj, seed=0, trials=100)
        assert r.ok and not r.failures
        for lemma in ("composition_v", "composition_a", "compose", "tensor", "F_of_f"):
            assert r.checks[f"mates.lemma.{lemma}"] == 100, lemma


def test_05_center_lift():
    S = self_enrichment(svec())
    adj = compute_adjoint(S)
    V = adj.V
    for a, v in product(V.objects, repeat=2):
        # sign rule (-1)^{|a||v|}
        assert half_braiding(adj, a, v).coeffs == ((-1) ** (a * v),)
        assert half_braiding(adj, a, v).coeffs == V.braid(a, v).coeffs
    for u, v in product(V.objects, repeat=2):
        for f in V.basis(u, v):
            assert check_centrality(adj, f).ok
    assert validate_center_lift(adj).ok
    for C in fixture_set()["vmoncat"]:
        assert validate_modtens_0cell(eq.P0(C)).ok, C.name


def test_06_one_cells():
    P = pt2()
    for F in (inclusion(unit_cat(P.base), P), identity_functor(P)):
        r = validate_modtens_1cell(eq.P1(F))
        assert r.ok
        assert r.checks["modtens1.halfbraiding_coherence"] > 0
        assert r.checks["modtens1.action_coherence"] > 0


def test_07_roundtrip():
    fs = fixture_set()
    for F in fs["vmonfunctor"]:
        c = eq.P1(F)
        assert eq.Q1(c).same_data(F), F.name
        assert eq.P1(eq.Q1(c)).same_data(c), F.name
    P = pt2()
    idP = identity_functor(P)
    for t in (sign_transform(idP), identity_transform(idP)):
        cell = eq.P2(t)
        assert eq.Q2(cell).same_data(t)
        assert eq.P2(eq.Q2(cell)).same_data(cell)


def test_08_two_functoriality():
    V = vec()
    U, P, H = unit_cat(V), pt2(V), self_enrichment(V)
    idP, tw, col = identity_functor(P), twisted_identity(P), collapse(P, H)
    functors = [inclusion(U, P), tw, col, idP]
    transforms = [sign_transform(idP), sign_transform(tw, name="sign_twist"),
                  sign_transform(col, name="sign_collapse"), identity_transform(idP)]
    r = eq.check_2functoriality(functors, transforms)
    assert r.ok
    # unit cells on all three 0-cells; the full chain unit -> pt2 -> pt2 -> hat_vec is among the triples
    assert r.checks["2functor.unit_1cell"] == 3
    assert r.checks["2functor.compose_1cells"] > 0
    assert r.checks["2functor.vertical"] > 0 and r.checks["2functor.horizontal"] > 0


def test_09_gradings():
    P = pt2()
    g = pt2_grading()
    assert validate_graded_vmoncat(P, g).ok
    assert validate_graded_modtens(eq.P0(P), g).ok
    bad = validate_graded_vmoncat(P, GradingAssignment(cyclic(2), {0: 0, 1: 0}))
    assert bad.failed_checks() == ["graded.faithful"]
    assert bad.failures[0].witness == ("1",)


def test_10_strength():
    P = pt2()
    F = inclusion(unit_cat(P.base), P)
    assert F.strong
    c = eq.P1(F)
    assert c.strong and all(c.target.A.is_iso(m) for m in c.rho.values())
    assert validate_modtens_1cell(c).checks["modtens1.strong"] > 0
    assert eq.Q1(c).strong


def test_11_cli(tmp_path, capsys):
    fx = tmp_path / "fx"
    write_fixture_dir(fx)
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["roundtrip", str(fx), "--seed", "3", "--out", str(a)]) == 0
    assert main(["roundtrip", str(fx), "--seed", "3", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    # double the composition constant at (x, x, x)
    doc = json.loads((fx / "pt2.vcat").read_text())
    for e in doc["comp"]:
        if e["objects"] == ["x", "x", "x"]:
            e["coeffs"] = ["2"]
    (fx / "pt2.vcat").write_text(json.dumps(doc))
    capsys.readouterr()
    assert main(["roundtrip", str(fx)]) != 0
    last = capsys.readouterr().out.splitlines()[-1]
    assert last.startswith("RESULT FAIL first_suite=validate:pt2 first_check=validate:pt2/vcat.")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
