"""The 2-functor from V-monoidal categories to module tensor categories and its
inverse.

``P0``/``P1``/``P2`` act on 0-, 1- and 2-cells; ``Q1``/``Q2`` invert them on
1- and 2-cells, and ``Q0`` rebuilds hom objects from a module tensor category
by representability. ``P0`` is memoized on the category so cells over the same
category share their endpoint 0-cells (comparisons use identity of endpoints).
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .enriched import (VMonCat, VMonFunctor, VTransform, compose_functors,
                       horizontal_compose, identity_functor, identity_transform,
                       underlying_functor, validate_vmon_functor, validate_vmoncat, vertical_compose)
from .linalg import Matrix, inverse, is_invertible
from .mates import MateError, TensorAdjunction, _eta_schedule, compute_adjoint
from .modtens import (ENGINE_VERSION, ModTensCat, ModTensCell1, ModTensCell2, compose_cells1,
                      horizontal_compose_cells2, identity_cell1, identity_cell2, vertical_compose_cells2)
from .report import ValidationReport
from .strict import Mor


class MissingAdjunction(ValueError):
    pass


def P0(C: VMonCat) -> ModTensCat:
    cached = getattr(C, "_modtens", None)
    if cached is not None:
        return cached
    adj = compute_adjoint(C)
    M = ModTensCat(C.base, adj.A, adj.F_obj, adj.F_maps, adj.mu, adj.halfbraid, name=C.name,
                   provenance=f"P0({C.name}) enrichcat {ENGINE_VERSION}", adjunction=adj)
    C._modtens = M
    return M


def P1(F: VMonFunctor) -> ModTensCell1:
    """Underlying functor, the same laxitor, and ``r_v`` the mate of ``eta_v`` then ``R_{1 -> F(v)}``."""
    M, N = P0(F.source), P0(F.target)
    A, B = F.source, F.target
    adjA, adjB = M.adjunction, N.adjunction
    V = A.base
    R = underlying_functor(F, M.A, N.A)
    TB = B.tensor_table
    rho = {(a, b): Mor(TB[F(a)][F(b)], F(A.tensor_table[a][b]), F.laxitor[(a, b)])
           for a, b in product(A.objects, repeat=2)}
    r = {}
    for v in M.live_objects:
        FAv = M.F(v)
        f = V.compose(adjA.eta[v], F.comp_mor(A.unit, FAv))
        r[v] = adjB.mate_fwd_to(B.unit, F(FAv), f)
    return ModTensCell1(M, N, R, rho, r, strong=F.strong, name=F.name)


def P2(t: VTransform) -> ModTensCell2:
    c1, c2 = P1(t.source), P1(t.target)
    R, S = t.source, t.target
    comps = {a: Mor(R(a), S(a), t.components[a]) for a in R.source.objects}
    return ModTensCell2(c1, c2, comps, name=t.name)


def _adjunction(M: ModTensCat) -> TensorAdjunction:
    if M.adjunction is None:
        raise MissingAdjunction(f"{M.name} carries no adjunction; reconstruct it with Q0 first")
    return M.adjunction


def Q1(c: ModTensCell1) -> VMonFunctor:
    """``R_{a->b}`` is the mate of ``(1 r_v)`` then ``rho_{a,F(v)}`` then ``R(eps_{a->b})``
    with ``v = hom(a, b)``."""
    adjA, adjB = _adjunction(c.source), _adjunction(c.target)
    A, B = adjA.cat, adjB.cat
    UB, R = c.target.A, c.R
    comps = {}
    for a, b in product(A.objects, repeat=2):
        x = A.hom(a, b)
        if not adjA.live(x):
            comps[(a, b)] = ()
            continue
        g = UB.compose(UB.tensor(UB.id(R(a)), c.r[x]), c.rho[(a, adjA.F(x))], R.apply(adjA.eps[(a, b)]))
        comps[(a, b)] = adjB.mate_bwd(R(a), x, g).coeffs
    lax = {k: m.coeffs for k, m in c.rho.items()}
    return VMonFunctor(A, B, R.obj_map, comps, lax, strong=c.strong, name=c.name)


def Q2(t: ModTensCell2) -> VTransform:
    F, G = Q1(t.source), Q1(t.target)
    return VTransform(F, G, {a: m.coeffs for a, m in t.components.items()}, name=t.name)


# -- reconstruction on 0-cells -------------------------------------------------

class _Representation:
    """Hom objects ``h(a, b)`` with universal elements ``eps_{a,b}: a F(h) -> b``."""

    def __init__(self, M: ModTensCat):
        self.M = M
        self.hom, self.eps, self._inv = {}, {}, {}

    def matrix(self, a, b, h, eps, v) -> Matrix:
        M, V, A = self.M, self.M.V, self.M.A
        cols = [A.compose(A.tensor(A.id(a), M.F_mor(f)), eps).coeffs for f in V.basis(v, h)]
        aFv = A.tensor_table[a][M.F(v)]
        return Matrix.from_columns(cols, A.dim(aFv, b))

    def represents(self, a, b, h, eps) -> bool:
        M = self.M
        for v in M.live_objects:
            if not is_invertible(self.matrix(a, b, h, eps, v)):
                return False
        return True

    def search(self, a, b):
        M, V, A = self.M, self.M.V, self.M.A
        for h in V.objects:
            if not M.live(h):
                if all(A.dim(A.tensor_table[a][M.F(v)], b) == 0 for v in M.live_objects):
                    return h, None
                continue
            src = A.tensor_table[a][M.F(h)]
            for coeffs in _eta_schedule(A.dim(src, b)):
                eps = Mor(src, b, coeffs)
                if self.represents(a, b, h, eps):
                    return h, eps
        raise MateError(f"no hom object represents ({A._nm(a)}, {A._nm(b)})")

    def solve(self, a, b, v, g: Mor) -> Mor:
        """The unique ``k: v -> h(a, b)`` whose image ``(1_a F(k))`` then ``eps`` is ``g``."""
        h = self.hom[(a, b)]
        if self.eps[(a, b)] is None:
            return Mor(v, h, ())
        key = (a, b, v)
        if key not in self._inv:
            self._inv[key] = inverse(self.matrix(a, b, h, self.eps[(a, b)], v))
        return Mor(v, h, self._inv[key].apply(g.coeffs))


def Q0(M: ModTensCat, name: str = "") -> VMonCat:
    """Rebuild a V-monoidal category whose underlying data is ``M``.

    Composition and tensor are the unique V-morphisms whose mates are the
    composites through ``mu`` (and the half-braiding, for the tensor).
    """
    V, A = M.V, M.A
    T = A.tensor_table
    rep = _Representation(M)
    for a, b in product(A.objects, repeat=2):
        rep.hom[(a, b)], rep.eps[(a, b)] = rep.search(a, b)
    hom, eps = rep.hom, rep.eps
    j = {a: rep.solve(a, a, V.unit, A.id(a)).coeffs for a in A.objects}

    comp = {}
    for a, b, c in product(A.objects, repeat=3):
        x, y, z = hom[(a, b)], hom[(b, c)], hom[(a, c)]
        xy = V.tensor_table[x][y]
        if not M.live(xy) or eps[(a, b)] is None or eps[(b, c)] is None:
            comp[(a, b, c)] = (0,) * V.dim(xy, z)
            continue
        g = A.compose(A.tensor(A.id(a), M.mu[(x, y)]), A.tensor(eps[(a, b)], A.id(M.F(y))), eps[(b, c)])
        comp[(a, b, c)] = rep.solve(a, c, xy, g).coeffs
    tens = {}
    for a, b, c, d in product(A.objects, repeat=4):
        x, y = hom[(a, c)], hom[(b, d)]
        xy, z = V.tensor_table[x][y], hom[(T[a][b], T[c][d])]
        if not M.live(xy) or eps[(a, c)] is None or eps[(b, d)] is None:
            tens[(a, b, c, d)] = (0,) * V.dim(xy, z)
            continue
        g = A.compose(A.tensor(A.id(T[a][b]), M.mu[(x, y)]),
                      A.tensor(A.id(a), M.e(b, x), A.id(M.F(y))),
                      A.tensor(eps[(a, c)], eps[(b, d)]))
        tens[(a, b, c, d)] = rep.solve(T[a][b], T[c][d], xy, g).coeffs
    C = VMonCat(V, A.names, hom, j, comp, A.unit, T, tens, name=name or f"Q0({M.name})")
    C._representation = rep
    return C


def comparison_functor(C: VMonCat, Q: VMonCat) -> VMonFunctor:
    """Identity-on-objects functor ``C -> Q`` for ``Q = Q0(P0(C))``: each component is
    the mate of the counit of ``C`` under the representation of ``Q``."""
    rep = Q._representation
    adj = P0(C).adjunction
    comps = {}
    for a, b in product(C.objects, repeat=2):
        x = C.hom(a, b)
        if not adj.live(x):
            comps[(a, b)] = (0,) * C.base.dim(x, Q.hom(a, b))
            continue
        comps[(a, b)] = rep.solve(a, b, x, adj.eps[(a, b)]).coeffs
    lax = {(a, b): Q.j[Q.tensor_table[a][b]] for a, b in product(C.objects, repeat=2)}
    return VMonFunctor(C, Q, tuple(C.objects), comps, lax, strong=True, name=f"cmp_{C.name}")


def check_reconstruction(C: VMonCat) -> ValidationReport:
    """``Q0(P0(C))`` is a V-monoidal category isomorphic to ``C`` through the comparison functor."""
    report = ValidationReport()
    Q = Q0(P0(C))
    report.extend(validate_vmoncat(Q), "reconstruct.")
    if not report.ok:
        return report
    Phi = comparison_functor(C, Q)
    report.extend(validate_vmon_functor(Phi), "reconstruct.")
    V = C.base
    for a, b in product(C.objects, repeat=2):
        x, y = C.hom(a, b), Q.hom(a, b)
        if V.is_zero_object(x) or V.is_zero_object(y):
            report.record("reconstruct.iso", V.is_zero_object(x) and V.is_zero_object(y), (C.nm(a), C.nm(b)))
        else:
            report.record("reconstruct.iso", V.is_iso(Phi.comp_mor(a, b)), (C.nm(a), C.nm(b)))
    return report


# -- round trips and 2-functoriality ---------------------------------------------

def _record_same(report, check, left, right, witness):
    ok = left.same_data(right)
    detail = ""
    if not ok and hasattr(left, "differences"):
        detail = "differs at " + ", ".join(left.differences(right)[:4])
    report.record(check, ok, witness, detail)


def check_roundtrip(functors: Iterable[VMonFunctor] = (), transforms: Iterable[VTransform] = (),
                    cells1: Iterable[ModTensCell1] = (), cells2: Iterable[ModTensCell2] = ()) -> ValidationReport:
    report = ValidationReport()
    for name in ("roundtrip.Q1P1", "roundtrip.P1Q1", "roundtrip.Q2P2", "roundtrip.P2Q2"):
        report.touch(name)
    cells1, cells2 = list(cells1), list(cells2)
    for F in functors:
        c = P1(F)
        _record_same(report, "roundtrip.Q1P1", Q1(c), F, (F.name,))
        cells1.append(c)
    for c in cells1:
        _record_same(report, "roundtrip.P1Q1", P1(Q1(c)), c, (c.name,))
        report.record("roundtrip.strong_flag", P1(Q1(c)).strong == c.strong, (c.name,))
    for t in transforms:
        cell = P2(t)
        _record_same(report, "roundtrip.Q2P2", Q2(cell), t, (t.name,))
        cells2.append(cell)
    for cell in cells2:
        _record_same(report, "roundtrip.P2Q2", P2(Q2(cell)), cell, (cell.name,))
    return report


def check_2functoriality(functors: Iterable[VMonFunctor] = (),
                         transforms: Iterable[VTransform] = ()) -> ValidationReport:
    """Unit cells, every composable pair and triple of functors, and every
    vertically or horizontally composable pair of transformations."""
    report = ValidationReport()
    for name in ("2functor.unit_1cell", "2functor.unit_2cell", "2functor.compose_1cells",
                 "2functor.vertical", "2functor.horizontal"):
        report.touch(name)
    functors, transforms = list(functors), list(transforms)
    cats = []
    for F in functors:
        for C in (F.source, F.target):
            if all(C is not D for D in cats):
                cats.append(C)
    for C in cats:
        I = identity_functor(C)
        _record_same(report, "2functor.unit_1cell", P1(I), identity_cell1(P0(C)), (C.name,))
        _record_same(report, "2functor.unit_2cell", P2(identity_transform(I)), identity_cell2(P1(I)), (C.name,))
    for F, G in product(functors, repeat=2):
        if F.target is not G.source:
            continue
        FG = compose_functors(F, G)
        _record_same(report, "2functor.compose_1cells", P1(FG), compose_cells1(P1(F), P1(G)), (F.name, G.name))
        for H in functors:
            if G.target is H.source:
                left = P1(compose_functors(FG, H))
                right = compose_cells1(compose_cells1(P1(F), P1(G)), P1(H))
                _record_same(report, "2functor.compose_1cells", left, right, (F.name, G.name, H.name))
    for t1, t2 in product(transforms, repeat=2):
        if t1.target.same_data(t2.source):
            _record_same(report, "2functor.vertical", P2(vertical_compose(t1, t2)),
                         vertical_compose_cells2(P2(t1), P2(t2)), (t1.name, t2.name))
        if t1.source.target is t2.source.source:
            _record_same(report, "2functor.horizontal", P2(horizontal_compose(t1, t2)),
                         horizontal_compose_cells2(P2(t1), P2(t2)), (t1.name, t2.name))
    return report
